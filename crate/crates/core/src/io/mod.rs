//! Facet files, cofiltration files and report emission.

mod cofiltration_file;
mod facets;
mod report;

pub use cofiltration_file::{
    parse_cofiltration, parse_cofiltration_str, CofiltrationFile, StepSpec,
};
pub use facets::{parse_facets, parse_facets_str, write_facets};
pub use report::{barcode_text, barcodes_svg, canonical_json, emit_barcode, BarcodeReport, Format};
