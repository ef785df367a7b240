//! One-parameter persistence over finite index sets, ladders and grids.

mod barcode;
mod bigrid;
mod ladder;
mod tower;

pub use barcode::{barcode, Bar, Barcode};
pub use bigrid::{hilbert_function, BiGrid, Line};
pub use ladder::{ladder_cokernel, ladder_image, ladder_kernel, Ladder};
pub use tower::Tower;
