//! Refined cohomological invariants of finite simplicial complexes.
//!
//! Everything is computed exactly over a prime field Z/pZ (Z/2Z by default):
//!
//! * ordinary Betti numbers and induced maps of simplicial morphisms,
//! * thick Betti numbers `β^{n,h}` (cohomology of coskeleta) and the barcode
//!   of the coskeletal tower,
//! * cohesive Betti numbers `β^{n,h}` of strata-restricted face posets, the
//!   comparison map `H^n(X) -> H^n(P_X^h)` and its image rank,
//! * image/kernel/cokernel barcodes of ladders built from attack
//!   cofiltrations, and the attack x thickness grid.

pub mod attack;
pub mod cochain;
pub mod complex;
pub mod error;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod persistence;

pub use error::{Error, ErrorClass, Result};
pub use linalg::PrimeField;
