//! Exact sparse linear algebra over prime fields.

mod field;
mod matrix;
mod reduce;
mod subspace;

pub use field::PrimeField;
pub use matrix::{axpy, entry, scale, sparse_from_dense, FpMatrix, SparseVec};
pub use reduce::{rank, ColumnReduction};
pub use subspace::{
    image_basis, kernel_basis, quotient_map, restrict_map, solve_in_image, Quotient, SubspaceBasis,
};
