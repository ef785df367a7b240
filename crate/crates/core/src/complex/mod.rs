//! Finite abstract simplicial complexes and their combinatorics.

#[allow(clippy::module_inception)]
mod complex;
pub mod fixtures;
mod poset;
mod simplex;
mod strata;
mod subdivision;

pub use complex::SimplicialComplex;
pub(crate) use complex::UnionFind;
pub use poset::{face_poset, h_face_poset, FacePoset, Poset};
pub use simplex::{Simplex, Vertex};
pub use strata::StrataSet;
pub use subdivision::{
    barycentric_subdivision, h_barycentric_subdivision, subdivide_within, Subdivision,
};
