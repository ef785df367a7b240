//! Small named complexes used throughout the tests and the documentation.

use super::SimplicialComplex;

fn build(facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec()))
        .expect("fixture facets are valid")
}

/// Two triangles sharing vertex 4, a square hole 1-2-4-3 and a pendant
/// vertex 1 outside every triangle. Six vertices, eight edges.
pub fn l6() -> SimplicialComplex {
    build(&[&[3, 4, 5], &[2, 4, 6], &[1, 2], &[1, 3], &[2, 4], &[3, 4]])
}

/// Same cohesive profile as [`l6`], but the two triangles are disjoint.
pub fn r6() -> SimplicialComplex {
    build(&[&[3, 4, 5], &[1, 2, 7], &[2, 4], &[1, 3]])
}

/// Two triangles glued along the edge 2-4 (A=1, B=2, C=3, D=4).
pub fn butterfly() -> SimplicialComplex {
    build(&[&[1, 2, 4], &[2, 3, 4]])
}

/// Three corner triangles of a subdivided triangle around an unfilled
/// middle triangle 4-5-6.
pub fn triforce() -> SimplicialComplex {
    build(&[&[1, 4, 6], &[2, 4, 5], &[3, 5, 6]])
}

/// [`triforce`] with the corner triangle 3-5-6 replaced by its boundary.
pub fn triforce_hollow_corner() -> SimplicialComplex {
    build(&[&[1, 4, 6], &[2, 4, 5], &[3, 5], &[5, 6], &[3, 6]])
}

/// Triangulated annulus: inner cycle 1-2-3, outer cycle 4-5-6, six
/// triangles consecutively sharing edges around the hole.
pub fn annulus() -> SimplicialComplex {
    build(&[
        &[1, 2, 4],
        &[2, 4, 5],
        &[2, 3, 5],
        &[3, 5, 6],
        &[1, 3, 6],
        &[1, 4, 6],
    ])
}
