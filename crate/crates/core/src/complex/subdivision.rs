use super::poset::h_face_poset;
use super::{Simplex, SimplicialComplex, StrataSet, Vertex};
use crate::error::{Error, Result};

/// A (strata-restricted) barycentric subdivision together with the
/// dictionary from its vertex ids to the simplices they stand for:
/// vertex `k` is the barycentre of `labels[k]`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub labels: Vec<Simplex>,
}

impl Subdivision {
    pub fn label(&self, v: Vertex) -> &Simplex {
        &self.labels[v as usize]
    }
}

/// `K(X)`: vertices are the simplices of `X`, simplices are chains of
/// distinct simplices under inclusion.
pub fn barycentric_subdivision(x: &SimplicialComplex) -> Subdivision {
    let labels: Vec<Simplex> = x.all_simplices().cloned().collect();
    let complex = subdivide_within(x, None, &labels).expect("labels enumerate the complex");
    Subdivision { complex, labels }
}

/// `K(X)^h`: the full subcomplex of `K(X)` on the barycentres of simplices
/// whose dimension lies in `strata`.
pub fn h_barycentric_subdivision(x: &SimplicialComplex, strata: &StrataSet) -> Subdivision {
    let labels: Vec<Simplex> = x.all_simplices().cloned().collect();
    let complex = subdivide_within(x, Some(strata), &labels).expect("labels enumerate the complex");
    Subdivision { complex, labels }
}

/// Chain complex of `X` restricted to `strata` (all dimensions when `None`),
/// with vertex ids taken from `labels`, a sorted simplex list containing
/// every simplex of `X`. Passing the labels of a larger complex makes the
/// result a literal subcomplex of that complex's subdivision.
pub fn subdivide_within(
    x: &SimplicialComplex,
    strata: Option<&StrataSet>,
    labels: &[Simplex],
) -> Result<SimplicialComplex> {
    if x.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    let strata = match strata {
        Some(s) => s.clone(),
        None => StrataSet::full(x.dim() as usize),
    };
    let fp = h_face_poset(x, &strata);
    let ids = fp
        .simplices
        .iter()
        .map(|s| {
            labels.binary_search(s).map(|k| k as Vertex).map_err(|_| {
                Error::invalid(format!("simplex {s} missing from the label dictionary"))
            })
        })
        .collect::<Result<Vec<Vertex>>>()?;

    // covers join consecutive nonempty strata, so maximal chains are the
    // cover paths from a bottom-stratum point to a point without covers
    let n = fp.simplices.len();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut has_lower = vec![false; n];
    for &(lo, hi) in fp.poset.covers() {
        up[lo].push(hi);
        has_lower[hi] = true;
    }
    let mut facets = Vec::new();
    let mut path = Vec::new();
    for start in (0..n).filter(|&p| !has_lower[p]) {
        path.push(start);
        maximal_chains(&up, &mut path, &ids, &mut facets);
        path.pop();
    }
    Ok(SimplicialComplex::from_maximal(facets))
}

fn maximal_chains(
    up: &[Vec<usize>],
    path: &mut Vec<usize>,
    ids: &[Vertex],
    out: &mut Vec<Simplex>,
) {
    let top = *path.last().expect("path is non-empty");
    if up[top].is_empty() {
        // label ids grow with dimension, so the chain is already sorted
        out.push(Simplex::from_sorted(path.iter().map(|&p| ids[p]).collect()));
        return;
    }
    for &q in &up[top] {
        path.push(q);
        maximal_chains(up, path, ids, out);
        path.pop();
    }
}
