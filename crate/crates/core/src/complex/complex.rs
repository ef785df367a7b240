use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use super::simplex::{Simplex, Vertex};
use crate::error::{Error, Result};

/// A finite abstract simplicial complex stored by its facets.
///
/// The per-dimension face lists are enumerated on first use and cached;
/// apart from that cache the value is immutable.
#[derive(Clone)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    by_dim: OnceLock<Vec<Vec<Simplex>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            facets: Vec::new(),
            by_dim: OnceLock::new(),
        }
    }

    /// Builds a complex from a facet list. Lists are sorted, repeated lists
    /// merged and lists contained in another one dropped.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<Vertex>>,
    {
        let simplices = facets
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                Simplex::new(f.into()).map_err(|e| Error::invalid(format!("facet {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simplices(simplices))
    }

    /// Like [`from_facets`](Self::from_facets) for canonical simplices.
    pub fn from_simplices(mut simplices: Vec<Simplex>) -> Self {
        simplices.sort_unstable();
        simplices.dedup();
        // larger simplices last; keep those not contained in a larger kept one
        let mut kept: Vec<Simplex> = Vec::with_capacity(simplices.len());
        for s in simplices.into_iter().rev() {
            if !kept.iter().any(|k| k.dim() > s.dim() && s.is_face_of(k)) {
                kept.push(s);
            }
        }
        kept.reverse();
        SimplicialComplex {
            facets: kept,
            by_dim: OnceLock::new(),
        }
    }

    /// The caller guarantees no simplex in `facets` is a face of another.
    pub(crate) fn from_maximal(mut facets: Vec<Simplex>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        SimplicialComplex {
            facets,
            by_dim: OnceLock::new(),
        }
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.dim() as isize)
            .max()
            .unwrap_or(-1)
    }

    fn by_dim(&self) -> &Vec<Vec<Simplex>> {
        self.by_dim.get_or_init(|| {
            let top = self.dim();
            if top < 0 {
                return Vec::new();
            }
            let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); top as usize + 1];
            for f in &self.facets {
                for face in f.all_faces() {
                    sets[face.dim()].insert(face);
                }
            }
            sets.into_iter()
                .map(|s| {
                    let mut v: Vec<Simplex> = s.into_iter().collect();
                    v.sort_unstable();
                    v
                })
                .collect()
        })
    }

    /// The `n`-simplices in lexicographic order (empty above the dimension).
    pub fn simplices(&self, n: usize) -> &[Simplex] {
        self.by_dim().get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All simplices, dimension-major.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim().iter().flatten()
    }

    pub fn num_simplices(&self) -> usize {
        self.by_dim().iter().map(Vec::len).sum()
    }

    /// Number of simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim().iter().map(Vec::len).collect()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        self.simplices(0).iter().map(|s| s.vertices()[0]).collect()
    }

    /// Position of `s` among the simplices of its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices(s.dim()).binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }

    pub(crate) fn require(&self, s: &Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::invalid(format!("simplex {s} is not in the complex")))
        }
    }

    /// The `h`-coskeleton: simplices lying in some simplex of dimension `>= h`.
    pub fn coskeleton(&self, h: usize) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|f| f.dim() >= h)
            .cloned()
            .collect();
        SimplicialComplex {
            facets,
            by_dim: OnceLock::new(),
        }
    }

    /// Whether `a` and `b` share a common `h`-dimensional face.
    pub fn lower_adjacent(&self, a: &Simplex, b: &Simplex, h: usize) -> Result<bool> {
        self.require(a)?;
        self.require(b)?;
        Ok(a.intersection_len(b) > h)
    }

    /// Partition of the `h0`-simplices into `(h0, h1)`-connected components:
    /// two `h0`-simplices are related when a walk of `h0`-lower adjacent
    /// simplices of dimension `>= h1` leads from one to the other.
    ///
    /// Classes are sorted internally and ordered by their first member.
    pub fn connected_components(&self, h0: usize, h1: usize) -> Result<Vec<Vec<Simplex>>> {
        if h0 >= h1 {
            return Err(Error::invalid(format!(
                "need h0 < h1, got h0={h0}, h1={h1}"
            )));
        }
        let base = self.simplices(h0);
        let mut uf = UnionFind::new(base.len());
        for f in self.facets.iter().filter(|f| f.dim() >= h1) {
            let mut faces = f.faces_of_dim(h0).into_iter().map(|s| {
                base.binary_search(&s)
                    .expect("faces of facets are simplices")
            });
            if let Some(first) = faces.next() {
                for other in faces {
                    uf.union(first, other);
                }
            }
        }
        Ok(uf
            .classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| base[i].clone()).collect())
            .collect())
    }

    /// `st(σ)`: every simplex having `σ` as a face, `σ` included.
    pub fn star(&self, sigma: &Simplex) -> Result<Vec<Simplex>> {
        self.require(sigma)?;
        Ok(self
            .by_dim()
            .iter()
            .skip(sigma.dim())
            .flatten()
            .filter(|t| sigma.is_face_of(t))
            .cloned()
            .collect())
    }

    /// The subcomplex `X \ st(σ)`. Removing a simplex not in the complex
    /// returns the complex unchanged.
    pub fn remove_star(&self, sigma: &Simplex) -> SimplicialComplex {
        let mut out = Vec::with_capacity(self.facets.len() + sigma.vertices().len());
        for f in &self.facets {
            if sigma.is_face_of(f) {
                // maximal faces of f avoiding σ: drop one vertex of σ
                for &v in sigma.vertices() {
                    if f.vertices().len() > 1 {
                        let rest = f.vertices().iter().copied().filter(|&w| w != v).collect();
                        out.push(Simplex::from_sorted(rest));
                    }
                }
            } else {
                out.push(f.clone());
            }
        }
        SimplicialComplex::from_simplices(out)
    }

    /// Applies an injective vertex relabelling.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|s| {
                s.map_vertices(&f)
                    .map(|(img, _)| img)
                    .ok_or_else(|| Error::invalid("relabelling is not injective"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_simplices(facets))
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.facets)
            .finish()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller index becomes the root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Classes as sorted index lists, ordered by their smallest member.
    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = self.find(i);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i);
        }
        out
    }
}
