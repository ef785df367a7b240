use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Vertex identifier. Vertices are totally ordered by their integer value.
pub type Vertex = u32;

/// A simplex in canonical form: a non-empty, strictly increasing vertex list.
///
/// Simplices order dimension-major, then lexicographically on the vertex
/// list, which is the column order used for every cochain basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Sorts the vertices; rejects empty lists and repeated vertices.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("a simplex needs at least one vertex"));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "repeated vertex in simplex {vertices:?}"
            )));
        }
        Ok(Simplex(vertices))
    }

    /// The caller guarantees `vertices` is non-empty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    #[inline]
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The face relation `self ⊆ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// Number of shared vertices.
    pub fn intersection_len(&self, other: &Simplex) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// The face obtained by deleting the vertex in position `j`; `None` for a
    /// vertex (the empty set is not a simplex).
    pub fn facet_without(&self, j: usize) -> Option<Simplex> {
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(j);
        Some(Simplex(v))
    }

    /// Codimension-one faces, indexed by the position of the deleted vertex.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).filter_map(move |j| self.facet_without(j))
    }

    /// All faces of dimension `k` (subsets of size `k + 1`), in lexicographic order.
    pub fn faces_of_dim(&self, k: usize) -> Vec<Simplex> {
        let n = self.0.len();
        if k + 1 > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..=k).collect();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            // advance to the next combination
            let mut pos = k as isize;
            while pos >= 0 && idx[pos as usize] == n - (k + 1) + pos as usize {
                pos -= 1;
            }
            if pos < 0 {
                break;
            }
            let p = pos as usize;
            idx[p] += 1;
            for q in p + 1..=k {
                idx[q] = idx[q - 1] + 1;
            }
        }
        out
    }

    /// Every non-empty face, the simplex itself included.
    pub fn all_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn max_vertex(&self) -> Vertex {
        *self.0.last().expect("simplices are non-empty")
    }

    /// Applies a vertex map; returns `None` if `f` is not injective on `self`.
    /// On success also returns whether the sorting permutation is odd.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Option<(Simplex, bool)> {
        let mut image: Vec<Vertex> = self.0.iter().map(|&v| f(v)).collect();
        let odd = permutation_parity_sort(&mut image);
        if image.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Simplex(image), odd))
    }
}

/// Sorts in place and reports whether the sorting permutation is odd
/// (counted as the parity of the number of inversions).
pub(crate) fn permutation_parity_sort(v: &mut [Vertex]) -> bool {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    v.sort_unstable();
    inversions % 2 == 1
}

pub(crate) fn is_sorted_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
