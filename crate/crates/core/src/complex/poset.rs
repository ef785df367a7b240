use std::collections::BTreeSet;

use super::{Simplex, SimplicialComplex, StrataSet};
use crate::error::{Error, Result};

/// A finite poset given by graded points and generating cover pairs.
///
/// The full strict order is stored as sorted up-sets. Grades must increase
/// strictly along every cover, which also rules out cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    grades: Vec<usize>,
    covers: Vec<(usize, usize)>,
    above: Vec<Vec<usize>>,
}

impl Poset {
    pub fn new(grades: Vec<usize>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = grades.len();
        let mut direct: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(lo, hi) in &covers {
            if lo >= n || hi >= n {
                return Err(Error::invalid(format!(
                    "cover ({lo},{hi}) references a missing point"
                )));
            }
            if grades[hi] <= grades[lo] {
                return Err(Error::invalid(format!(
                    "grade does not increase along cover ({lo},{hi})"
                )));
            }
            direct[lo].insert(hi);
        }
        // close upwards, highest grade first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(grades[p]));
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &p in &order {
            let mut up: BTreeSet<usize> = BTreeSet::new();
            for &q in &direct[p] {
                up.insert(q);
                up.extend(above[q].iter().copied());
            }
            above[p] = up.into_iter().collect();
        }
        Ok(Poset {
            grades,
            covers,
            above,
        })
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn grade(&self, p: usize) -> usize {
        self.grades[p]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict order `p < q`.
    pub fn less(&self, p: usize, q: usize) -> bool {
        self.above[p].binary_search(&q).is_ok()
    }

    /// Points strictly above `p`, sorted by index.
    pub fn above(&self, p: usize) -> &[usize] {
        &self.above[p]
    }

    /// Number of strictly comparable pairs.
    pub fn relation_count(&self) -> usize {
        self.above.iter().map(Vec::len).sum()
    }

    /// Strictly increasing chains `p_0 < ... < p_n` of `n + 1` points, each
    /// listed bottom to top, sorted lexicographically by point indices.
    pub fn chains(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n + 1);
        for p in 0..self.len() {
            current.push(p);
            self.extend_chain(&mut current, n + 1, &mut out);
            current.pop();
        }
        out.sort_unstable();
        out
    }

    fn extend_chain(&self, current: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let top = *current.last().expect("chain is non-empty");
        for &q in &self.above[top] {
            current.push(q);
            self.extend_chain(current, len, out);
            current.pop();
        }
    }

    /// Length of the longest chain minus one, `-1` if empty.
    pub fn height(&self) -> isize {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(self.grades[p]));
        let mut longest = vec![0isize; n];
        for &p in &order {
            longest[p] = self.above[p]
                .iter()
                .map(|&q| longest[q] + 1)
                .max()
                .unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(-1)
    }
}

/// A poset whose points are simplices, with grade equal to dimension.
/// Points are listed in simplex order, so chains have increasing indices.
#[derive(Clone, Debug)]
pub struct FacePoset {
    pub poset: Poset,
    pub simplices: Vec<Simplex>,
}

/// The face poset of `X`: all simplices ordered by inclusion.
pub fn face_poset(x: &SimplicialComplex) -> FacePoset {
    let top = x.dim();
    let strata = if top < 0 {
        StrataSet::full(0)
    } else {
        StrataSet::full(top as usize)
    };
    h_face_poset(x, &strata)
}

/// The subposet of simplices whose dimension lies in `strata`.
///
/// Covers join simplices of consecutive nonempty strata; their transitive
/// closure is the inclusion order restricted to the strata.
pub fn h_face_poset(x: &SimplicialComplex, strata: &StrataSet) -> FacePoset {
    let dims = strata.up_to(x.dim());
    let simplices: Vec<Simplex> = dims
        .iter()
        .flat_map(|&d| x.simplices(d).iter().cloned())
        .collect();
    let grades = simplices.iter().map(Simplex::dim).collect();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let start = *acc;
            *acc += x.simplices(d).len();
            Some(start)
        })
        .collect();
    let mut covers = Vec::new();
    for (k, pair) in dims.windows(2).enumerate() {
        let (lo, hi) = (pair[0], pair[1]);
        for (j, tau) in x.simplices(hi).iter().enumerate() {
            for sigma in tau.faces_of_dim(lo) {
                let i = x
                    .index_of(&sigma)
                    .expect("faces of simplices are simplices");
                covers.push((offsets[k] + i, offsets[k + 1] + j));
            }
        }
    }
    covers.sort_unstable();
    let poset = Poset::new(grades, covers).expect("inclusion is a graded order");
    FacePoset { poset, simplices }
}
