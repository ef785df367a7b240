//! Cochain complexes, cohomology bases and induced maps.
//!
//! Coordinates of `C^n(X)` follow `X.simplices(n)` (lexicographic); those of
//! the poset complex `C^n(P)` follow `P.chains(n)`.

use std::borrow::Cow;
use std::collections::BTreeMap;

use crate::complex::{Poset, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, ColumnReduction, FpMatrix, PrimeField, SparseVec};

/// Matrix of `δ^n : C^n(X) -> C^{n+1}(X)`,
/// `(δx)_τ = Σ_j (-1)^j x_{τ without its j-th vertex}`.
pub fn coboundary_matrix(x: &SimplicialComplex, n: usize, field: PrimeField) -> FpMatrix {
    let rows = x.simplices(n + 1);
    let cols = x.simplices(n);
    let triplets = rows.iter().enumerate().flat_map(|(i, tau)| {
        tau.boundary_faces().enumerate().map(move |(j, face)| {
            let c = cols
                .binary_search(&face)
                .expect("faces of simplices are simplices");
            (i, c, if j % 2 == 0 { 1 } else { -1 })
        })
    });
    FpMatrix::from_triplets(rows.len(), cols.len(), field, triplets)
}

/// A finite cochain complex `C^0 -> C^1 -> ... -> C^top -> 0`.
#[derive(Clone, Debug)]
pub struct CochainComplexRep {
    field: PrimeField,
    dims: Vec<usize>,
    deltas: Vec<FpMatrix>,
}

impl CochainComplexRep {
    /// `deltas[n]` is `δ^n`; the last one must map into the zero space.
    /// Shapes and `δ^{n+1} δ^n = 0` are verified.
    pub fn new(dims: Vec<usize>, deltas: Vec<FpMatrix>, field: PrimeField) -> Result<Self> {
        if deltas.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees but {} coboundaries",
                dims.len(),
                deltas.len()
            )));
        }
        for (n, d) in deltas.iter().enumerate() {
            let next = dims.get(n + 1).copied().unwrap_or(0);
            if d.ncols() != dims[n] || d.nrows() != next {
                return Err(Error::DimensionMismatch(format!(
                    "δ^{n} is {}x{}, expected {next}x{}",
                    d.nrows(),
                    d.ncols(),
                    dims[n]
                )));
            }
            if d.field() != field {
                return Err(Error::invalid(format!("δ^{n} is over a different field")));
            }
        }
        for (n, pair) in deltas.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::consistency(format!("δ^{} δ^{n} is not zero", n + 1)));
            }
        }
        Ok(CochainComplexRep {
            field,
            dims,
            deltas,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Highest degree with a (possibly zero) cochain space, `-1` if none.
    pub fn top_degree(&self) -> isize {
        self.dims.len() as isize - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// `δ^n`, a zero-sized matrix outside the stored range.
    pub fn delta(&self, n: usize) -> Cow<'_, FpMatrix> {
        match self.deltas.get(n) {
            Some(d) => Cow::Borrowed(d),
            None => Cow::Owned(FpMatrix::zeros(0, 0, self.field)),
        }
    }

    /// `δ^{n-1} : C^{n-1} -> C^n` (zero map from the zero space when `n = 0`).
    pub fn delta_into(&self, n: usize) -> Cow<'_, FpMatrix> {
        if n == 0 {
            Cow::Owned(FpMatrix::zeros(self.dim(0), 0, self.field))
        } else if n <= self.deltas.len() {
            Cow::Borrowed(&self.deltas[n - 1])
        } else {
            Cow::Owned(FpMatrix::zeros(0, 0, self.field))
        }
    }

    /// `dim C^n - rank δ^n - rank δ^{n-1}`.
    pub fn betti(&self, n: usize) -> usize {
        if n >= self.dims.len() {
            return 0;
        }
        self.dims[n] - rank(&self.delta(n)) - rank(&self.delta_into(n))
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..self.dims.len()).map(|n| self.betti(n)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Simplicial cochain complex of `X` in degrees `0..=dim X`.
pub fn simplicial_cochain_complex(x: &SimplicialComplex, field: PrimeField) -> CochainComplexRep {
    let top = x.dim();
    let degrees = (top + 1) as usize;
    let dims = (0..degrees).map(|n| x.simplices(n).len()).collect();
    let deltas = (0..degrees)
        .map(|n| coboundary_matrix(x, n, field))
        .collect();
    CochainComplexRep::new(dims, deltas, field).expect("simplicial coboundaries square to zero")
}

/// Standard-resolution complex of the constant sheaf on `P`: degree `n`
/// has a basis of chains `p_0 < ... < p_n`, and
/// `(δx)_{c} = Σ_j (-1)^j x_{c without p_j}` over chains `c` of length `n + 2`.
pub fn poset_cochain_complex(p: &Poset, field: PrimeField) -> CochainComplexRep {
    let degrees = (p.height() + 1) as usize;
    let chains: Vec<Vec<Vec<usize>>> = (0..=degrees).map(|n| p.chains(n)).collect();
    let dims = chains[..degrees].iter().map(Vec::len).collect();
    let deltas = (0..degrees)
        .map(|n| {
            let (lower, upper) = (&chains[n], &chains[n + 1]);
            let triplets = upper.iter().enumerate().flat_map(|(i, c)| {
                (0..c.len()).map(move |j| {
                    let mut sub = c.clone();
                    sub.remove(j);
                    let col = lower.binary_search(&sub).expect("subchains are chains");
                    (i, col, if j % 2 == 0 { 1 } else { -1 })
                })
            });
            FpMatrix::from_triplets(upper.len(), lower.len(), field, triplets)
        })
        .collect();
    CochainComplexRep::new(dims, deltas, field).expect("standard resolution squares to zero")
}

pub fn betti(x: &SimplicialComplex, n: usize, field: PrimeField) -> usize {
    if n as isize > x.dim() {
        return 0;
    }
    let c = x.simplices(n).len();
    c - rank(&coboundary_matrix(x, n, field))
        - if n == 0 {
            0
        } else {
            rank(&coboundary_matrix(x, n - 1, field))
        }
}

pub fn betti_numbers(x: &SimplicialComplex, field: PrimeField) -> Vec<usize> {
    simplicial_cochain_complex(x, field).betti_numbers()
}

pub fn poset_betti(p: &Poset, n: usize, field: PrimeField) -> usize {
    poset_cochain_complex(p, field).betti(n)
}

/// A basis of `H^n = Ker δ^n / Im δ^{n-1}` by cocycle representatives.
///
/// Representatives are chosen greedily from a kernel basis of `δ^n`,
/// keeping those independent of `Im δ^{n-1}` and of the earlier choices.
/// The choice depends only on the matrix `δ^n` and the span of `δ^{n-1}`,
/// so two complexes sharing both get identical bases.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    degree: usize,
    reps: FpMatrix,
    delta: FpMatrix,
    classifier: ColumnReduction,
}

impl CohomologyBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reps.ncols()
    }

    /// Dimension of the ambient cochain space.
    pub fn cochain_dim(&self) -> usize {
        self.reps.nrows()
    }

    /// Representatives as columns.
    pub fn representatives(&self) -> &FpMatrix {
        &self.reps
    }

    /// Coordinates of the class of the cocycle `z` in this basis, found by
    /// solving `[reps | δ^{n-1}] x = z`.
    pub fn classify(&self, z: &[(usize, u32)]) -> Result<SparseVec> {
        if !self.delta.mul_vec(z).is_empty() {
            return Err(Error::consistency(format!(
                "cochain is not a degree-{} cocycle",
                self.degree
            )));
        }
        let x = self.classifier.solve(z).ok_or_else(|| {
            Error::consistency("cocycle escapes the span of representatives and coboundaries")
        })?;
        let k = self.dim();
        Ok(x.into_iter().filter(|&(i, _)| i < k).collect())
    }
}

pub fn cohomology_basis(rep: &CochainComplexRep, n: usize) -> CohomologyBasis {
    let field = rep.field();
    let delta = rep.delta(n).into_owned();
    let delta = if delta.ncols() == rep.dim(n) {
        delta
    } else {
        FpMatrix::zeros(0, rep.dim(n), field)
    };
    let boundaries = rep.delta_into(n).into_owned();
    let boundaries = if boundaries.nrows() == rep.dim(n) {
        boundaries
    } else {
        FpMatrix::zeros(rep.dim(n), 0, field)
    };
    let cocycles = kernel_basis(&delta);
    let stacked = boundaries
        .hstack(cocycles.matrix())
        .expect("same cochain space");
    let red = ColumnReduction::new(&stacked, false);
    let offset = boundaries.ncols();
    let picked: Vec<usize> = red
        .pivot_columns()
        .iter()
        .filter(|&&j| j >= offset)
        .map(|&j| j - offset)
        .collect();
    let reps = cocycles.matrix().select_columns(&picked);
    let classifier =
        ColumnReduction::new(&reps.hstack(&boundaries).expect("same cochain space"), true);
    CohomologyBasis {
        degree: n,
        reps,
        delta,
        classifier,
    }
}

/// Matrix of the map on cohomology induced by a cochain map
/// `f : C^n(source) -> C^n(target)`, in the given bases.
pub fn map_on_cohomology(
    f: &FpMatrix,
    source: &CohomologyBasis,
    target: &CohomologyBasis,
) -> Result<FpMatrix> {
    if f.ncols() != source.cochain_dim() || f.nrows() != target.cochain_dim() {
        return Err(Error::DimensionMismatch(format!(
            "cochain map is {}x{}, cochain spaces have dimensions {} and {}",
            f.nrows(),
            f.ncols(),
            source.cochain_dim(),
            target.cochain_dim()
        )));
    }
    let cols = source
        .representatives()
        .columns()
        .iter()
        .map(|z| target.classify(&f.mul_vec(z)))
        .collect::<Result<Vec<_>>>()?;
    FpMatrix::from_columns(target.dim(), cols, f.field())
}

/// A vertex map `V(X) -> V(Y)` sending simplices to simplices.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    /// Verifies that every vertex of `source` is mapped and that the image of
    /// every facet is a simplex of `target`.
    pub fn new(
        source: SimplicialComplex,
        target: SimplicialComplex,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> Result<Self> {
        for v in source.vertices() {
            if !vertex_map.contains_key(&v) {
                return Err(Error::invalid(format!("vertex {v} has no image")));
            }
        }
        for f in source.facets() {
            let mut image: Vec<Vertex> = f.vertices().iter().map(|v| vertex_map[v]).collect();
            image.sort_unstable();
            image.dedup();
            let image = Simplex::new(image)?;
            if !target.contains(&image) {
                return Err(Error::invalid(format!(
                    "facet {f} maps to {image}, which is not a simplex of the target"
                )));
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
        })
    }

    pub fn identity(x: &SimplicialComplex) -> Self {
        let vertex_map = x.vertices().into_iter().map(|v| (v, v)).collect();
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            vertex_map,
        }
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.vertex_map[&v]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(&v, &w)| (v, g.apply(w)))
            .collect();
        SimplicialMap::new(self.source.clone(), g.target.clone(), vertex_map)
    }
}

/// Matrix of `f^n : C^n(Y) -> C^n(X)`: the `σ` row carries the sign of the
/// sorting permutation of `f(σ)` in the column of the sorted image, and is
/// zero when `f` collapses `σ`.
pub fn cochain_map(f: &SimplicialMap, n: usize, field: PrimeField) -> FpMatrix {
    let rows = f.source.simplices(n);
    let cols = f.target.simplices(n);
    let triplets = rows.iter().enumerate().filter_map(|(i, sigma)| {
        sigma.map_vertices(|v| f.apply(v)).map(|(tau, odd)| {
            let j = cols
                .binary_search(&tau)
                .expect("validated map sends simplices to simplices");
            (i, j, if odd { -1 } else { 1 })
        })
    });
    FpMatrix::from_triplets(rows.len(), cols.len(), field, triplets)
}

/// Cochain restriction `C^n(sup) -> C^n(sub)` along an inclusion.
pub fn restriction_matrix(
    sub: &SimplicialComplex,
    sup: &SimplicialComplex,
    n: usize,
    field: PrimeField,
) -> Result<FpMatrix> {
    let rows = sub.simplices(n);
    let cols = sup.simplices(n);
    let mut triplets = Vec::with_capacity(rows.len());
    for (i, s) in rows.iter().enumerate() {
        let j = cols.binary_search(s).map_err(|_| {
            Error::invalid(format!(
                "simplex {s} of the subcomplex is missing from the complex"
            ))
        })?;
        triplets.push((i, j, 1));
    }
    Ok(FpMatrix::from_triplets(
        rows.len(),
        cols.len(),
        field,
        triplets,
    ))
}

/// `H^n(f) : H^n(Y) -> H^n(X)` in the bases of [`cohomology_basis`].
pub fn induced_map_on_cohomology(
    f: &SimplicialMap,
    n: usize,
    field: PrimeField,
) -> Result<FpMatrix> {
    let hx = cohomology_basis(&simplicial_cochain_complex(&f.source, field), n);
    let hy = cohomology_basis(&simplicial_cochain_complex(&f.target, field), n);
    map_on_cohomology(&cochain_map(f, n, field), &hy, &hx)
}

/// `H^n(sup) -> H^n(sub)` induced by an inclusion `sub ⊆ sup`.
pub fn restriction_on_cohomology(
    sub: &SimplicialComplex,
    sup: &SimplicialComplex,
    n: usize,
    field: PrimeField,
) -> Result<FpMatrix> {
    let hsub = cohomology_basis(&simplicial_cochain_complex(sub, field), n);
    let hsup = cohomology_basis(&simplicial_cochain_complex(sup, field), n);
    map_on_cohomology(&restriction_matrix(sub, sup, n, field)?, &hsup, &hsub)
}
