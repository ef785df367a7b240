use std::collections::HashMap;

use crate::cochain::{
    betti, cochain_map, cohomology_basis, map_on_cohomology, poset_betti, poset_cochain_complex,
    simplicial_cochain_complex, SimplicialMap,
};
use crate::complex::{
    barycentric_subdivision, face_poset, h_barycentric_subdivision, h_face_poset, subdivide_within,
    SimplicialComplex, StrataSet,
};
use crate::error::{Error, Result};
use crate::linalg::{rank, FpMatrix, PrimeField};

use super::thick::{isolated_vertices, thick_betti};

/// `β^{n,h}` through the standard resolution on the strata-restricted face poset.
pub fn cohesive_betti_poset(
    x: &SimplicialComplex,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> usize {
    poset_betti(&h_face_poset(x, strata).poset, n, field)
}

/// `β^{n,h}` through the strata-restricted barycentric subdivision.
pub fn cohesive_betti_subdivision(
    x: &SimplicialComplex,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> usize {
    betti(&h_barycentric_subdivision(x, strata).complex, n, field)
}

/// `β^{n,h} = dim H^n(P_X^h)`, computed by both routes; a disagreement is an
/// internal error.
pub fn cohesive_betti(
    x: &SimplicialComplex,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<usize> {
    let a = cohesive_betti_poset(x, n, strata, field);
    let b = cohesive_betti_subdivision(x, n, strata, field);
    if a != b {
        return Err(Error::consistency(format!(
            "cohesive β^{{{n},{strata}}}: poset route gives {a}, subdivision route gives {b}"
        )));
    }
    Ok(a)
}

/// Number of `(h0, h1)`-connected components, checked against `β^{0,{h0,h1}}`.
pub fn gamma_dimension(
    x: &SimplicialComplex,
    h0: usize,
    h1: usize,
    field: PrimeField,
) -> Result<usize> {
    let count = x.connected_components(h0, h1)?.len();
    let strata = StrataSet::new(vec![h0, h1])?;
    let b = cohesive_betti(x, 0, &strata, field)?;
    if b != count {
        return Err(Error::consistency(format!(
            "{count} ({h0},{h1})-components but cohesive β^0 = {b}"
        )));
    }
    Ok(count)
}

/// Last-vertex map `K(X) -> X`: the barycentre of `σ` goes to the largest
/// vertex of `σ`. It induces the isomorphism `H^n(X) ≅ H^n(K(X))`.
fn last_vertex_map(x: &SimplicialComplex) -> (SimplicialMap, SimplicialComplex) {
    let k = barycentric_subdivision(x);
    let vertex_map = k
        .complex
        .vertices()
        .into_iter()
        .map(|v| (v, k.label(v).max_vertex()))
        .collect();
    let g = SimplicialMap::new(k.complex.clone(), x.clone(), vertex_map)
        .expect("chains map into their top simplex");
    (g, k.complex)
}

/// Matrix of `φ^{n,h} : H^n(X) -> H^n(P_X^h)`, realised on
/// `H^n(X) -> H^n(K(X)) -> H^n(K(X)^h)`.
pub fn cohesive_map(
    x: &SimplicialComplex,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<FpMatrix> {
    let (g, _) = last_vertex_map(x);
    let labels: Vec<_> = x.all_simplices().cloned().collect();
    let kh = subdivide_within(x, Some(strata), &labels)?;
    cohesive_map_into(x, &g, &kh, n, field)
}

/// `φ` for a prepared last-vertex map `g : K(X) -> X` and a subcomplex `kh` of `K(X)`.
fn cohesive_map_into(
    x: &SimplicialComplex,
    g: &SimplicialMap,
    kh: &SimplicialComplex,
    n: usize,
    field: PrimeField,
) -> Result<FpMatrix> {
    let hx = cohomology_basis(&simplicial_cochain_complex(x, field), n);
    let hh = cohomology_basis(&simplicial_cochain_complex(kh, field), n);
    let gn = cochain_map(g, n, field);
    let restrict = crate::cochain::restriction_matrix(kh, g.source(), n, field)?;
    map_on_cohomology(&restrict.mul(&gn)?, &hx, &hh)
}

/// Rank of `H^n(P_X) -> H^n(P_X^h)` computed on the posets directly.
pub fn cohesive_map_rank_poset(
    x: &SimplicialComplex,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<usize> {
    let full = face_poset(x);
    let sub = h_face_poset(x, strata);
    let position: HashMap<_, _> = full
        .simplices
        .iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let to_full: Vec<usize> = sub.simplices.iter().map(|s| position[s]).collect();
    let full_chains = full.poset.chains(n);
    let sub_chains = sub.poset.chains(n);
    let triplets = sub_chains.iter().enumerate().map(|(i, c)| {
        let image: Vec<usize> = c.iter().map(|&p| to_full[p]).collect();
        (
            i,
            full_chains
                .binary_search(&image)
                .expect("subposet chains are chains"),
            1,
        )
    });
    let r = FpMatrix::from_triplets(sub_chains.len(), full_chains.len(), field, triplets);
    let hf = cohomology_basis(&poset_cochain_complex(&full.poset, field), n);
    let hs = cohomology_basis(&poset_cochain_complex(&sub.poset, field), n);
    Ok(rank(&map_on_cohomology(&r, &hf, &hs)?))
}

/// `β^{n,h}_img = rank φ^{n,h}`.
pub fn persistent_cohesive_betti(
    x: &SimplicialComplex,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<usize> {
    Ok(rank(&cohesive_map(x, n, strata, field)?))
}

/// Per-degree summary of `φ^{n,h}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohesiveDegree {
    pub degree: usize,
    /// `β^n`.
    pub betti: usize,
    /// `β^{n,h}`.
    pub cohesive: usize,
    /// `rank φ^{n,h}`.
    pub image: usize,
    pub kernel: usize,
    pub cokernel: usize,
}

#[derive(Clone, Debug)]
pub struct CohesiveReport {
    pub strata: StrataSet,
    pub field: PrimeField,
    pub degrees: Vec<CohesiveDegree>,
}

/// `φ^{n,h}` in every degree `0..=dim X`, with both routes cross-checked.
pub fn cohesive_report(
    x: &SimplicialComplex,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<CohesiveReport> {
    let (g, _) = last_vertex_map(x);
    let labels: Vec<_> = x.all_simplices().cloned().collect();
    let kh = subdivide_within(x, Some(strata), &labels)?;
    let degrees = (0..=x.dim().max(-1))
        .map(|n| {
            let n = n as usize;
            let phi = cohesive_map_into(x, &g, &kh, n, field)?;
            let cohesive = cohesive_betti(x, n, strata, field)?;
            let image = rank(&phi);
            if phi.nrows() != cohesive {
                return Err(Error::consistency("cohesive map has the wrong codomain"));
            }
            Ok(CohesiveDegree {
                degree: n,
                betti: phi.ncols(),
                cohesive,
                image,
                kernel: phi.ncols() - image,
                cokernel: cohesive - image,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohesiveReport {
        strata: strata.clone(),
        field,
        degrees,
    })
}

/// Both sides of `β^{0,{0,h1,...}} = β^{0,h1} + #{vertices in no simplex of dim >= h1}`.
/// Fails unless the strata start with `0` and have a second member, or if the
/// two sides differ.
pub fn cohesive_relation_check(
    x: &SimplicialComplex,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<(usize, usize)> {
    let dims = strata.dims();
    if dims.len() < 2 || dims[0] != 0 {
        return Err(Error::invalid(format!(
            "strata {strata} must start with 0 and have two members"
        )));
    }
    let lhs = cohesive_betti(x, 0, strata, field)?;
    let rhs = thick_betti(x, 0, dims[1], field) + isolated_vertices(x, dims[1]).len();
    if lhs != rhs {
        return Err(Error::consistency(format!(
            "cohesive β^0 = {lhs} but thick side gives {rhs}"
        )));
    }
    Ok((lhs, rhs))
}
