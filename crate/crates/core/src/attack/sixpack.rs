use rayon::prelude::*;

use super::Cofiltration;
use crate::cochain::{
    cohomology_basis, map_on_cohomology, restriction_matrix, simplicial_cochain_complex,
    CohomologyBasis,
};
use crate::complex::{subdivide_within, Simplex, SimplicialComplex, StrataSet};
use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, PrimeField};
use crate::persistence::{
    barcode, ladder_cokernel, ladder_image, ladder_kernel, Barcode, BiGrid, Ladder, Tower,
};

/// Which ladder a six-pack was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SixPackMode {
    /// `X^i ⊇ (X^i)^h`.
    Thick(usize),
    /// `K(X^i) ⊇ K(X^i)^h`.
    Cohesive(StrataSet),
}

/// Barcodes of the two towers of a ladder and of its image, kernel and
/// cokernel towers. The relative member is not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixPack {
    pub degree: usize,
    pub mode: SixPackMode,
    pub bottom: Barcode,
    pub top: Barcode,
    pub image: Barcode,
    pub kernel: Barcode,
    pub cokernel: Barcode,
}

impl SixPack {
    /// `ker + img = bottom` and `img + coker = top` pointwise.
    pub fn check_exactness(&self) -> Result<()> {
        let (b, t, i, k, c) = (
            self.bottom.dims(),
            self.top.dims(),
            self.image.dims(),
            self.kernel.dims(),
            self.cokernel.dims(),
        );
        for x in 0..b.len() {
            if k[x] + i[x] != b[x] || i[x] + c[x] != t[x] {
                return Err(Error::consistency(format!(
                    "six-pack dimensions are not exact at index {x}"
                )));
            }
        }
        Ok(())
    }
}

fn bases(complexes: &[SimplicialComplex], n: usize, field: PrimeField) -> Vec<CohomologyBasis> {
    complexes
        .par_iter()
        .map(|c| cohomology_basis(&simplicial_cochain_complex(c, field), n))
        .collect()
}

/// `H^n(sup) -> H^n(sub)` in prepared bases.
fn restriction(
    sub: &SimplicialComplex,
    sup: &SimplicialComplex,
    hsub: &CohomologyBasis,
    hsup: &CohomologyBasis,
    n: usize,
    field: PrimeField,
) -> Result<FpMatrix> {
    map_on_cohomology(&restriction_matrix(sub, sup, n, field)?, hsup, hsub)
}

fn chain_tower(
    complexes: &[SimplicialComplex],
    hs: &[CohomologyBasis],
    n: usize,
    field: PrimeField,
) -> Result<Tower> {
    let steps = (0..complexes.len() - 1)
        .into_par_iter()
        .map(|i| {
            restriction(
                &complexes[i + 1],
                &complexes[i],
                &hs[i + 1],
                &hs[i],
                n,
                field,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Tower::new(hs.iter().map(CohomologyBasis::dim).collect(), steps, field)
}

/// `H^n(X^0) -> H^n(X^1) -> ... -> H^n(X^N)` along the attack.
pub fn attack_tower(c: &Cofiltration, n: usize, field: PrimeField) -> Result<Tower> {
    chain_tower(c.steps(), &bases(c.steps(), n, field), n, field)
}

/// Ladder of `H^n` for two decreasing chains with `top[i] ⊆ bottom[i]`.
pub fn inclusion_ladder(
    bottom: &[SimplicialComplex],
    top: &[SimplicialComplex],
    n: usize,
    field: PrimeField,
) -> Result<Ladder> {
    if bottom.is_empty() || bottom.len() != top.len() {
        return Err(Error::DimensionMismatch(
            "ladder chains must have equal, positive length".into(),
        ));
    }
    let hb = bases(bottom, n, field);
    let ht = bases(top, n, field);
    let bt = chain_tower(bottom, &hb, n, field)?;
    let tt = chain_tower(top, &ht, n, field)?;
    let rungs = (0..bottom.len())
        .into_par_iter()
        .map(|i| restriction(&top[i], &bottom[i], &ht[i], &hb[i], n, field))
        .collect::<Result<Vec<_>>>()?;
    Ladder::new(bt, tt, rungs)
}

fn sixpack_of(l: &Ladder, degree: usize, mode: SixPackMode) -> Result<SixPack> {
    let pack = SixPack {
        degree,
        mode,
        bottom: barcode(l.bottom())?,
        top: barcode(l.top())?,
        image: barcode(&ladder_image(l)?)?,
        kernel: barcode(&ladder_kernel(l)?)?,
        cokernel: barcode(&ladder_cokernel(l)?)?,
    };
    pack.check_exactness()?;
    Ok(pack)
}

/// The ladder `H^n(X^•) -> H^n(X^{•,h})`.
pub fn thick_ladder(c: &Cofiltration, n: usize, h: usize, field: PrimeField) -> Result<Ladder> {
    let top: Vec<_> = c.steps().iter().map(|x| x.coskeleton(h)).collect();
    inclusion_ladder(c.steps(), &top, n, field)
}

pub fn thick_sixpack(c: &Cofiltration, n: usize, h: usize, field: PrimeField) -> Result<SixPack> {
    sixpack_of(&thick_ladder(c, n, h, field)?, n, SixPackMode::Thick(h))
}

/// The ladder `H^n(K(X^•)) -> H^n(K(X^•)^h)`. All subdivisions share the
/// vertex dictionary of `K(X^0)`, so the chains are literally decreasing.
pub fn cohesive_ladder(
    c: &Cofiltration,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<Ladder> {
    let labels: Vec<Simplex> = c.first().all_simplices().cloned().collect();
    let bottom = c
        .steps()
        .par_iter()
        .map(|x| subdivide_within(x, None, &labels))
        .collect::<Result<Vec<_>>>()?;
    let top = c
        .steps()
        .par_iter()
        .map(|x| subdivide_within(x, Some(strata), &labels))
        .collect::<Result<Vec<_>>>()?;
    inclusion_ladder(&bottom, &top, n, field)
}

pub fn cohesive_sixpack(
    c: &Cofiltration,
    n: usize,
    strata: &StrataSet,
    field: PrimeField,
) -> Result<SixPack> {
    sixpack_of(
        &cohesive_ladder(c, n, strata, field)?,
        n,
        SixPackMode::Cohesive(strata.clone()),
    )
}

/// Grid of `H^n(X^{i,h})` over attack steps `i` and thickness
/// `h = 0..=dim X^0 + 1`, with maps induced by both kinds of inclusion.
pub fn thick_bigrid(c: &Cofiltration, n: usize, field: PrimeField) -> Result<BiGrid> {
    let height = (c.first().dim() + 2) as usize;
    let width = c.len();
    let cells: Vec<Vec<SimplicialComplex>> = (0..height)
        .map(|h| c.steps().iter().map(|x| x.coskeleton(h)).collect())
        .collect();
    let flat: Vec<SimplicialComplex> = cells.iter().flatten().cloned().collect();
    let hs_flat = bases(&flat, n, field);
    let hs: Vec<&[CohomologyBasis]> = hs_flat.chunks(width).collect();
    let dims = hs
        .iter()
        .map(|r| r.iter().map(CohomologyBasis::dim).collect())
        .collect();
    let right = (0..height)
        .into_par_iter()
        .map(|h| {
            (0..width - 1)
                .map(|i| {
                    restriction(
                        &cells[h][i + 1],
                        &cells[h][i],
                        &hs[h][i + 1],
                        &hs[h][i],
                        n,
                        field,
                    )
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let up = (0..height - 1)
        .into_par_iter()
        .map(|h| {
            (0..width)
                .map(|i| {
                    restriction(
                        &cells[h + 1][i],
                        &cells[h][i],
                        &hs[h + 1][i],
                        &hs[h][i],
                        n,
                        field,
                    )
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    BiGrid::new(dims, right, up, field)
}
