use super::Tower;
use crate::error::{Error, Result};
use crate::linalg::{
    image_basis, kernel_basis, rank, restrict_map, FpMatrix, Quotient, SubspaceBasis,
};

/// Two towers of equal length joined by rungs `φ_i : bottom_i -> top_i`
/// with `top.step_i φ_i = φ_{i+1} bottom.step_i`.
#[derive(Clone, Debug)]
pub struct Ladder {
    bottom: Tower,
    top: Tower,
    rungs: Vec<FpMatrix>,
}

impl Ladder {
    /// Verifies shapes and every square.
    pub fn new(bottom: Tower, top: Tower, rungs: Vec<FpMatrix>) -> Result<Self> {
        let n = bottom.len();
        if top.len() != n || rungs.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bottom has {n} indices, top {}, rungs {}",
                top.len(),
                rungs.len()
            )));
        }
        for (i, phi) in rungs.iter().enumerate() {
            if phi.ncols() != bottom.dims()[i] || phi.nrows() != top.dims()[i] {
                return Err(Error::DimensionMismatch(format!(
                    "rung {i} is {}x{}, expected {}x{}",
                    phi.nrows(),
                    phi.ncols(),
                    top.dims()[i],
                    bottom.dims()[i]
                )));
            }
        }
        for i in 0..n - 1 {
            let up_then_right = top.step(i).mul(&rungs[i])?;
            let right_then_up = rungs[i + 1].mul(bottom.step(i))?;
            if up_then_right.to_dense() != right_then_up.to_dense() {
                return Err(Error::consistency(format!(
                    "ladder square {i} does not commute"
                )));
            }
        }
        Ok(Ladder { bottom, top, rungs })
    }

    pub fn bottom(&self) -> &Tower {
        &self.bottom
    }

    pub fn top(&self) -> &Tower {
        &self.top
    }

    pub fn rungs(&self) -> &[FpMatrix] {
        &self.rungs
    }

    pub fn rung_ranks(&self) -> Vec<usize> {
        self.rungs.iter().map(rank).collect()
    }
}

/// Tower of the images `Im φ_i ⊆ top_i` with the restricted top steps.
pub fn ladder_image(l: &Ladder) -> Result<Tower> {
    let subs: Vec<SubspaceBasis> = l.rungs.iter().map(image_basis).collect();
    restricted_tower(l.top(), &subs)
}

/// Tower of the kernels `Ker φ_i ⊆ bottom_i` with the restricted bottom steps.
pub fn ladder_kernel(l: &Ladder) -> Result<Tower> {
    let subs: Vec<SubspaceBasis> = l.rungs.iter().map(kernel_basis).collect();
    restricted_tower(l.bottom(), &subs)
}

/// Tower of the quotients `top_i / Im φ_i` with the induced steps.
pub fn ladder_cokernel(l: &Ladder) -> Result<Tower> {
    let quotients = l
        .rungs
        .iter()
        .enumerate()
        .map(|(i, phi)| Quotient::new(l.top.dims()[i], &image_basis(phi)))
        .collect::<Result<Vec<_>>>()?;
    let steps = (0..l.top.len() - 1)
        .map(|i| {
            quotients[i + 1]
                .matrix()
                .mul(&l.top.step(i).mul(&quotients[i].section())?)
        })
        .collect::<Result<Vec<_>>>()?;
    Tower::new(
        quotients.iter().map(Quotient::dim).collect(),
        steps,
        l.top.field(),
    )
}

fn restricted_tower(t: &Tower, subs: &[SubspaceBasis]) -> Result<Tower> {
    let steps = (0..t.len() - 1)
        .map(|i| restrict_map(t.step(i), &subs[i], &subs[i + 1]))
        .collect::<Result<Vec<_>>>()?;
    Tower::new(
        subs.iter().map(SubspaceBasis::dim).collect(),
        steps,
        t.field(),
    )
}
