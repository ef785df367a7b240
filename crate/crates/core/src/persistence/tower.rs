use crate::error::{Error, Result};
use crate::linalg::{rank, FpMatrix, PrimeField};

/// A persistence module indexed by `0..=N`: spaces `M_i = F_p^{dims[i]}` and
/// maps `steps[i] : M_i -> M_{i+1}`. `M_{N+1}` is implicitly zero.
#[derive(Clone, Debug)]
pub struct Tower {
    field: PrimeField,
    dims: Vec<usize>,
    steps: Vec<FpMatrix>,
}

impl Tower {
    pub fn new(dims: Vec<usize>, steps: Vec<FpMatrix>, field: PrimeField) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::invalid("a tower needs at least one index"));
        }
        if steps.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces need {} steps, got {}",
                dims.len(),
                dims.len() - 1,
                steps.len()
            )));
        }
        for (i, s) in steps.iter().enumerate() {
            if s.ncols() != dims[i] || s.nrows() != dims[i + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "step {i} is {}x{}, expected {}x{}",
                    s.nrows(),
                    s.ncols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
            if s.field() != field {
                return Err(Error::invalid(format!(
                    "step {i} is over a different field"
                )));
            }
        }
        Ok(Tower { field, dims, steps })
    }

    /// The tower with every space zero.
    pub fn zero(len: usize, field: PrimeField) -> Self {
        let len = len.max(1);
        let steps = (1..len).map(|_| FpMatrix::zeros(0, 0, field)).collect();
        Tower {
            field,
            dims: vec![0; len],
            steps,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of indices, `N + 1`.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn step(&self, i: usize) -> &FpMatrix {
        &self.steps[i]
    }

    pub fn steps(&self) -> &[FpMatrix] {
        &self.steps
    }

    fn check_range(&self, i: usize, j: usize) -> Result<()> {
        if i > j || j >= self.len() {
            return Err(Error::invalid(format!(
                "index pair ({i},{j}) outside 0 <= i <= j <= {}",
                self.len() - 1
            )));
        }
        Ok(())
    }

    /// `step_{j-1} ∘ ... ∘ step_i`, the identity when `i = j`.
    pub fn composite(&self, i: usize, j: usize) -> Result<FpMatrix> {
        self.check_range(i, j)?;
        let mut m = FpMatrix::identity(self.dims[i], self.field);
        for s in &self.steps[i..j] {
            m = s.mul(&m)?;
        }
        Ok(m)
    }

    pub fn composite_rank(&self, i: usize, j: usize) -> Result<usize> {
        Ok(rank(&self.composite(i, j)?))
    }

    /// `ranks[i][j - i] = composite_rank(i, j)` for all `i <= j`.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        use rayon::prelude::*;
        (0..self.len())
            .into_par_iter()
            .map(|i| {
                let mut m = FpMatrix::identity(self.dims[i], self.field);
                let mut row = Vec::with_capacity(self.len() - i);
                for j in i..self.len() {
                    row.push(rank(&m));
                    if j + 1 < self.len() {
                        m = self.steps[j].mul(&m).expect("steps chain");
                    }
                }
                row
            })
            .collect()
    }
}
