use super::Tower;
use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, PrimeField};

/// A grid of spaces `M(i, h)` for `0 <= i < width`, `0 <= h < height`,
/// with right maps `M(i,h) -> M(i+1,h)` and up maps `M(i,h) -> M(i,h+1)`.
/// Everything is indexed `[h][i]`.
#[derive(Clone, Debug)]
pub struct BiGrid {
    field: PrimeField,
    dims: Vec<Vec<usize>>,
    right: Vec<Vec<FpMatrix>>,
    up: Vec<Vec<FpMatrix>>,
}

/// A totally ordered line through a grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    /// Fixed `h`, running over `i`.
    Horizontal(usize),
    /// Fixed `i`, running over `h`.
    Vertical(usize),
}

impl BiGrid {
    /// Verifies shapes and that every square commutes.
    pub fn new(
        dims: Vec<Vec<usize>>,
        right: Vec<Vec<FpMatrix>>,
        up: Vec<Vec<FpMatrix>>,
        field: PrimeField,
    ) -> Result<Self> {
        let height = dims.len();
        let width = dims.first().map_or(0, Vec::len);
        if height == 0 || width == 0 || dims.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch(
                "grid must be a non-empty rectangle".into(),
            ));
        }
        if right.len() != height || right.iter().any(|r| r.len() != width - 1) {
            return Err(Error::DimensionMismatch(
                "need width-1 right maps per row".into(),
            ));
        }
        if up.len() != height - 1 || up.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch(
                "need height-1 rows of up maps".into(),
            ));
        }
        for h in 0..height {
            for i in 0..width {
                if i + 1 < width {
                    let m = &right[h][i];
                    if (m.nrows(), m.ncols()) != (dims[h][i + 1], dims[h][i]) {
                        return Err(Error::DimensionMismatch(format!(
                            "right map at ({i},{h}) has wrong shape"
                        )));
                    }
                }
                if h + 1 < height {
                    let m = &up[h][i];
                    if (m.nrows(), m.ncols()) != (dims[h + 1][i], dims[h][i]) {
                        return Err(Error::DimensionMismatch(format!(
                            "up map at ({i},{h}) has wrong shape"
                        )));
                    }
                }
            }
        }
        for h in 0..height - 1 {
            for i in 0..width - 1 {
                let a = up[h][i + 1].mul(&right[h][i])?;
                let b = right[h + 1][i].mul(&up[h][i])?;
                if a.to_dense() != b.to_dense() {
                    return Err(Error::consistency(format!(
                        "grid square at ({i},{h}) does not commute"
                    )));
                }
            }
        }
        Ok(BiGrid {
            field,
            dims,
            right,
            up,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of `i` positions.
    pub fn width(&self) -> usize {
        self.dims[0].len()
    }

    /// Number of `h` positions.
    pub fn height(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, i: usize, h: usize) -> usize {
        self.dims[h][i]
    }

    pub fn right_map(&self, i: usize, h: usize) -> &FpMatrix {
        &self.right[h][i]
    }

    pub fn up_map(&self, i: usize, h: usize) -> &FpMatrix {
        &self.up[h][i]
    }

    /// Restriction to a row or a column, as a tower.
    pub fn line_restriction(&self, line: Line) -> Result<Tower> {
        match line {
            Line::Horizontal(h) => {
                if h >= self.height() {
                    return Err(Error::invalid(format!(
                        "row {h} outside 0..{}",
                        self.height()
                    )));
                }
                Tower::new(self.dims[h].clone(), self.right[h].clone(), self.field)
            }
            Line::Vertical(i) => {
                if i >= self.width() {
                    return Err(Error::invalid(format!(
                        "column {i} outside 0..{}",
                        self.width()
                    )));
                }
                let dims = self.dims.iter().map(|r| r[i]).collect();
                let steps = self.up.iter().map(|r| r[i].clone()).collect();
                Tower::new(dims, steps, self.field)
            }
        }
    }
}

/// Pointwise dimensions, `[h][i]`.
pub fn hilbert_function(g: &BiGrid) -> Vec<Vec<usize>> {
    g.dims.clone()
}
