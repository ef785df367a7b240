use std::fmt;

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Sparse vector over a prime field: `(index, value)` pairs sorted by index,
/// no stored zeros.
pub type SparseVec = Vec<(usize, u32)>;

/// `a + coef * b` for sorted sparse vectors.
pub fn axpy(field: PrimeField, a: &[(usize, u32)], coef: u32, b: &[(usize, u32)]) -> SparseVec {
    if coef == 0 {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(coef, b[j].1)));
            j += 1;
        } else {
            let v = field.add(a[i].1, field.mul(coef, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(field: PrimeField, v: &[(usize, u32)], coef: u32) -> SparseVec {
    if coef == 0 {
        return Vec::new();
    }
    v.iter().map(|&(i, x)| (i, field.mul(coef, x))).collect()
}

/// Entry lookup in a sorted sparse vector.
pub fn entry(v: &[(usize, u32)], index: usize) -> u32 {
    v.binary_search_by_key(&index, |e| e.0)
        .map(|k| v[k].1)
        .unwrap_or(0)
}

/// Builds a sparse vector from a dense slice of already-reduced values.
pub fn sparse_from_dense(dense: &[u32]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i, x))
        .collect()
}

/// Sparse column-major matrix over Z/pZ.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
    field: PrimeField,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        FpMatrix {
            rows,
            cols: vec![Vec::new(); cols],
            field,
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        FpMatrix {
            rows: n,
            cols: (0..n).map(|i| vec![(i, 1)]).collect(),
            field,
        }
    }

    /// Builds from sparse columns, checking sortedness, bounds and that no
    /// zeros are stored.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>, field: PrimeField) -> Result<Self> {
        for (j, col) in cols.iter().enumerate() {
            for w in col.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::invalid(format!("column {j} not strictly sorted")));
                }
            }
            for &(r, v) in col {
                if r >= rows {
                    return Err(Error::DimensionMismatch(format!(
                        "row {r} out of range in column {j} ({rows} rows)"
                    )));
                }
                if v == 0 || v >= field.modulus() {
                    return Err(Error::invalid(format!(
                        "entry {v} not in [1, p) in column {j}"
                    )));
                }
            }
        }
        Ok(FpMatrix { rows, cols, field })
    }

    /// Builds from `(row, col, value)` triplets; duplicate positions are summed.
    pub fn from_triplets(
        rows: usize,
        ncols: usize,
        field: PrimeField,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < ncols, "triplet ({r},{c}) out of bounds");
            cols[c].push((r, field.reduce(v)));
        }
        for col in &mut cols {
            col.sort_unstable_by_key(|e| e.0);
            let mut merged: SparseVec = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == r => last.1 = field.add(last.1, v),
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            *col = merged;
        }
        FpMatrix { rows, cols, field }
    }

    /// Row-major dense input with arbitrary integers (reduced mod p).
    pub fn from_dense(rows: &[Vec<i64>], field: PrimeField) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(i, row)| {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            row.iter().enumerate().map(move |(j, &v)| (i, j, v))
        });
        Self::from_triplets(nrows, ncols, field, triplets)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn column(&self, j: usize) -> &[(usize, u32)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        entry(&self.cols[c], r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.ncols()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0] == (j, 1))
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0; self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r][j] = v;
            }
        }
        out
    }

    /// `self * v` for a sparse vector of length `ncols`.
    pub fn mul_vec(&self, v: &[(usize, u32)]) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for &(j, x) in v {
            acc = axpy(self.field, &acc, x, &self.cols[j]);
        }
        acc
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.ncols(),
                rhs.rows,
                rhs.ncols()
            )));
        }
        if self.field != rhs.field {
            return Err(Error::invalid("matrices over different fields"));
        }
        let cols = rhs.cols.iter().map(|c| self.mul_vec(c)).collect();
        Ok(FpMatrix {
            rows: self.rows,
            cols,
            field: self.field,
        })
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                cols[r].push((j, v));
            }
        }
        FpMatrix {
            rows: self.ncols(),
            cols,
            field: self.field,
        }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut cols = self.cols.clone();
        cols.extend(rhs.cols.iter().cloned());
        Ok(FpMatrix {
            rows: self.rows,
            cols,
            field: self.field,
        })
    }

    pub fn select_columns(&self, which: &[usize]) -> FpMatrix {
        FpMatrix {
            rows: self.rows,
            cols: which.iter().map(|&j| self.cols[j].clone()).collect(),
            field: self.field,
        }
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FpMatrix {}x{} mod {} [",
            self.rows,
            self.ncols(),
            self.field.modulus()
        )?;
        for row in self.to_dense() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}
