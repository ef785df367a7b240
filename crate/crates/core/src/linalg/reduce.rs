//! Column reduction over Z/pZ.
//!
//! Columns are processed left to right; the pivot of a column is its nonzero
//! entry with the lowest row index. A column whose pivot row is already owned
//! by an earlier column is reduced against it until it either becomes zero or
//! claims a fresh pivot row. With `track_transform` the column operations are
//! recorded as `V` with `R = M V`, `V` unit upper triangular.

use std::collections::HashMap;

use super::field::PrimeField;
use super::matrix::{axpy, FpMatrix, SparseVec};

/// Below this size in both directions `rank` runs on a dense copy.
const DENSE_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct ColumnReduction {
    field: PrimeField,
    rows: usize,
    reduced: Vec<SparseVec>,
    transform: Option<Vec<SparseVec>>,
    pivot_col_of_row: HashMap<usize, usize>,
    pivot_cols: Vec<usize>,
}

impl ColumnReduction {
    pub fn new(m: &FpMatrix, track_transform: bool) -> Self {
        let field = m.field();
        let n = m.ncols();
        let mut reduced: Vec<SparseVec> = Vec::with_capacity(n);
        let mut transform: Option<Vec<SparseVec>> = track_transform.then(|| Vec::with_capacity(n));
        let mut pivot_col_of_row: HashMap<usize, usize> = HashMap::new();
        let mut pivot_cols = Vec::new();

        for j in 0..n {
            let mut col = m.column(j).to_vec();
            let mut v: SparseVec = vec![(j, 1)];
            while let Some(&(r, x)) = col.first() {
                match pivot_col_of_row.get(&r) {
                    Some(&k) => {
                        let pivot_col: &SparseVec = &reduced[k];
                        let coef = field.neg(field.mul(x, field.inv(pivot_col[0].1)));
                        col = axpy(field, &col, coef, pivot_col);
                        if let Some(t) = transform.as_ref() {
                            v = axpy(field, &v, coef, t[k].as_slice());
                        }
                    }
                    None => {
                        pivot_col_of_row.insert(r, j);
                        pivot_cols.push(j);
                        break;
                    }
                }
            }
            reduced.push(col);
            if let Some(t) = transform.as_mut() {
                t.push(v);
            }
        }

        ColumnReduction {
            field,
            rows: m.nrows(),
            reduced,
            transform,
            pivot_col_of_row,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Indices of the columns that claimed a pivot, in order.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Pivot rows in the order their columns were processed.
    pub fn pivot_rows(&self) -> Vec<usize> {
        self.pivot_cols
            .iter()
            .map(|&j| self.reduced[j][0].0)
            .collect()
    }

    pub fn reduced_column(&self, j: usize) -> &[(usize, u32)] {
        &self.reduced[j]
    }

    /// Columns of `V` whose reduced column vanished: a kernel basis.
    pub fn kernel_vectors(&self) -> Vec<SparseVec> {
        let t = self
            .transform
            .as_ref()
            .expect("kernel requires a tracked transform");
        (0..self.reduced.len())
            .filter(|&j| self.reduced[j].is_empty())
            .map(|j| t[j].clone())
            .collect()
    }

    /// Reduces `b` against the pivot columns. Returns the residual and, when
    /// the transform is tracked, coefficients `x` with `b - residual = M x`.
    pub fn reduce_vector(&self, b: &[(usize, u32)]) -> (SparseVec, Option<SparseVec>) {
        let field = self.field;
        let mut rest = b.to_vec();
        let mut x: SparseVec = Vec::new();
        let mut start = 0usize;
        loop {
            // first entry at or after `start` whose row is a pivot row
            let hit = rest[start..]
                .iter()
                .position(|e| self.pivot_col_of_row.contains_key(&e.0))
                .map(|p| p + start);
            let Some(pos) = hit else { break };
            let (r, val) = rest[pos];
            let k = self.pivot_col_of_row[&r];
            let coef = field.mul(val, field.inv(self.reduced[k][0].1));
            rest = axpy(field, &rest, field.neg(coef), &self.reduced[k]);
            if let Some(t) = self.transform.as_ref() {
                x = axpy(field, &x, coef, t[k].as_slice());
            }
            start = rest.partition_point(|e| e.0 <= r);
        }
        (rest, self.transform.as_ref().map(|_| x))
    }

    /// Some `x` with `M x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[(usize, u32)]) -> Option<SparseVec> {
        let (rest, x) = self.reduce_vector(b);
        if rest.is_empty() {
            Some(x.expect("solve requires a tracked transform"))
        } else {
            None
        }
    }

    pub fn in_column_space(&self, b: &[(usize, u32)]) -> bool {
        self.reduce_vector(b).0.is_empty()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn is_pivot_row(&self, r: usize) -> bool {
        self.pivot_col_of_row.contains_key(&r)
    }
}

/// Rank over Z/pZ.
pub fn rank(m: &FpMatrix) -> usize {
    if m.nrows() < DENSE_LIMIT && m.ncols() < DENSE_LIMIT {
        dense_rank(m)
    } else {
        ColumnReduction::new(m, false).rank()
    }
}

/// Same pivot rule as [`ColumnReduction`], on a dense row-major copy.
fn dense_rank(m: &FpMatrix) -> usize {
    let field = m.field();
    let rows = m.nrows();
    let cols = m.ncols();
    // column-major dense storage
    let mut a: Vec<Vec<u32>> = (0..cols)
        .map(|j| {
            let mut c = vec![0u32; rows];
            for &(r, v) in m.column(j) {
                c[r] = v;
            }
            c
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; rows];
    let mut rank = 0;
    for j in 0..cols {
        while let Some(r) = a[j].iter().position(|&x| x != 0) {
            match owner[r] {
                Some(k) => {
                    let coef = field.neg(field.mul(a[j][r], field.inv(a[k][r])));
                    let (head, tail) = a.split_at_mut(j);
                    let pivot = &head[k];
                    for (x, &y) in tail[0].iter_mut().zip(pivot.iter()).skip(r) {
                        if y != 0 {
                            *x = field.add(*x, field.mul(coef, y));
                        }
                    }
                }
                None => {
                    owner[r] = Some(j);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_cases() {
        let f2 = PrimeField::Z2;
        assert_eq!(rank(&FpMatrix::identity(2, f2)), 2);
        assert_eq!(rank(&FpMatrix::zeros(3, 4, f2)), 0);
        assert_eq!(
            rank(&FpMatrix::from_dense(&[vec![1, 1], vec![1, 1]], f2)),
            1
        );
        // rank 2 over Z3 but 1 over Z2
        let m = [vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&FpMatrix::from_dense(&m, f2)), 1);
        assert_eq!(rank(&FpMatrix::from_dense(&m, PrimeField::Z3)), 2);
    }

    #[test]
    fn dense_and_sparse_paths_agree() {
        let f = PrimeField::new(7).unwrap();
        let mut state = 12345u64;
        for _ in 0..50 {
            let mut next = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as i64
            };
            let rows = (next() % 20 + 1) as usize;
            let cols = (next() % 20 + 1) as usize;
            let dense: Vec<Vec<i64>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| if next() % 3 == 0 { next() % 7 } else { 0 })
                        .collect()
                })
                .collect();
            let m = FpMatrix::from_dense(&dense, f);
            assert_eq!(dense_rank(&m), ColumnReduction::new(&m, false).rank());
        }
    }

    #[test]
    fn solve_and_reduce() {
        let f2 = PrimeField::Z2;
        let m = FpMatrix::from_dense(&[vec![1], vec![1]], f2);
        let red = ColumnReduction::new(&m, true);
        assert_eq!(red.solve(&[(0, 1), (1, 1)]), Some(vec![(0, 1)]));
        assert_eq!(red.solve(&[(0, 1)]), None);
        assert_eq!(red.pivot_rows(), vec![0]);
    }
}
