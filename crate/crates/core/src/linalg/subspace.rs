use super::field::PrimeField;
use super::matrix::{FpMatrix, SparseVec};
use super::reduce::ColumnReduction;
use crate::error::{Error, Result};

/// A subspace of `F_p^ambient_dim` given by independent basis columns.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    basis: FpMatrix,
    reduction: ColumnReduction,
}

impl SubspaceBasis {
    /// Fails if the columns are linearly dependent.
    pub fn new(basis: FpMatrix) -> Result<Self> {
        let reduction = ColumnReduction::new(&basis, true);
        if reduction.rank() != basis.ncols() {
            return Err(Error::invalid(format!(
                "{} basis columns span only a {}-dimensional space",
                basis.ncols(),
                reduction.rank()
            )));
        }
        Ok(SubspaceBasis { basis, reduction })
    }

    pub fn zero(ambient_dim: usize, field: PrimeField) -> Self {
        Self::new(FpMatrix::zeros(ambient_dim, 0, field)).expect("empty basis is independent")
    }

    pub fn full(ambient_dim: usize, field: PrimeField) -> Self {
        Self::new(FpMatrix::identity(ambient_dim, field)).expect("identity is independent")
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    /// The basis as the columns of an `ambient_dim x dim` matrix.
    pub fn matrix(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[(usize, u32)]) -> bool {
        self.reduction.in_column_space(v)
    }

    /// Coordinates of `v` in this basis (unique), or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[(usize, u32)]) -> Option<SparseVec> {
        self.reduction.solve(v)
    }
}

/// Null space of `m`; `dim kernel + rank = cols` is asserted.
pub fn kernel_basis(m: &FpMatrix) -> SubspaceBasis {
    let red = ColumnReduction::new(m, true);
    let vectors = red.kernel_vectors();
    assert_eq!(
        vectors.len() + red.rank(),
        m.ncols(),
        "rank-nullity violated"
    );
    let basis = FpMatrix::from_columns(m.ncols(), vectors, m.field())
        .expect("kernel vectors are well formed");
    SubspaceBasis::new(basis).expect("kernel vectors are independent")
}

/// Column space of `m`, spanned by the original pivot columns.
pub fn image_basis(m: &FpMatrix) -> SubspaceBasis {
    let red = ColumnReduction::new(m, false);
    SubspaceBasis::new(m.select_columns(red.pivot_columns()))
        .expect("pivot columns are independent")
}

/// Some `x` with `m x = b` if `b` is in the image of `m`.
pub fn solve_in_image(m: &FpMatrix, b: &[(usize, u32)]) -> Result<Option<SparseVec>> {
    if let Some(&(r, _)) = b.last() {
        if r >= m.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side index {r} exceeds {} rows",
                m.nrows()
            )));
        }
    }
    Ok(ColumnReduction::new(m, true).solve(b))
}

/// Projection of the ambient space onto the quotient by `sub`.
///
/// The quotient is identified with the coordinates that are not pivot rows of
/// the reduced basis of `sub` (the pivot complement), so the result has
/// `ambient_dim - dim(sub)` rows and kernel exactly `sub`.
#[derive(Clone, Debug)]
pub struct Quotient {
    reduction: ColumnReduction,
    complement: Vec<usize>,
    field: PrimeField,
}

impl Quotient {
    pub fn new(ambient_dim: usize, sub: &SubspaceBasis) -> Result<Self> {
        if sub.ambient_dim() != ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace lives in dimension {}, expected {ambient_dim}",
                sub.ambient_dim()
            )));
        }
        let reduction = ColumnReduction::new(sub.matrix(), false);
        let complement = (0..ambient_dim)
            .filter(|&r| !reduction.is_pivot_row(r))
            .collect();
        Ok(Quotient {
            reduction,
            complement,
            field: sub.field(),
        })
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.reduction.nrows()
    }

    /// Ambient coordinates chosen as representatives of the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[(usize, u32)]) -> SparseVec {
        let (rest, _) = self.reduction.reduce_vector(v);
        rest.into_iter()
            .map(|(r, x)| {
                let idx = self
                    .complement
                    .binary_search(&r)
                    .expect("residual lies on the complement");
                (idx, x)
            })
            .collect()
    }

    pub fn matrix(&self) -> FpMatrix {
        let cols = (0..self.ambient_dim())
            .map(|i| self.project(&[(i, 1)]))
            .collect();
        FpMatrix::from_columns(self.dim(), cols, self.field).expect("projection is well formed")
    }

    /// Inclusion of the complement representatives into the ambient space.
    pub fn section(&self) -> FpMatrix {
        let cols = self.complement.iter().map(|&r| vec![(r, 1)]).collect();
        FpMatrix::from_columns(self.ambient_dim(), cols, self.field)
            .expect("section is well formed")
    }
}

/// Matrix of the surjection onto `F_p^ambient_dim / span(sub)`.
pub fn quotient_map(ambient_dim: usize, sub: &SubspaceBasis) -> Result<FpMatrix> {
    Ok(Quotient::new(ambient_dim, sub)?.matrix())
}

/// Matrix of `m` restricted to `span(domain)` with values in `span(codomain)`,
/// in the given bases.
pub fn restrict_map(
    m: &FpMatrix,
    domain: &SubspaceBasis,
    codomain: &SubspaceBasis,
) -> Result<FpMatrix> {
    if domain.ambient_dim() != m.ncols() || codomain.ambient_dim() != m.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, subspaces live in {} and {}",
            m.nrows(),
            m.ncols(),
            domain.ambient_dim(),
            codomain.ambient_dim()
        )));
    }
    let mut cols = Vec::with_capacity(domain.dim());
    for (j, u) in domain.matrix().columns().iter().enumerate() {
        let image = m.mul_vec(u);
        let coords = codomain.coordinates(&image).ok_or_else(|| {
            Error::consistency(format!(
                "image of domain basis vector {j} escapes the codomain subspace"
            ))
        })?;
        cols.push(coords);
    }
    FpMatrix::from_columns(codomain.dim(), cols, m.field())
}
