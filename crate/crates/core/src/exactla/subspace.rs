use crate::scalars::Scalar;

use super::{ExactMatrix, LinalgError};

/// A subspace of `F^n`, stored as a reduced column-echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<S> {
    ambient: usize,
    basis: ExactMatrix<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: ExactMatrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: ExactMatrix::identity(ambient) }
    }

    /// The span of the given vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Self {
        Self::column_space(&ExactMatrix::from_columns(ambient, vectors))
    }

    /// The span of the coordinate vectors `e_i` for `i` in `indices`.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vec<S>> = indices
            .into_iter()
            .map(|i| (0..ambient).map(|k| if k == i { S::one() } else { S::zero() }).collect())
            .collect();
        Self::span(ambient, &vs)
    }

    pub fn column_space(m: &ExactMatrix<S>) -> Self {
        let (r, pivots) = m.transpose().rref();
        let rank = pivots.len();
        let basis = ExactMatrix::from_fn(m.rows(), rank, |i, j| r.get(j, i).clone());
        Subspace { ambient: m.rows(), basis }
    }

    pub fn kernel(m: &ExactMatrix<S>) -> Self {
        let (r, pivots) = m.rref();
        let n = m.cols();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let vs: Vec<Vec<S>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![S::zero(); n];
                v[f] = S::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect();
        Self::span(n, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &ExactMatrix<S> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<S>> {
        self.basis.columns()
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Shape(format!(
                "subspaces of F^{} and F^{} cannot be combined",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::column_space(&self.basis.hstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient));
        }
        let k = Subspace::kernel(&self.basis.hstack(&other.basis.neg()));
        let a = self.dim();
        let vs: Vec<Vec<S>> = k.vectors().iter().map(|c| self.basis.apply(&c[..a])).collect();
        Ok(Self::span(self.ambient, &vs))
    }

    /// The image of this subspace under `m`.
    pub fn image(&self, m: &ExactMatrix<S>) -> Result<Self, LinalgError> {
        Ok(Self::column_space(&m.try_mul(&self.basis)?))
    }

    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let extended = self.basis.hstack(&ExactMatrix::from_columns(self.ambient, &[v.to_vec()]));
        extended.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vectors().iter().all(|v| other.contains(v))
    }

    /// The vectors `f` with `u^T G f = 0` for every `u` in this subspace.
    pub fn annihilator(&self, gram: &ExactMatrix<S>) -> Result<Self, LinalgError> {
        if gram.rows() != self.ambient {
            return Err(LinalgError::Shape("Gram matrix does not match the ambient space".into()));
        }
        if self.dim() == 0 {
            return Ok(Self::full(gram.cols()));
        }
        Ok(Self::kernel(&self.basis.transpose().try_mul(gram)?))
    }
}
