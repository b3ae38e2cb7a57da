//! Dense exact linear algebra: matrices, echelon forms, subspaces, and
//! endomorphisms constrained by decomposition shapes.

mod matrix;
mod subspace;

use std::str::FromStr;

use thiserror::Error;

use crate::scalars::Scalar;

pub use matrix::ExactMatrix;
pub use subspace::Subspace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// How an endomorphism may act relative to a decomposition `V_0 + ... + V_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `phi V_i` lies in `V_i`.
    Diagonal,
    /// `phi V_i` lies in `V_{i-1}`, and `phi V_0 = 0`.
    Lowering,
    /// `phi V_i` lies in `V_{i+1}`, and `phi V_d = 0`.
    Raising,
    /// `phi V_i` lies in `V_i + V_{i-1}`.
    QuasiLowering,
    /// `phi V_i` lies in `V_i + V_{i+1}`.
    QuasiRaising,
}

impl ShapeKind {
    /// Whether the coefficient of `v_i` in `phi(v_j)` may be nonzero.
    pub fn allows(self, i: usize, j: usize) -> bool {
        match self {
            ShapeKind::Diagonal => i == j,
            ShapeKind::Lowering => i + 1 == j,
            ShapeKind::Raising => i == j + 1,
            ShapeKind::QuasiLowering => i == j || i + 1 == j,
            ShapeKind::QuasiRaising => i == j || i == j + 1,
        }
    }
}

impl FromStr for ShapeKind {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "diagonal" => Ok(ShapeKind::Diagonal),
            "lowering" => Ok(ShapeKind::Lowering),
            "raising" => Ok(ShapeKind::Raising),
            "quasi-lowering" => Ok(ShapeKind::QuasiLowering),
            "quasi-raising" => Ok(ShapeKind::QuasiRaising),
            other => Err(LinalgError::Parameter(format!("unknown constraint kind '{other}'"))),
        }
    }
}

/// A shape requirement relative to a decomposition given by an adapted basis:
/// column `i` of `adapted` spans the component `V_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeConstraint<S> {
    pub kind: ShapeKind,
    pub adapted: ExactMatrix<S>,
}

/// All `n x n` matrices satisfying every constraint, as a subspace of `F^{n^2}`
/// (row-major flattening).
pub fn constrained_endomorphism_space<S: Scalar>(
    n: usize,
    constraints: &[ShapeConstraint<S>],
) -> Result<Subspace<S>, LinalgError> {
    let mut rows: Vec<Vec<S>> = Vec::new();
    for c in constraints {
        if c.adapted.rows() != n || c.adapted.cols() != n {
            return Err(LinalgError::Shape(format!("adapted basis must be {n}x{n}")));
        }
        let inv = c.adapted.inverse()?;
        for i in 0..n {
            for j in 0..n {
                if c.kind.allows(i, j) {
                    continue;
                }
                let row: Vec<S> = (0..n * n)
                    .map(|idx| {
                        let (k, l) = (idx / n, idx % n);
                        inv.get(i, k).clone() * c.adapted.get(l, j)
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(n * n));
    }
    Ok(Subspace::kernel(&ExactMatrix::from_rows(rows)?))
}

/// Flattens a square matrix row-major.
pub fn flatten<S: Scalar>(m: &ExactMatrix<S>) -> Vec<S> {
    m.entries().to_vec()
}
