use serde::{Deserialize, Serialize};

use equitable::exactla::ExactMatrix;
use equitable::scalars::Scalar;

/// The on-disk matrix format: dimensions and rows of scalar strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TripleFile {
    pub x: MatrixFile,
    pub y: MatrixFile,
    pub z: MatrixFile,
}

impl MatrixFile {
    pub fn from_matrix<S: Scalar>(m: &ExactMatrix<S>) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_rows().iter().map(|r| r.iter().map(|a| a.to_string()).collect()).collect(),
        }
    }

    pub fn to_matrix<S: Scalar>(&self) -> Result<ExactMatrix<S>, String> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(format!("entries do not form a {}x{} array", self.rows, self.cols));
        }
        if self.rows == 0 || self.cols == 0 {
            return Err("matrices must be nonempty".into());
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|a| S::parse_scalar(a).map_err(|e| e.to_string())).collect::<Result<Vec<S>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        ExactMatrix::from_rows(rows).map_err(|e| e.to_string())
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
