use std::fmt;

use crate::scalars::Scalar;

use super::LinalgError;

/// A dense row-major matrix with exact entries. Rows and columns are indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The reversal matrix with entries `delta(i + j, n - 1)`.
    pub fn reversal(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i + j + 1 == n { S::one() } else { S::zero() })
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("rows have different lengths".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// The `n x k` matrix whose columns are the given vectors of length `n`.
    pub fn from_columns(n: usize, columns: &[Vec<S>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == n), "column length mismatch");
        Self::from_fn(n, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ExactMatrix<T> {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<ExactMatrix<T>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `Z B Z`: entry `(i, j)` of the result is entry `(d - i, d - j)` of `B`.
    pub fn z_conjugate(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(format!("Z-conjugation needs a square matrix, got {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        Ok(Self::from_fn(n, n, |i, j| self.get(n - 1 - i, n - 1 - j).clone()))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = self.cols;
        let data = (0..self.rows)
            .flat_map(|i| (0..rhs.cols).map(move |j| (i, j)))
            .map(|(i, j)| {
                S::dot((0..n).map(|k| (self.get(i, k), rhs.get(k, j))).filter(|(a, b)| !a.is_zero() && !b.is_zero()))
            })
            .collect();
        Ok(ExactMatrix { rows: self.rows, cols: rhs.cols, data })
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + &(a.clone() * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| if a.is_zero() { S::zero() } else { a.clone() * c })
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap_or_else(|| Self::identity(self.rows))
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row-echelon form and pivot columns, pivoting on the first nonzero entry.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().expect("nonzero pivot");
            for x in m[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
            for i in 0..self.rows {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone();
                for j in c..self.cols {
                    if !m[r][j].is_zero() {
                        let t = f.clone() * &m[r][j];
                        m[i][j] = m[i][j].clone() - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (ExactMatrix::from_rows(m).unwrap_or_else(|_| Self::zeros(self.rows, self.cols)), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse by fraction-free (Bareiss) elimination followed by back substitution.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut m: Vec<Vec<S>> = (0..n)
            .map(|i| {
                let mut row = self.row(i);
                row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
                row
            })
            .collect();
        let mut prev = S::one();
        for k in 0..n {
            let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(LinalgError::Singular)?;
            m.swap(k, p);
            for i in k + 1..n {
                for j in k + 1..2 * n {
                    let a = m[k][k].clone() * &m[i][j];
                    let b = m[i][k].clone() * &m[k][j];
                    let v = a - b;
                    m[i][j] = if v.is_zero() { v } else { v / &prev };
                }
                m[i][k] = S::zero();
            }
            prev = m[k][k].clone();
        }
        let mut x = vec![vec![S::zero(); n]; n];
        for i in (0..n).rev() {
            let inv = m[i][i].inv().ok_or(LinalgError::Singular)?;
            for c in 0..n {
                let mut acc = m[i][n + c].clone();
                for j in i + 1..n {
                    if !m[i][j].is_zero() && !x[j][c].is_zero() {
                        acc = acc - m[i][j].clone() * &x[j][c];
                    }
                }
                x[i][c] = if acc.is_zero() { acc } else { acc * &inv };
            }
        }
        ExactMatrix::from_rows(x)
    }
}

impl<S: Scalar> fmt::Display for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect();
        let widths: Vec<usize> =
            (0..self.cols).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        for row in &cells {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c:>w$}", w = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
