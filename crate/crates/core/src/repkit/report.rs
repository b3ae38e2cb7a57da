use std::fmt;

use crate::exactla::ExactMatrix;
use crate::scalars::Scalar;

/// The first entry where two matrices disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportItem {
    pub name: String,
    pub passed: bool,
    pub discrepancy: Option<Discrepancy>,
    pub note: Option<String>,
}

/// An ordered list of named pass/fail checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub items: Vec<ReportItem>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.items.push(ReportItem { name: name.into(), passed, discrepancy: None, note: None });
    }

    pub fn check_with_note(&mut self, name: impl Into<String>, passed: bool, note: impl Into<String>) {
        self.items.push(ReportItem { name: name.into(), passed, discrepancy: None, note: Some(note.into()) });
    }

    /// Records whether `lhs == rhs`, keeping the first differing entry on failure.
    pub fn check_eq<S: Scalar>(&mut self, name: impl Into<String>, lhs: &ExactMatrix<S>, rhs: &ExactMatrix<S>) {
        let discrepancy = first_discrepancy(lhs, rhs);
        self.items.push(ReportItem { name: name.into(), passed: discrepancy.is_none(), discrepancy, note: None });
    }

    pub fn extend(&mut self, prefix: &str, other: VerificationReport) {
        for mut item in other.items {
            if !prefix.is_empty() {
                item.name = format!("{prefix}: {}", item.name);
            }
            self.items.push(item);
        }
    }
}

pub fn first_discrepancy<S: Scalar>(lhs: &ExactMatrix<S>, rhs: &ExactMatrix<S>) -> Option<Discrepancy> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(Discrepancy {
            row: 0,
            col: 0,
            lhs: format!("{}x{} matrix", lhs.rows(), lhs.cols()),
            rhs: format!("{}x{} matrix", rhs.rows(), rhs.cols()),
        });
    }
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return Some(Discrepancy {
                    row: i,
                    col: j,
                    lhs: lhs.get(i, j).to_string(),
                    rhs: rhs.get(i, j).to_string(),
                });
            }
        }
    }
    None
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            write!(f, "{} {}", if item.passed { "PASS" } else { "FAIL" }, item.name)?;
            if let Some(n) = &item.note {
                write!(f, " ({n})")?;
            }
            if let Some(d) = &item.discrepancy {
                write!(f, " at ({}, {}): {} != {}", d.row, d.col, d.lhs, d.rhs)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
