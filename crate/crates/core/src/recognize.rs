//! Recognition of module structures from a triple of matrices in which one is
//! diagonal, one lower bidiagonal and one upper bidiagonal.
//!
//! The diagonals expose the three spectra. Their common recurrence parameter
//! `b` decides between the quantum case (`b = q^-2`) and the classical `sl2`
//! case (`b = 1`). After affine normalization the defining relations are
//! checked exactly.

use std::fmt;

use thiserror::Error;

use crate::exactla::{ExactMatrix, LinalgError};
use crate::repkit::VerificationReport;
use crate::scalars::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("sequence is not b-recurrent: {0}")]
    NotRecurrent(String),
    #[error("inconsistent recurrence parameters: {0}")]
    Mismatch(String),
    #[error("b = {0} has no square root in this field; supply q")]
    NeedsHint(String),
    #[error("the normalized triple does not satisfy the relations:\n{0}")]
    NotAModule(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Outcome of [`detect_b`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recurrence<S> {
    Determined(S),
    /// Sequences of length at most two satisfy every recurrence.
    Indeterminate,
}

impl<S: Scalar> Recurrence<S> {
    pub fn value(&self) -> Option<&S> {
        match self {
            Recurrence::Determined(b) => Some(b),
            Recurrence::Indeterminate => None,
        }
    }
}

/// The `b` for which `(a_i - a_{i+1}) / (a_{i-1} - a_i) = b` for all interior `i`.
pub fn detect_b<S: Scalar>(seq: &[S]) -> Result<Recurrence<S>, RecognizeError> {
    if seq.is_empty() {
        return Err(RecognizeError::NotRecurrent("empty sequence".into()));
    }
    if let Some(i) = (1..seq.len()).find(|&i| seq[i - 1] == seq[i]) {
        return Err(RecognizeError::NotRecurrent(format!("entries {} and {i} coincide", i - 1)));
    }
    if seq.len() <= 2 {
        return Ok(Recurrence::Indeterminate);
    }
    let ratio = |i: usize| (seq[i].clone() - &seq[i + 1]) / (seq[i - 1].clone() - &seq[i]);
    let b = ratio(1);
    if let Some(i) = (2..seq.len() - 1).find(|&i| ratio(i) != b) {
        return Err(RecognizeError::NotRecurrent(format!("ratio at {i} is {} but at 1 is {b}", ratio(i))));
    }
    Ok(Recurrence::Determined(b))
}

/// `X` diagonal, `Y` lower bidiagonal and `Z` upper bidiagonal, with nonzero
/// off-diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeTriple<S> {
    d: usize,
    x: ExactMatrix<S>,
    y: ExactMatrix<S>,
    z: ExactMatrix<S>,
}

fn check_band<S: Scalar>(name: &str, m: &ExactMatrix<S>, offset: isize) -> Result<(), RecognizeError> {
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let diff = j as isize - i as isize;
            let zero = m.get(i, j).is_zero();
            if diff != 0 && diff != offset && !zero {
                return Err(RecognizeError::Shape(format!("{name} has a nonzero entry at ({i}, {j})")));
            }
            if diff == offset && offset != 0 && zero {
                return Err(RecognizeError::Shape(format!("{name} has a zero entry at ({i}, {j}) on its off-diagonal")));
            }
        }
    }
    Ok(())
}

impl<S: Scalar> ShapeTriple<S> {
    pub fn new(x: ExactMatrix<S>, y: ExactMatrix<S>, z: ExactMatrix<S>) -> Result<Self, RecognizeError> {
        let n = x.rows();
        for (name, m) in [("X", &x), ("Y", &y), ("Z", &z)] {
            if !m.is_square() || m.rows() != n || n == 0 {
                return Err(RecognizeError::Shape(format!("{name} must be a nonempty square matrix of size {n}")));
            }
        }
        check_band("X", &x, 0)?;
        check_band("Y", &y, -1)?;
        check_band("Z", &z, 1)?;
        Ok(ShapeTriple { d: n - 1, x, y, z })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn matrices(&self) -> [&ExactMatrix<S>; 3] {
        [&self.x, &self.y, &self.z]
    }

    fn diagonal(m: &ExactMatrix<S>) -> Vec<S> {
        (0..m.rows()).map(|i| m.get(i, i).clone()).collect()
    }
}

/// Optional information supplied when the diagonals do not determine it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hints<S> {
    pub q: Option<S>,
    pub b: Option<S>,
}

impl<S> Default for Hints<S> {
    fn default() -> Self {
        Hints { q: None, b: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Branch<S> {
    Quantum { q: S },
    ClassicalSl2,
    Underdetermined,
}

impl<S: Scalar> fmt::Display for Branch<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Quantum { q } => write!(f, "quantum (q = {q})"),
            Branch::ClassicalSl2 => f.write_str("classical sl2"),
            Branch::Underdetermined => f.write_str("underdetermined"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult<S> {
    pub b: Option<S>,
    pub branch: Branch<S>,
    /// The affinely normalized `X, Y, Z`, absent when underdetermined.
    pub normalized: Option<[ExactMatrix<S>; 3]>,
    pub certificate: VerificationReport,
}

/// Solves `seq_i = a1 + a2 * target_i` and returns `(a1, a2)`.
fn affine_fit<S: Scalar>(seq: &[S], target: &[S]) -> Option<(S, S)> {
    let a2 = if seq.len() == 1 {
        S::one()
    } else {
        (seq[0].clone() - &seq[1]) / (target[0].clone() - &target[1])
    };
    let a1 = seq[0].clone() - a2.clone() * &target[0];
    let fits = seq.iter().zip(target).all(|(s, t)| *s == a1.clone() + &(a2.clone() * t));
    (fits && !a2.is_zero()).then_some((a1, a2))
}

fn normalize<S: Scalar>(m: &ExactMatrix<S>, a1: &S, a2: &S) -> ExactMatrix<S> {
    let n = m.rows();
    m.sub(&ExactMatrix::identity(n).scale(a1)).scale(&(S::one() / a2.clone()))
}

/// Whether the matrices generate the full matrix algebra, which certifies
/// that no proper nonzero subspace is invariant under all of them.
pub fn irreducibility_certificate<S: Scalar>(mats: &[ExactMatrix<S>]) -> bool {
    let Some(first) = mats.first() else {
        return false;
    };
    let n = first.rows();
    let full = n * n;
    let mut echelon: Vec<(usize, Vec<S>)> = Vec::new();
    let mut reduce = |mut v: Vec<S>| -> bool {
        for (p, row) in &echelon {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.clone() - c.clone() * b;
                    }
                }
            }
        }
        match v.iter().position(|a| !a.is_zero()) {
            Some(p) => {
                let c = S::one() / v[p].clone();
                let v: Vec<S> = v.into_iter().map(|a| a * &c).collect();
                for (_, row) in echelon.iter_mut() {
                    if !row[p].is_zero() {
                        let k = row[p].clone();
                        for (a, b) in row.iter_mut().zip(&v) {
                            *a = a.clone() - k.clone() * b;
                        }
                    }
                }
                echelon.push((p, v));
                true
            }
            None => false,
        }
    };
    let mut frontier = vec![ExactMatrix::identity(n)];
    reduce(ExactMatrix::<S>::identity(n).entries().to_vec());
    let mut dim = 1;
    while let Some(w) = frontier.pop() {
        for g in mats {
            let next = g.mul(&w);
            if reduce(next.entries().to_vec()) {
                dim += 1;
                if dim == full {
                    return true;
                }
                frontier.push(next);
            }
        }
    }
    dim == full
}

fn commutator<S: Scalar>(a: &ExactMatrix<S>, b: &ExactMatrix<S>) -> ExactMatrix<S> {
    a.mul(b).sub(&b.mul(a))
}

/// Reads `b` from the diagonals, normalizes the triple and certifies the relations.
pub fn recognize_triple<S: Scalar>(t: &ShapeTriple<S>, hints: &Hints<S>) -> Result<RecognitionResult<S>, RecognizeError> {
    let d = t.d;
    let n = d + 1;
    let seqs = [ShapeTriple::diagonal(&t.x), ShapeTriple::diagonal(&t.y), ShapeTriple::diagonal(&t.z)];
    let mut certificate = VerificationReport::new();
    let mut candidates: Vec<(String, S)> = Vec::new();
    for (k, (name, seq)) in ["X", "Y", "Z"].iter().zip(&seqs).enumerate() {
        let rec = detect_b(seq)?;
        certificate.check(format!("diagonal of {name} is recurrent"), true);
        if let Recurrence::Determined(b) = rec {
            let b = if k == 0 { b } else { S::one() / b };
            candidates.push((format!("diagonal of {name}"), b));
        }
    }
    if let Some(b) = &hints.b {
        candidates.push(("b hint".into(), b.clone()));
    }
    if let Some(q) = &hints.q {
        if q.is_zero() {
            return Err(RecognizeError::Mismatch("q hint must be nonzero".into()));
        }
        candidates.push(("q hint".into(), S::one() / (q.clone() * q)));
    }
    let b = match candidates.first() {
        None => {
            return Ok(RecognitionResult { b: None, branch: Branch::Underdetermined, normalized: None, certificate });
        }
        Some((_, b)) => b.clone(),
    };
    if let Some((src, other)) = candidates.iter().find(|(_, c)| *c != b) {
        return Err(RecognizeError::Mismatch(format!("{} gives b = {b} but {src} gives b = {other}", candidates[0].0)));
    }
    certificate.check("the three diagonals share b (Y and Z read in reverse order)", true);

    let (branch, targets) = if b.is_one() {
        let t = |i: usize| S::from_i64(2 * i as i64 - d as i64);
        let up: Vec<S> = (0..n).map(t).collect();
        let down: Vec<S> = up.iter().rev().cloned().collect();
        (Branch::ClassicalSl2, [up, down.clone(), down])
    } else {
        let q = match &hints.q {
            Some(q) => q.clone(),
            None => (S::one() / b.clone()).exact_sqrt().ok_or_else(|| RecognizeError::NeedsHint(b.to_string()))?,
        };
        let qi = S::one() / q.clone();
        let pow = |e: i64| {
            let base = if e >= 0 { &q } else { &qi };
            (0..e.unsigned_abs()).fold(S::one(), |acc, _| acc * base)
        };
        let down: Vec<S> = (0..n).map(|i| pow(d as i64 - 2 * i as i64)).collect();
        let up: Vec<S> = down.iter().rev().cloned().collect();
        (Branch::Quantum { q }, [down, up.clone(), up])
    };

    let mats = t.matrices();
    let mut normalized = Vec::with_capacity(3);
    for ((name, m), (seq, target)) in ["X", "Y", "Z"].iter().zip(mats).zip(seqs.iter().zip(&targets)) {
        let (a1, a2) = affine_fit(seq, target)
            .ok_or_else(|| RecognizeError::Mismatch(format!("the diagonal of {name} is not an affine image of the expected spectrum")))?;
        normalized.push(normalize(m, &a1, &a2));
    }
    let [x, y, z]: [ExactMatrix<S>; 3] = normalized.try_into().expect("three matrices");
    let id = ExactMatrix::identity(n);
    match &branch {
        Branch::Quantum { q } => {
            let qi = S::one() / q.clone();
            let scale = q.clone() - &qi;
            let rel = |a: &ExactMatrix<S>, b: &ExactMatrix<S>| a.mul(b).scale(q).sub(&b.mul(a).scale(&qi));
            certificate.check_eq("q XY - q^-1 YX = (q - q^-1) I", &rel(&x, &y), &id.scale(&scale));
            certificate.check_eq("q YZ - q^-1 ZY = (q - q^-1) I", &rel(&y, &z), &id.scale(&scale));
            certificate.check_eq("q ZX - q^-1 XZ = (q - q^-1) I", &rel(&z, &x), &id.scale(&scale));
        }
        Branch::ClassicalSl2 => {
            let two = S::from_i64(2);
            certificate.check_eq("[X, Y] = 2X + 2Y", &commutator(&x, &y), &x.add(&y).scale(&two));
            certificate.check_eq("[Y, Z] = 2Y + 2Z", &commutator(&y, &z), &y.add(&z).scale(&two));
            certificate.check_eq("[Z, X] = 2Z + 2X", &commutator(&z, &x), &z.add(&x).scale(&two));
        }
        Branch::Underdetermined => unreachable!("b is known here"),
    }
    certificate.check("irreducible", irreducibility_certificate(&[x.clone(), y.clone(), z.clone()]));
    if !certificate.all_passed() {
        return Err(RecognizeError::NotAModule(certificate.to_string()));
    }
    Ok(RecognitionResult { b: Some(b), branch, normalized: Some([x, y, z]), certificate })
}
