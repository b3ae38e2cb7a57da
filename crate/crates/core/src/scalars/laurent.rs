use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::guard::check_terms;

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely from the lowest exponent `lo`; the first and last stored
/// coefficients are nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { lo: e, coeffs: vec![c] }
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigRational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn from_dense(lo: i64, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        let p = LaurentPoly { lo: lo + lead as i64, coeffs };
        check_terms(p.term_count());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The constant value, if the polynomial has no nonzero power of `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 if self.lo == 0 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// `(c, e)` if the polynomial is the single term `c * q^e`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        if self.coeffs.len() == 1 {
            Some((&self.coeffs[0], self.lo))
        } else {
            None
        }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn high_exp(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.lo + self.coeffs.len() as i64 - 1
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        if e < self.lo {
            return BigRational::zero();
        }
        self.coeffs.get((e - self.lo) as usize).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Replaces `q` by `q^-1`.
    pub fn subst_q_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { lo: -self.high_exp(), coeffs }
    }

    /// Value at a nonzero rational `q0`.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        assert!(!q0.is_zero(), "Laurent polynomial evaluated at zero");
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc * pow_rational(q0, self.lo)
    }

    /// Exact quotient `self / rhs`, or `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = rhs.as_monomial() {
            let inv = c.recip();
            return Some(self.scale(&inv).shift(-e));
        }
        let n = self.coeffs.len();
        let m = rhs.coeffs.len();
        if n < m {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); n - m + 1];
        let lead_inv = rhs.coeffs[m - 1].recip();
        for k in (0..=n - m).rev() {
            let c = &rem[k + m - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.lo - rhs.lo, quot))
    }

    pub(crate) fn from_parts(lo: i64, coeffs: Vec<BigRational>) -> Self {
        Self::from_dense(lo, coeffs)
    }

    /// Integer coefficient vector (ascending, starting at `q^lo`) scaled so that it is primitive
    /// with positive leading coefficient, together with the rational scale applied.
    pub(crate) fn primitive_integer_part(&self) -> (Vec<BigInt>, BigRational) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let mut g = BigInt::zero();
        for a in &ints {
            g = num_integer::Integer::gcd(&g, a);
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let ints = ints.into_iter().map(|a| a / &g).collect();
        (ints, BigRational::new(lcm, g))
    }
}

pub(crate) fn pow_rational(q0: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { q0.recip() } else { q0.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let lo = a.lo.min(b.lo);
    let hi = a.high_exp().max(b.high_exp());
    let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.lo - lo) as usize + k] = c.clone();
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.lo - lo) as usize + k];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(lo, coeffs)
}

fn mul_dense(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut coeffs = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                coeffs[i + j] += x * y;
            }
        }
    }
    LaurentPoly::from_dense(a.lo + b.lo, coeffs)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_dense(self, rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        add_dense(&self, &rhs, false)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        add_dense(&self, &rhs, true)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_dense(&self, &rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}
