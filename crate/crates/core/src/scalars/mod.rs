//! Exact scalars: Laurent polynomials in `q`, rational functions in `q`, and
//! rationals at a fixed value of `q`, together with q-integers and q-binomials.

mod guard;
mod laurent;
mod parse;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use guard::{guarded, quiet_term_bound_panics, set_term_bound, term_bound, with_term_bound, TermBoundExceeded, DEFAULT_TERM_BOUND};
pub use laurent::LaurentPoly;
pub use parse::parse_ratfunc;
pub use ratfunc::RatFunc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cannot parse scalar '{input}': {reason}")]
    Parse { input: String, reason: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("denominator vanishes at q = {0}")]
    Evaluation(String),
    #[error("polynomial with {terms} terms exceeds the term bound {bound}")]
    ResourceExhausted { terms: usize, bound: usize },
}

/// An exact field element usable as a matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: BigRational) -> Self;
    /// Parses the scalar text grammar.
    fn parse_scalar(s: &str) -> Result<Self, ScalarError>;
    /// The value as a rational, if it does not depend on `q`.
    fn as_rational(&self) -> Option<BigRational>;

    /// A square root within the backend, when one exists.
    fn exact_sqrt(&self) -> Option<Self>;

    /// `sum a_i b_i` over the given pairs.
    fn dot<'a>(pairs: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self {
        pairs.fold(Self::zero(), |acc, (a, b)| acc + &(a.clone() * b))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Scalar for RatFunc {
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(BigRational::from_integer(n.into()))
    }
    fn from_rational(r: BigRational) -> Self {
        RatFunc::constant(r)
    }
    fn parse_scalar(s: &str) -> Result<Self, ScalarError> {
        parse_ratfunc(s)
    }
    fn as_rational(&self) -> Option<BigRational> {
        self.as_constant()
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn exact_sqrt(&self) -> Option<Self> {
        if !self.is_laurent() {
            return None;
        }
        let (c, e) = self.numerator().as_monomial()?;
        if e % 2 != 0 {
            return None;
        }
        Some(RatFunc::from_poly(LaurentPoly::monomial(rational_sqrt(c)?, e / 2)))
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn from_rational(r: BigRational) -> Self {
        r
    }
    fn parse_scalar(s: &str) -> Result<Self, ScalarError> {
        let v = parse_ratfunc(s)?;
        v.as_constant().ok_or_else(|| ScalarError::Parse {
            input: s.to_string(),
            reason: "the rational backend expects a rational number".into(),
        })
    }
    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn exact_sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn dot<'a>(pairs: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (a, b) in pairs {
            let (n, d) = (a.numer() * b.numer(), a.denom() * b.denom());
            if d == den {
                num += n;
            } else {
                let g = den.gcd(&d);
                let (dq, cq) = (&d / &g, &den / &g);
                num = num * &dq + n * cq;
                den *= dq;
            }
        }
        BigRational::new(num, den)
    }
}

/// The nonnegative rational square root of `r`, if `r` is a rational square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

/// The parameter `q` of a backend together with its inverse.
///
/// Swapping the two (see [`QRing::inverted`]) realizes the substitution `q -> q^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRing<S> {
    q: S,
    q_inv: S,
}

impl QRing<RatFunc> {
    /// The symbolic backend: `q` is an indeterminate.
    pub fn symbolic() -> Self {
        QRing { q: RatFunc::q(), q_inv: RatFunc::q_pow(-1) }
    }
}

impl QRing<BigRational> {
    /// The numeric backend at `q = q0`.
    pub fn numeric(q0: BigRational) -> Result<Self, ScalarError> {
        check_q0(&q0)?;
        Ok(QRing { q_inv: q0.recip(), q: q0 })
    }
}

fn check_q0(q0: &BigRational) -> Result<(), ScalarError> {
    if q0.is_zero() || q0.is_one() || *q0 == -BigRational::one() {
        return Err(ScalarError::InvalidParameter(format!("q = {q0} must avoid 0, 1 and -1")));
    }
    Ok(())
}

impl<S: Scalar> QRing<S> {
    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn q_inv(&self) -> &S {
        &self.q_inv
    }

    /// The same backend with `q` and `q^-1` exchanged.
    pub fn inverted(&self) -> Self {
        QRing { q: self.q_inv.clone(), q_inv: self.q.clone() }
    }

    pub fn pow(&self, e: i64) -> S {
        let base = if e < 0 { &self.q_inv } else { &self.q };
        let mut n = e.unsigned_abs();
        let mut b = base.clone();
        let mut acc = S::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = b.clone() * &b;
            }
        }
        acc
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv(&self) -> S {
        self.q.clone() - &self.q_inv
    }

    /// The q-integer `[n] = (q^n - q^-n)/(q - q^-1)`.
    pub fn q_int(&self, n: i64) -> S {
        let m = n.abs();
        let mut acc = S::zero();
        for k in 0..m {
            acc = acc + &self.pow(m - 1 - 2 * k);
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }

    /// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
    pub fn q_factorial(&self, n: usize) -> S {
        (1..=n as i64).fold(S::one(), |acc, k| acc * &self.q_int(k))
    }

    /// The q-binomial `[n]!/([i]![n-i]!)`.
    pub fn q_binom(&self, n: usize, i: usize) -> Result<S, ScalarError> {
        if i > n {
            return Err(ScalarError::InvalidParameter(format!("q-binomial needs 0 <= i <= n, got n = {n}, i = {i}")));
        }
        Ok(self.q_binom_row(n).swap_remove(i))
    }

    /// All q-binomials `[n, 0], ..., [n, n]` via `[n,k] = q^k [n-1,k] + q^{k-n} [n-1,k-1]`.
    pub fn q_binom_row(&self, n: usize) -> Vec<S> {
        let mut row = vec![S::one()];
        for m in 1..=n {
            let mut next = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let mut v = S::zero();
                if k < m {
                    v = v + &(self.pow(k as i64) * &row[k]);
                }
                if k > 0 {
                    v = v + &(self.pow(k as i64 - m as i64) * &row[k - 1]);
                }
                next.push(v);
            }
            row = next;
        }
        row
    }

    /// Parses a scalar in this backend's text grammar.
    pub fn parse(&self, s: &str) -> Result<S, ScalarError> {
        S::parse_scalar(s)
    }
}

/// The q-integer `[n]` as a Laurent polynomial.
pub fn q_int(n: i64) -> RatFunc {
    QRing::symbolic().q_int(n)
}

/// The q-binomial `[n, i]` as a Laurent polynomial.
pub fn q_binom(n: usize, i: usize) -> Result<RatFunc, ScalarError> {
    QRing::symbolic().q_binom(n, i)
}

/// Replaces `q` by `q^-1`.
pub fn subst_q_inverse(s: &RatFunc) -> RatFunc {
    s.subst_q_inverse()
}

/// Exact value of `s` at `q = q0`.
pub fn eval_at(s: &RatFunc, q0: &BigRational) -> Result<BigRational, ScalarError> {
    check_q0(q0)?;
    s.eval(q0).ok_or_else(|| ScalarError::Evaluation(q0.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&r(9, 4)), Some(r(3, 2)));
        assert_eq!(rational_sqrt(&r(2, 1)), None);
        assert_eq!(rational_sqrt(&r(-4, 1)), None);
        assert_eq!(parse_ratfunc("4*q^-2").unwrap().exact_sqrt(), Some(parse_ratfunc("2*q^-1").unwrap()));
        assert_eq!(parse_ratfunc("q^3").unwrap().exact_sqrt(), None);
        assert_eq!(parse_ratfunc("q^2 + 1").unwrap().exact_sqrt(), None);
        assert_eq!(r(1, 16).exact_sqrt(), Some(r(1, 4)));
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(0), RatFunc::zero());
        assert_eq!(q_int(1), RatFunc::one());
        assert_eq!(q_int(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(q_int(-3), -q_int(3));
        let long = parse_ratfunc("(q^3 - q^-3)/(q - q^-1)").unwrap();
        assert_eq!(q_int(3), long);
    }

    #[test]
    fn q_binom_values() {
        assert_eq!(q_binom(4, 0).unwrap(), RatFunc::one());
        assert_eq!(q_binom(4, 4).unwrap(), RatFunc::one());
        let ring = QRing::symbolic();
        let via_factorials = ring.q_factorial(3) / (ring.q_factorial(1) * ring.q_factorial(2));
        assert_eq!(q_binom(3, 1).unwrap(), via_factorials);
        assert_eq!(q_binom(3, 1).unwrap(), q_int(3));
        assert_eq!(q_binom(2, 1).unwrap(), q_int(2));
        assert!(matches!(q_binom(2, 3), Err(ScalarError::InvalidParameter(_))));
    }

    #[test]
    fn q_binom_matches_factorial_quotient() {
        let ring = QRing::symbolic();
        for n in 0..=8 {
            for i in 0..=n {
                let f = ring.q_factorial(n) / (ring.q_factorial(i) * ring.q_factorial(n - i));
                let b = ring.q_binom(n, i).unwrap();
                assert!(b.is_laurent());
                assert_eq!(b, f);
                assert_eq!(b, ring.q_binom(n, n - i).unwrap());
                assert_eq!(subst_q_inverse(&b), b);
            }
        }
    }

    #[test]
    fn q_int_pascal_identity() {
        let ring = QRing::symbolic();
        for m in -8..=8 {
            for n in -8..=8 {
                let rhs = ring.pow(n) * ring.q_int(m) + &(ring.pow(-m) * ring.q_int(n));
                assert_eq!(ring.q_int(m + n), rhs);
            }
        }
    }

    #[test]
    fn q_int_is_symmetric() {
        for n in -10..=10 {
            assert_eq!(subst_q_inverse(&q_int(n)), q_int(n));
        }
        assert_eq!(subst_q_inverse(&RatFunc::one()), RatFunc::one());
        let p = parse_ratfunc("q^3 - q^-1").unwrap();
        assert_eq!(subst_q_inverse(&p), parse_ratfunc("q^-3 - q").unwrap());
        assert_eq!(subst_q_inverse(&p).to_string(), "-q + q^-3");
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_at(&q_int(2), &r(2, 1)).unwrap(), r(5, 2));
        assert_eq!(eval_at(&RatFunc::q_pow(3), &r(2, 1)).unwrap(), r(8, 1));
        assert_eq!(eval_at(&q_binom(2, 1).unwrap(), &r(3, 1)).unwrap(), r(10, 3));
        assert!(matches!(eval_at(&q_int(2), &r(1, 1)), Err(ScalarError::InvalidParameter(_))));
        assert!(matches!(eval_at(&q_int(2), &r(0, 1)), Err(ScalarError::InvalidParameter(_))));
        let pole = parse_ratfunc("1/(q - 2)").unwrap();
        assert!(matches!(eval_at(&pole, &r(2, 1)), Err(ScalarError::Evaluation(_))));
    }

    #[test]
    fn numeric_backend_matches_symbolic() {
        let q0 = r(5, 2);
        let num = QRing::numeric(q0.clone()).unwrap();
        for n in 0..=6 {
            for i in 0..=n {
                let s = q_binom(n, i).unwrap();
                assert_eq!(eval_at(&s, &q0).unwrap(), num.q_binom(n, i).unwrap());
            }
        }
        assert!(QRing::numeric(r(-1, 1)).is_err());
    }

    #[test]
    fn term_bound_is_enforced() {
        let res = with_term_bound(5, || guarded(|| q_int(10)));
        assert_eq!(res, Err(ScalarError::ResourceExhausted { terms: 6, bound: 5 }));
        assert_eq!(with_term_bound(5, || guarded(|| q_int(5))).unwrap(), q_int(5));
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        let poly = prop::collection::vec((-3i64..=3, -4i64..=4), 1..4)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigRational::from_integer(c.into())))));
        (poly.clone(), poly).prop_filter_map("nonzero denominator", |(n, d)| {
            if d.is_zero() {
                None
            } else {
                Some(RatFunc::new(n, d))
            }
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_multiplicative(s in small_ratfunc(), t in small_ratfunc()) {
            for q0 in [r(2, 1), r(3, 1), r(5, 2)] {
                if let (Ok(a), Ok(b)) = (eval_at(&s, &q0), eval_at(&t, &q0)) {
                    prop_assert_eq!(eval_at(&(&s * &t), &q0).unwrap(), a.clone() * &b);
                    prop_assert_eq!(eval_at(&(&s + &t), &q0).unwrap(), a + b);
                }
            }
        }

        #[test]
        fn inversion_distributes(s in small_ratfunc(), t in small_ratfunc()) {
            let inv = |x: &RatFunc| subst_q_inverse(x);
            prop_assert_eq!(inv(&(&s + &t)), inv(&s) + inv(&t));
            prop_assert_eq!(inv(&(&s * &t)), inv(&s) * inv(&t));
            if !t.is_zero() {
                prop_assert_eq!(inv(&(&s / &t)), inv(&s) / inv(&t));
            }
            prop_assert_eq!(inv(&inv(&s)), s);
        }

        #[test]
        fn field_axioms(s in small_ratfunc(), t in small_ratfunc(), u in small_ratfunc()) {
            prop_assert_eq!(&s * &t, &t * &s);
            prop_assert_eq!(&(&s * &t) * &u, &s * &(&t * &u));
            prop_assert_eq!(&s * &(&t + &u), &(&s * &t) + &(&s * &u));
            if !s.is_zero() {
                prop_assert_eq!(&(&t / &s) * &s, t.clone());
            }
            prop_assert_eq!(parse_ratfunc(&s.to_string()).unwrap(), s);
        }
    }
}
