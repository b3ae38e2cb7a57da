use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;

/// A rational function in `q` over the rationals, kept in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term,
/// primitive over the integers with positive leading coefficient, and coprime
/// to the numerator. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(BigRational::one(), e))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// `num / den` reduced to canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::from_poly(LaurentPoly::zero());
        }
        let k = den.low_exp();
        let (num, den) = (num.shift(-k), den.shift(-k));
        if let Some(c) = den.as_constant() {
            return Self::from_poly(num.scale(&c.recip()));
        }
        let g = poly_gcd(&num.shift(-num.low_exp()), &den);
        let (num, den) = if g.high_exp() > 0 {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        } else {
            (num, den)
        };
        let (den_int, scale) = den.primitive_integer_part();
        let den = LaurentPoly::from_parts(0, den_int.into_iter().map(BigRational::from_integer).collect());
        RatFunc { num: num.scale(&scale), den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_laurent() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        if let Some((c, e)) = self.num.as_monomial() {
            return Some(RatFunc::new(self.den.scale(&c.recip()).shift(-e), LaurentPoly::one()));
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    /// Replaces `q` by `q^-1`.
    pub fn subst_q_inverse(&self) -> Self {
        if self.is_laurent() {
            return Self::from_poly(self.num.subst_q_inverse());
        }
        RatFunc::new(self.num.subst_q_inverse(), self.den.subst_q_inverse())
    }

    /// Value at `q = q0`, or `None` if the denominator vanishes there.
    pub fn eval(&self, q0: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q0) / d)
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rnum = if negate { -rhs.num.clone() } else { rhs.num.clone() };
        if self.den == rhs.den {
            let num = &self.num + &rnum;
            if self.is_laurent() {
                return Self::from_poly(num);
            }
            return RatFunc::new(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rnum * &self.den);
        RatFunc::new(num, &self.den * &rhs.den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_laurent() && rhs.is_laurent() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    fn div_impl(&self, rhs: &Self) -> Self {
        let inv = rhs.recip().expect("division by zero rational function");
        self.mul_impl(&inv)
    }
}

/// Primitive integer gcd of two polynomials, returned with positive leading coefficient.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut a, _) = a.primitive_integer_part();
    let (mut b, _) = b.primitive_integer_part();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(r);
    }
    let a = primitive(a);
    LaurentPoly::from_parts(0, a.into_iter().map(BigRational::from_integer).collect())
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = trim(v);
    let mut g = BigInt::zero();
    for c in &v {
        g = num_integer::Integer::gcd(&g, c);
    }
    if g.is_zero() {
        return v;
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    let m = b.len();
    while r.len() >= m {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - m;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                $body(self, rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                $body(&self, rhs)
            }
        }
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_impl(b));
forward_binop!(Div, div, |a: &RatFunc, b: &RatFunc| a.div_impl(b));

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}
