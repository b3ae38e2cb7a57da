use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{RatFunc, ScalarError};

/// Parses the scalar text grammar into a rational function.
///
/// Accepts sums and differences of products and quotients of rational
/// constants, `q`, powers `^e` with integer `e`, and parenthesized groups.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc, ScalarError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0, input };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Tok>, ScalarError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {}
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            'q' => out.push(Tok::Q),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(s.parse().expect("digits")));
            }
            other => {
                return Err(ScalarError::Parse { input: input.to_string(), reason: format!("unexpected character '{other}'") })
            }
        }
        i += 1;
    }
    if out.is_empty() {
        return Err(ScalarError::Parse { input: input.to_string(), reason: "empty scalar".into() });
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> ScalarError {
        ScalarError::Parse { input: self.input.to_string(), reason: reason.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = if self.eat(&Tok::Minus) {
            -self.term()?
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc + self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc * self.power()?;
            } else if self.eat(&Tok::Slash) {
                let rhs = self.power()?;
                if rhs.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                acc = acc / rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc, ScalarError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let e = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return Err(self.error("expected an integer exponent")),
        };
        self.pos += 1;
        let e: i64 = i64::try_from(&e).map_err(|_| self.error("exponent out of range"))?;
        let e = if negative { -e } else { e };
        if base == RatFunc::q() {
            return Ok(RatFunc::q_pow(e));
        }
        if base.is_zero() && e <= 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let mut out = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            out = out * &base;
        }
        Ok(if e < 0 { RatFunc::one() / out } else { out })
    }

    fn atom(&mut self) -> Result<RatFunc, ScalarError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RatFunc::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("missing ')'"));
                }
                Ok(v)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            _ => Err(self.error("expected a number, q, or '('")),
        }
    }
}
