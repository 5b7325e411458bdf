//! Text syntax for elements of every domain.
//!
//! | domain | examples |
//! |--------|----------|
//! | `r0`, `r` | `X^(3/2)*Y*T[5]^(1/3)*U^2 + 1`, `0` |
//! | `z` | `-42` |
//! | `z5` | `3+2i5`, `-1i5` |
//! | `dk` | `(1+1r2)*x^2 - 1/2r2*x + 3` |
//!
//! In monomials `U` is the bulk `T_1 T_2 T_3 ...` and `T[i]^e` shifts the
//! exponent of `T_i` by `e` relative to the bulk, so `e` may be negative.
//! Printing is canonical and [`parse_expr`] inverts it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::AlgElem;
use crate::classic::{KPoly, QuadInt, QuadRat};
use crate::dk::DkElem;
use crate::domain::{DomainElem, DomainId};
use crate::exponents::ExpVec;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at byte {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("at byte {position}: {reason}")]
    Invalid { position: usize, reason: String },
    #[error("{0} is not an element of R")]
    NotInR(String),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn error(&mut self, expected: &[&str]) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        ParseError::Syntax {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn invalid(&self, at: usize, reason: impl Into<String>) -> ParseError {
        ParseError::Invalid {
            position: at,
            reason: reason.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("{c:?}")]))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            return Err(self.error(&["end of input"]));
        }
        Ok(())
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits: &str = {
            let rest = self.rest();
            let n = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            &rest[..n]
        };
        if digits.is_empty() {
            return Err(self.error(&["digit"]));
        }
        self.pos += digits.len();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn at_digit(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    /// `n` or `n/d`, unsigned.
    fn urational(&mut self) -> Result<Rational, ParseError> {
        let n = self.uint()?;
        if self.eat('/') {
            let at = self.pos;
            let d = self.uint()?;
            if d.is_zero() {
                return Err(self.invalid(at, "zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('-') {
            Some(true)
        } else if self.eat('+') {
            Some(false)
        } else {
            None
        }
    }

    /// `^k` or `^(q)` with `q` a signed rational; absent means 1.
    fn exponent(&mut self) -> Result<Rational, ParseError> {
        if !self.eat('^') {
            return Ok(Rational::from_integer(1.into()));
        }
        if self.eat('(') {
            let negative = self.sign() == Some(true);
            let q = self.urational()?;
            self.expect(')')?;
            return Ok(if negative { -q } else { q });
        }
        if self.at_digit() {
            return self.uint().map(Rational::from_integer);
        }
        Err(self.error(&["digit", "'('"]))
    }

    fn monomial(&mut self) -> Result<ExpVec, ParseError> {
        let start = self.pos;
        if self.at_digit() {
            let one = self.uint()?;
            if one != BigInt::from(1) {
                return Err(self.invalid(start, "the only numeric monomial is 1"));
            }
            return Ok(ExpVec::zero());
        }
        let zero = Rational::zero;
        let (mut x, mut y, mut z, mut u) = (zero(), zero(), zero(), zero());
        let mut devs: BTreeMap<u32, Rational> = BTreeMap::new();
        loop {
            match self.peek() {
                Some('X') => {
                    self.pos += 1;
                    x += self.exponent()?;
                }
                Some('Y') => {
                    self.pos += 1;
                    y += self.exponent()?;
                }
                Some('Z') => {
                    self.pos += 1;
                    z += self.exponent()?;
                }
                Some('U') => {
                    self.pos += 1;
                    u += self.exponent()?;
                }
                Some('T') => {
                    self.pos += 1;
                    self.expect('[')?;
                    let at = self.pos;
                    let i: u32 = self
                        .uint()?
                        .try_into()
                        .map_err(|_| self.invalid(at, "T index too large"))?;
                    self.expect(']')?;
                    *devs.entry(i).or_insert_with(zero) += self.exponent()?;
                }
                _ => return Err(self.error(&["'X'", "'Y'", "'Z'", "'U'", "'T'", "'1'"])),
            }
            if !self.eat('*') {
                break;
            }
        }
        ExpVec::new(x, y, z, u, devs).map_err(|e| self.invalid(start, e.to_string()))
    }

    fn alg_elem(&mut self) -> Result<AlgElem, ParseError> {
        if self.eat('0') {
            return Ok(AlgElem::zero());
        }
        let mut monos = vec![self.monomial()?];
        while self.eat('+') {
            monos.push(self.monomial()?);
        }
        Ok(AlgElem::from_monomials(monos))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let negative = self.sign() == Some(true);
        let n = self.uint()?;
        Ok(if negative { -n } else { n })
    }

    /// Signed terms `k` and `ki5`.
    fn quad_int(&mut self) -> Result<QuadInt, ParseError> {
        let mut acc = QuadInt::zero();
        let mut first = true;
        loop {
            let sign = self.sign();
            if sign.is_none() && !first {
                break;
            }
            first = false;
            let n = if self.eat_str("i5") {
                QuadInt::new(0, 1)
            } else {
                let k = self.uint()?;
                if self.eat_str("i5") {
                    QuadInt::new(0, k)
                } else {
                    QuadInt::from_int(k)
                }
            };
            acc = if sign == Some(true) { &acc - &n } else { &acc + &n };
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    /// Unsigned `q`, `qr2` or `r2`.
    fn quadrat_term(&mut self) -> Result<QuadRat, ParseError> {
        if self.eat_str("r2") {
            return Ok(QuadRat::sqrt2());
        }
        let q = self.urational()?;
        if self.eat_str("r2") {
            Ok(QuadRat::new(Rational::zero(), q))
        } else {
            Ok(QuadRat::from_rational(q))
        }
    }

    /// Signed sum of `quadrat_term`s, stopping before anything else.
    fn quadrat(&mut self) -> Result<QuadRat, ParseError> {
        let mut acc = QuadRat::zero();
        let mut first = true;
        loop {
            let save = self.pos;
            let sign = self.sign();
            if sign.is_none() && !first {
                break;
            }
            if !first && !(self.at_digit() || self.rest().starts_with("r2")) {
                self.pos = save;
                break;
            }
            first = false;
            let t = self.quadrat_term()?;
            acc = if sign == Some(true) { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn x_power(&mut self) -> Result<usize, ParseError> {
        if !self.eat('x') {
            return Err(self.error(&["'x'"]));
        }
        if self.eat('^') {
            let at = self.pos;
            return self
                .uint()?
                .try_into()
                .map_err(|_| self.invalid(at, "degree too large"));
        }
        Ok(1)
    }

    /// Signed terms `c`, `c*x^k`, `x^k` with `c` either `(quadrat)` or an
    /// unsigned `quadrat_term`.
    fn kpoly(&mut self) -> Result<KPoly, ParseError> {
        let mut acc = KPoly::zero();
        let mut first = true;
        loop {
            let sign = self.sign();
            if sign.is_none() && !first {
                break;
            }
            first = false;
            let (c, k) = if self.peek() == Some('x') {
                (QuadRat::one(), self.x_power()?)
            } else {
                let c = if self.eat('(') {
                    let c = self.quadrat()?;
                    self.expect(')')?;
                    c
                } else {
                    self.quadrat_term()?
                };
                let k = if self.eat('*') { self.x_power()? } else { 0 };
                (c, k)
            };
            let c = if sign == Some(true) { -&c } else { c };
            acc = &acc + &KPoly::term(c, k);
        }
        Ok(acc)
    }
}

fn parse_with<'a, T>(
    text: &'a str,
    f: impl FnOnce(&mut Parser<'a>) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser::new(text);
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_expvec(text: &str) -> Result<ExpVec, ParseError> {
    parse_with(text, Parser::monomial)
}

pub fn parse_alg(text: &str) -> Result<AlgElem, ParseError> {
    parse_with(text, Parser::alg_elem)
}

pub fn parse_quad_int(text: &str) -> Result<QuadInt, ParseError> {
    parse_with(text, Parser::quad_int)
}

pub fn parse_quadrat(text: &str) -> Result<QuadRat, ParseError> {
    parse_with(text, Parser::quadrat)
}

pub fn parse_kpoly(text: &str) -> Result<KPoly, ParseError> {
    parse_with(text, Parser::kpoly)
}

pub fn parse_expr(text: &str, domain: DomainId) -> Result<DomainElem, ParseError> {
    Ok(match domain {
        DomainId::R0 => DomainElem::R0(parse_alg(text)?),
        DomainId::R => {
            let f = parse_alg(text)?;
            if !f.in_r() {
                return Err(ParseError::NotInR(f.to_string()));
            }
            DomainElem::R(f)
        }
        DomainId::Z => DomainElem::Z(parse_with(text, Parser::integer)?),
        DomainId::Z5 => DomainElem::Z5(parse_quad_int(text)?),
        DomainId::Dk => {
            let f = parse_kpoly(text)?;
            DomainElem::Dk(DkElem::new(f).map_err(|e| ParseError::Invalid {
                position: 0,
                reason: e.to_string(),
            })?)
        }
    })
}

pub fn print_expr(e: &DomainElem) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::named::b;
    use crate::rational::{int, rat};

    #[test]
    fn monomials() {
        let m = parse_expvec("X^(3/2)*Y*T[5]^(1/3)*U^2").unwrap();
        assert_eq!(m.x(), &rat(3, 2));
        assert_eq!(m.t_exp(5), rat(7, 3));
        assert_eq!(m.t_exp(1), int(2));
        assert_eq!(parse_expvec("1").unwrap(), ExpVec::zero());
        assert_eq!(parse_expvec(" X * U * T[3]^(-1) ").unwrap(), b(3));
        assert_eq!(parse_expvec("X*X").unwrap(), ExpVec::x_pow(int(2)));
    }

    #[test]
    fn monomial_errors() {
        assert!(matches!(parse_expvec("T[1]^(-1)"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_expvec("T[0]"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_expvec("X^(1/0)"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_expvec("2"), Err(ParseError::Invalid { .. })));
        match parse_expvec("X*W") {
            Err(ParseError::Syntax { position, expected, .. }) => {
                assert_eq!(position, 2);
                assert!(expected.contains(&"'T'".to_string()));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expvec("X^"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_expvec("X Y"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn membership_in_r_checked() {
        let e = parse_expr("X^(1/2)*U*T[3]^(-1)", DomainId::R).unwrap();
        assert!(matches!(e, DomainElem::R(_)));
        assert!(matches!(parse_expr("T[1]", DomainId::R), Err(ParseError::NotInR(_))));
        assert!(matches!(parse_expr("T[1]", DomainId::R0), Ok(DomainElem::R0(_))));
        assert!(matches!(parse_expr("X*T[1] + T[2]", DomainId::R), Err(ParseError::NotInR(_))));
    }

    #[test]
    fn quadratic_literals() {
        assert_eq!(parse_quad_int("2+1i5").unwrap(), QuadInt::new(2, 1));
        assert_eq!(parse_quad_int("-2i5").unwrap(), QuadInt::new(0, -2));
        assert_eq!(parse_quad_int("1 - 1i5").unwrap(), QuadInt::new(1, -1));
        assert_eq!(parse_quadrat("1/2+3r2").unwrap(), QuadRat::new(rat(1, 2), int(3)));
        assert_eq!(parse_quadrat("-1r2").unwrap(), QuadRat::new(int(0), int(-1)));
        assert!(parse_quadrat("1/2+").is_err());
    }

    #[test]
    fn polynomials() {
        let f = parse_kpoly("(1+1r2)*x^2 + 1").unwrap();
        assert_eq!(f.coeff(2), QuadRat::new(int(1), int(1)));
        assert_eq!(f.coeff(1), QuadRat::zero());
        assert_eq!(f.coeff(0), QuadRat::one());
        assert_eq!(f.to_string(), "(1+1r2)*x^2 + 1");
        let g = parse_kpoly("-x + 1/2r2").unwrap();
        assert_eq!(g.to_string(), "-x + 1/2r2");
        assert!(matches!(parse_expr("x + 1r2", DomainId::Dk), Err(ParseError::Invalid { .. })));
        assert!(parse_expr("x + 1/2", DomainId::Dk).is_err());
        assert!(parse_expr("1r2*x - 3", DomainId::Dk).is_ok());
    }

    #[test]
    fn round_trips() {
        for (text, d) in [
            ("X^(1/2)*Y*U^2*T[3]^(-1) + Z", DomainId::R),
            ("T[1] + 1", DomainId::R0),
            ("0", DomainId::R0),
            ("-17", DomainId::Z),
            ("3-2i5", DomainId::Z5),
            ("-1i5", DomainId::Z5),
            ("(1-1/2r2)*x^3 - 1r2*x + 4", DomainId::Dk),
            ("(-1+1r2)*x^2 - x", DomainId::Dk),
            ("0", DomainId::Dk),
        ] {
            let e = parse_expr(text, d).unwrap();
            let printed = print_expr(&e);
            assert_eq!(parse_expr(&printed, d).unwrap(), e, "{text}");
            assert_eq!(printed, print_expr(&parse_expr(&printed, d).unwrap()));
        }
    }
}
