use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::forward_binop;
use crate::rational::{rational_sqrt, Rational};

/// `p + q sqrt 2`, an element of the real quadratic field `Q(sqrt 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadRat {
    pub p: Rational,
    pub q: Rational,
}

impl QuadRat {
    pub fn new(p: Rational, q: Rational) -> Self {
        QuadRat { p, q }
    }

    pub fn from_rational(p: Rational) -> Self {
        Self::new(p, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `sqrt 2` itself.
    pub fn sqrt2() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.q.is_zero() && self.p.is_integer()).then(|| self.p.to_integer())
    }

    pub fn conj(&self) -> QuadRat {
        QuadRat::new(self.p.clone(), -&self.q)
    }

    /// `p^2 - 2 q^2`.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - Rational::from_integer(2.into()) * &self.q * &self.q
    }

    pub fn inverse(&self) -> Option<QuadRat> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QuadRat::new(&c.p / &n, &c.q / &n))
    }

    /// Square root inside `Q(sqrt 2)`, if there is one.
    pub fn sqrt(&self) -> Option<QuadRat> {
        let two = Rational::from_integer(2.into());
        let candidate = if self.q.is_zero() {
            if let Some(r) = rational_sqrt(&self.p) {
                QuadRat::from_rational(r)
            } else {
                // (c sqrt 2)^2 = 2 c^2
                QuadRat::new(Rational::zero(), rational_sqrt(&(&self.p / &two))?)
            }
        } else {
            // (s + t sqrt 2)^2 = (s^2 + 2t^2) + 2st sqrt 2; the norm of the
            // root squared is the norm of self.
            let k = rational_sqrt(&self.norm())?;
            let s = [(&self.p + &k) / &two, (&self.p - &k) / &two]
                .iter()
                .filter(|s2| s2.is_positive())
                .find_map(rational_sqrt)?;
            let t = &self.q / (&two * &s);
            QuadRat::new(s, t)
        };
        (&candidate * &candidate == *self).then_some(candidate)
    }

    /// An upper bound on `|p + q sqrt 2|` in both real embeddings.
    pub fn abs_bound(&self) -> Rational {
        self.p.abs() + self.q.abs() * Rational::new(3.into(), 2.into())
    }
}

impl Add for &QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        let two = Rational::from_integer(2.into());
        QuadRat::new(
            &self.p * &rhs.p + two * &self.q * &rhs.q,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

/// Panics on division by zero, like the integer operators.
impl Div for &QuadRat {
    type Output = QuadRat;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadRat) -> QuadRat {
        self * &rhs.inverse().expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-&self.p, -&self.q)
    }
}

forward_binop!(QuadRat, Add, add);
forward_binop!(QuadRat, Sub, sub);
forward_binop!(QuadRat, Mul, mul);
forward_binop!(QuadRat, Div, div);

/// `1/2+3r2`, `-r2` is written `-1r2`.
impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "{}r2", self.q),
            (false, false) => {
                let sign = if self.q.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}r2", self.p, sign, self.q.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn k(p: (i64, i64), q: (i64, i64)) -> QuadRat {
        QuadRat::new(rat(p.0, p.1), rat(q.0, q.1))
    }

    #[test]
    fn field_operations() {
        let a = k((1, 2), (3, 1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, QuadRat::one());
        assert_eq!(QuadRat::zero().inverse(), None);
        let s = QuadRat::sqrt2();
        assert_eq!(&s * &s, QuadRat::from_int(2));
        assert_eq!(&s / &QuadRat::from_int(2), k((0, 1), (1, 2)));
        assert_eq!((&a * &a.conj()).q, Rational::zero());
    }

    #[test]
    fn square_roots() {
        assert_eq!(QuadRat::from_int(2).sqrt(), Some(QuadRat::sqrt2()));
        assert_eq!(k((9, 4), (0, 1)).sqrt(), Some(k((3, 2), (0, 1))));
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let r = k((3, 1), (2, 1)).sqrt().unwrap();
        assert_eq!(&r * &r, k((3, 1), (2, 1)));
        assert_eq!(QuadRat::from_int(3).sqrt(), None);
        assert_eq!(QuadRat::from_int(-2).sqrt(), None);
        assert_eq!(QuadRat::sqrt2().sqrt(), None);
    }

    #[test]
    fn display() {
        assert_eq!(k((1, 2), (3, 1)).to_string(), "1/2+3r2");
        assert_eq!(k((0, 1), (-1, 1)).to_string(), "-1r2");
        assert_eq!(k((-5, 3), (0, 1)).to_string(), "-5/3");
        assert_eq!(k((1, 1), (-1, 2)).to_string(), "1-1/2r2");
    }
}
