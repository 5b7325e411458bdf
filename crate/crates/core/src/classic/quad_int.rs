use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::forward_binop;

/// `a + b sqrt(-5)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        Self::new(a, 0)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The only units are `+1` and `-1`.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + BigInt::from(5) * &self.b * &self.b
    }

    pub fn conj(&self) -> QuadInt {
        QuadInt::new(self.a.clone(), -&self.b)
    }

    /// `self / d` when the quotient is integral.
    pub fn div_exact(&self, d: &QuadInt) -> Option<QuadInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let t = self * &d.conj();
        let (qa, ra) = t.a.div_rem(&n);
        let (qb, rb) = t.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then(|| QuadInt::new(qa, qb))
    }

    pub fn divides(&self, other: &QuadInt) -> bool {
        other.div_exact(self).is_some()
    }

    /// Representative of `{self, -self}`: positive real part, or zero real
    /// part and positive `sqrt(-5)` part.
    pub fn normalized(&self) -> QuadInt {
        if self.a.is_negative() || (self.a.is_zero() && self.b.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }

    /// All divisors up to sign, found by scanning elements whose norm
    /// divides `norm(self)`.
    pub fn divisors(&self) -> Vec<QuadInt> {
        assert!(!self.is_zero(), "divisors of zero");
        let n = self.norm();
        let five = BigInt::from(5);
        let mut out = Vec::new();
        let mut y = BigInt::zero();
        while &five * &y * &y <= n {
            let rest = &n - &five * &y * &y;
            let x_max = rest.sqrt();
            let mut x = BigInt::zero();
            while x <= x_max {
                let m = &x * &x + &five * &y * &y;
                if !m.is_zero() && n.is_multiple_of(&m) {
                    let mut cands = vec![QuadInt::new(x.clone(), y.clone())];
                    if x.is_positive() && y.is_positive() {
                        cands.push(QuadInt::new(x.clone(), -&y));
                    }
                    out.extend(cands.into_iter().filter(|c| c.divides(self)));
                }
                x += 1;
            }
            y += 1;
        }
        out.sort_by(|p, q| {
            p.norm()
                .cmp(&q.norm())
                .then_with(|| p.a.cmp(&q.a))
                .then_with(|| q.b.cmp(&p.b))
        });
        out
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(
            &self.a * &rhs.a - BigInt::from(5) * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-&self.a, -&self.b)
    }
}

forward_binop!(QuadInt, Add, add);
forward_binop!(QuadInt, Sub, sub);
forward_binop!(QuadInt, Mul, mul);

/// `3+2i5`, `1-1i5`, `-2i5`, `7`.
impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}i5", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i5", self.a, sign, self.b.abs())
            }
        }
    }
}
