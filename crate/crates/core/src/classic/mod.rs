//! Control domains with classical arithmetic: `Z[sqrt(-5)]`, the field
//! `Q(sqrt 2)` and polynomials over it.

mod kpoly;
mod quad_int;
mod quad_rat;

pub use kpoly::{FactorError, KPoly};
pub use quad_int::QuadInt;
pub use quad_rat::QuadRat;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Forwards the owned forms of a binary operator to the borrowed one.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

/// Smallest prime factor of `|n|`, for `|n| >= 2`.
pub fn smallest_prime_factor(n: &BigInt) -> Option<BigInt> {
    let n = n.abs();
    if n < BigInt::from(2) {
        return None;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            return Some(p);
        }
        p += BigInt::one();
    }
    Some(n)
}

/// All positive divisors of `n != 0`, ascending, by trial division.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += BigInt::one();
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_helpers() {
        let ds: Vec<i64> = positive_divisors(&BigInt::from(-36))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(smallest_prime_factor(&BigInt::from(91)), Some(BigInt::from(7)));
        assert_eq!(smallest_prime_factor(&BigInt::from(-13)), Some(BigInt::from(13)));
        assert_eq!(smallest_prime_factor(&BigInt::from(1)), None);
    }
}
