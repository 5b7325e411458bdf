//! Arithmetic in the monoid algebra `R0 = F2[P]` and its subring `R`.
//!
//! Coefficients live in `F2`, so an element is just a finite set of
//! monomials and addition is symmetric difference.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::exponents::ExpVec;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not divisible")]
    NotDivisible,
    #[error("internal fault: {0}")]
    Fault(String),
    #[error("{0} is not an element of R")]
    NotInR(String),
    #[error("element is zero or a unit")]
    IsUnitOrZero,
    #[error("empty monomial list")]
    Empty,
    #[error("claim violated: f = {f}, g = {g}, fg = {fg} lies in R but neither factor does")]
    ClaimViolation { f: String, g: String, fg: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElem {
    monos: BTreeSet<ExpVec>,
}

impl AlgElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExpVec::zero())
    }

    pub fn monomial(e: ExpVec) -> Self {
        AlgElem {
            monos: BTreeSet::from([e]),
        }
    }

    /// Sums the given monomials over `F2`; repeated monomials cancel in pairs.
    pub fn from_monomials(monos: impl IntoIterator<Item = ExpVec>) -> Self {
        let mut out = AlgElem::zero();
        for m in monos {
            out.toggle(m);
        }
        out
    }

    fn toggle(&mut self, m: ExpVec) {
        if !self.monos.remove(&m) {
            self.monos.insert(m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.monos.is_empty()
    }

    /// Units of `F2[P]` are only `1`: `P` is reduced and `F2^x` is trivial.
    pub fn is_one(&self) -> bool {
        self.monos.len() == 1 && self.monos.first().is_some_and(ExpVec::is_zero)
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    /// Monomials in increasing order.
    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &ExpVec> + '_ {
        self.monos.iter()
    }

    pub fn as_monomial(&self) -> Option<&ExpVec> {
        if self.monos.len() == 1 {
            self.monos.first()
        } else {
            None
        }
    }

    pub fn lead(&self) -> Option<&ExpVec> {
        self.monos.last()
    }

    pub fn mul_monomial(&self, m: &ExpVec) -> AlgElem {
        // translation preserves the order, so no collisions can occur
        AlgElem {
            monos: self.monos.iter().map(|e| e + m).collect(),
        }
    }

    pub fn square(&self) -> AlgElem {
        AlgElem {
            monos: self.monos.iter().map(|e| e.mul_scalar(2)).collect(),
        }
    }

    /// Frobenius inverse: halves every exponent. In characteristic two
    /// `sqrt(f)^2 = f` for every `f`.
    pub fn sqrt(&self) -> AlgElem {
        AlgElem {
            monos: self.monos.iter().map(|e| e.div_scalar(2)).collect(),
        }
    }

    /// True iff every monomial lies in `Q_R`.
    pub fn in_r(&self) -> bool {
        self.monos.iter().all(ExpVec::in_qr)
    }

    /// Splits `f = f1 + f2` with `f1` in the ideal generated by positive
    /// powers of `X`, `Y`, `Z` and `f2` a polynomial in pure `T`-monomials.
    pub fn split(&self) -> RSplit {
        let (i_part, t_part): (BTreeSet<_>, BTreeSet<_>) =
            self.monos.iter().cloned().partition(ExpVec::has_xyz);
        RSplit {
            i_part: AlgElem { monos: i_part },
            t_part: AlgElem { monos: t_part },
        }
    }

    /// Exact division `self / f` in `R0`.
    ///
    /// Leading-term cancellation under the fixed monomial order. Every
    /// remainder monomial is a monomial of `self` or of `f` shifted by an
    /// element of `P`, so after clearing denominators all of them sit in a
    /// translate of the nonnegative integer cone in the coordinates
    /// `(x, y, z, u, t_i)`, where the lexicographic order is a well-order.
    pub fn exact_div(&self, f: &AlgElem) -> Result<AlgElem, AlgebraError> {
        let lf = f.lead().ok_or(AlgebraError::NotDivisible)?;
        let mut rem = self.clone();
        let mut quot = AlgElem::zero();
        while let Some(lr) = rem.lead() {
            let m = lr.checked_sub(lf).ok_or(AlgebraError::NotDivisible)?;
            rem = &rem + &f.mul_monomial(&m);
            quot.toggle(m);
        }
        if &(f * &quot) != self {
            return Err(AlgebraError::Fault(format!(
                "quotient {quot} of {self} by {f} fails the multiply-back check"
            )));
        }
        Ok(quot)
    }

    pub fn divides(&self, g: &AlgElem) -> bool {
        g.exact_div(self).is_ok()
    }

    /// Componentwise minimum over all monomials (`None` for zero).
    pub fn monomial_min(&self) -> Option<ExpVec> {
        let mut it = self.monos.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.componentwise_min(m)))
    }
}

impl Add for &AlgElem {
    type Output = AlgElem;

    fn add(self, rhs: &AlgElem) -> AlgElem {
        AlgElem {
            monos: self
                .monos
                .symmetric_difference(&rhs.monos)
                .cloned()
                .collect(),
        }
    }
}

impl Add for AlgElem {
    type Output = AlgElem;

    fn add(self, rhs: AlgElem) -> AlgElem {
        &self + &rhs
    }
}

impl Mul for &AlgElem {
    type Output = AlgElem;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for a in &self.monos {
            for b in &rhs.monos {
                out.toggle(a + b);
            }
        }
        out
    }
}

impl Mul for AlgElem {
    type Output = AlgElem;

    fn mul(self, rhs: AlgElem) -> AlgElem {
        &self * &rhs
    }
}

/// Prints the monomials from the largest down, joined by ` + `.
impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monos.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monos.iter().rev().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSplit {
    pub i_part: AlgElem,
    pub t_part: AlgElem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClaimVerdict {
    /// `fg` is not in `R`; nothing to check.
    NotApplicable,
    Holds { f_in_r: bool, g_in_r: bool },
}

/// If `fg` lies in `R` then `f` or `g` does.
pub fn claim_check(f: &AlgElem, g: &AlgElem) -> Result<ClaimVerdict, AlgebraError> {
    let fg = f * g;
    if !fg.in_r() {
        return Ok(ClaimVerdict::NotApplicable);
    }
    let (f_in_r, g_in_r) = (f.in_r(), g.in_r());
    if !(f_in_r || g_in_r) {
        return Err(AlgebraError::ClaimViolation {
            f: f.to_string(),
            g: g.to_string(),
            fg: fg.to_string(),
        });
    }
    Ok(ClaimVerdict::Holds { f_in_r, g_in_r })
}

/// Writes a nonzero nonunit of `R` as a product of two nonunits of `R`.
pub fn antimatter_factor(f: &AlgElem) -> Result<(AlgElem, AlgElem), AlgebraError> {
    if !f.in_r() {
        return Err(AlgebraError::NotInR(f.to_string()));
    }
    if f.is_zero() || f.is_one() {
        return Err(AlgebraError::IsUnitOrZero);
    }
    let h = f.sqrt();
    Ok((h.clone(), h))
}

/// Whether a nonempty family of monomials of `R` has only trivial common
/// divisors in `R`.
///
/// Divisors of monomials are monomials, and a common divisor lies below the
/// componentwise minimum. Such a divisor in `Q_R` other than `1` needs a
/// positive `X`, `Y` or `Z` exponent, so the content is trivial exactly
/// when the minimum has none.
pub fn monomial_common_divisor_trivial(ms: &[ExpVec]) -> Result<bool, AlgebraError> {
    let (first, rest) = ms.split_first().ok_or(AlgebraError::Empty)?;
    if let Some(bad) = ms.iter().find(|m| !m.in_qr()) {
        return Err(AlgebraError::NotInR(bad.to_string()));
    }
    let min = rest
        .iter()
        .fold(first.clone(), |acc, m| acc.componentwise_min(m));
    Ok(!min.has_xyz())
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum McdVerdict {
    Maximal,
    /// A strictly larger common divisor, divisible by the candidate in `R`.
    NotMaximal { larger: ExpVec },
    NotCommonDivisor,
}

/// Decides whether the monomial `d` is a maximal common divisor of the
/// monomials `a` and `b` in `R`.
pub fn mcd_verify(d: &ExpVec, a: &ExpVec, b: &ExpVec) -> Result<McdVerdict, AlgebraError> {
    for v in [d, a, b] {
        if !v.in_qr() {
            return Err(AlgebraError::NotInR(v.to_string()));
        }
    }
    let (qa, qb) = match (a.checked_sub(d), b.checked_sub(d)) {
        (Some(qa), Some(qb)) if qa.in_qr() && qb.in_qr() => (qa, qb),
        _ => return Ok(McdVerdict::NotCommonDivisor),
    };
    let m = qa.componentwise_min(&qb);
    // Any h with d + h a common divisor and d | d + h satisfies h <= m and
    // h in Q_R; with no X, Y, Z left in m only h = 0 qualifies.
    let step = [
        (m.x(), ExpVec::x_pow as fn(Rational) -> ExpVec),
        (m.y(), ExpVec::y_pow),
        (m.z(), ExpVec::z_pow),
    ]
    .into_iter()
    .find(|(q, _)| q.is_positive())
    .map(|(q, mk)| mk(q / Rational::from_integer(2.into())));
    match step {
        None => Ok(McdVerdict::Maximal),
        Some(h) => Ok(McdVerdict::NotMaximal { larger: d + &h }),
    }
}

impl McdVerdict {
    pub fn is_maximal(&self) -> bool {
        matches!(self, McdVerdict::Maximal)
    }
}

/// Checks that `d` divides `a` in `R` (quotient monomial in `Q_R`).
pub fn monomial_divides_in_r(d: &ExpVec, a: &ExpVec) -> Option<ExpVec> {
    a.checked_sub(d).filter(ExpVec::in_qr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::named::*;
    use crate::rational::{int, rat};

    fn x() -> ExpVec {
        ExpVec::x_pow(int(1))
    }
    fn y() -> ExpVec {
        ExpVec::y_pow(int(1))
    }
    fn z() -> ExpVec {
        ExpVec::z_pow(int(1))
    }
    fn t1() -> ExpVec {
        ExpVec::t_pow(1, int(1))
    }
    fn el(ms: &[ExpVec]) -> AlgElem {
        AlgElem::from_monomials(ms.iter().cloned())
    }

    #[test]
    fn multiplication() {
        let xy = el(&[x(), y()]);
        let xz = el(&[x(), z()]);
        let prod = &xy * &xz;
        let expected = el(&[x().mul_scalar(2), &x() + &z(), &x() + &y(), &y() + &z()]);
        assert_eq!(prod, expected);
        assert_eq!(&xy * &xy, el(&[x().mul_scalar(2), y().mul_scalar(2)]));
        assert_eq!(
            AlgElem::monomial(b(1)) * AlgElem::monomial(y_t(1)),
            AlgElem::monomial(s_y())
        );
    }

    #[test]
    fn division() {
        let xy = el(&[x(), y()]);
        let xz = el(&[x(), z()]);
        let prod = &xy * &xz;
        assert_eq!(prod.exact_div(&xy), Ok(xz.clone()));
        assert_eq!(prod.exact_div(&prod), Ok(AlgElem::one()));
        assert_eq!(
            xy.exact_div(&AlgElem::monomial(x())),
            Err(AlgebraError::NotDivisible)
        );
        assert_eq!(xy.exact_div(&AlgElem::zero()), Err(AlgebraError::NotDivisible));
        assert_eq!(AlgElem::zero().exact_div(&xy), Ok(AlgElem::zero()));
    }

    #[test]
    fn membership_in_r() {
        assert!(AlgElem::one().in_r());
        assert!(!el(&[x(), t1()]).in_r());
        assert!(el(&[s_y(), s_z()]).in_r());
    }

    #[test]
    fn split_examples() {
        let s = el(&[x(), t1()]).split();
        assert_eq!(s.i_part, AlgElem::monomial(x()));
        assert_eq!(s.t_part, AlgElem::monomial(t1()));
        let s = AlgElem::monomial(s_y()).split();
        assert_eq!(s.i_part, AlgElem::monomial(s_y()));
        assert!(s.t_part.is_zero());
        let s = el(&[ExpVec::zero(), t1()]).split();
        assert!(s.i_part.is_zero());
        assert_eq!(s.t_part, el(&[ExpVec::zero(), t1()]));
    }

    #[test]
    fn claim_examples() {
        let f = AlgElem::monomial(t1());
        let g = AlgElem::monomial(&x() + &t1());
        assert_eq!(
            claim_check(&f, &g),
            Ok(ClaimVerdict::Holds {
                f_in_r: false,
                g_in_r: true
            })
        );
        assert_eq!(
            claim_check(&AlgElem::one(), &AlgElem::one()),
            Ok(ClaimVerdict::Holds {
                f_in_r: true,
                g_in_r: true
            })
        );
        let h = el(&[x(), t1()]);
        assert_eq!(claim_check(&h, &h), Ok(ClaimVerdict::NotApplicable));
    }

    #[test]
    fn square_roots() {
        let xy = el(&[x(), y()]);
        let r = xy.sqrt();
        assert_eq!(r, el(&[ExpVec::x_pow(rat(1, 2)), ExpVec::y_pow(rat(1, 2))]));
        assert_eq!(&r * &r, xy);
        assert_eq!(AlgElem::one().sqrt(), AlgElem::one());
        let r = AlgElem::monomial(s_y()).sqrt();
        assert_eq!(r, AlgElem::monomial(s_y().div_scalar(2)));
        assert_eq!(&r * &r, AlgElem::monomial(s_y()));
    }

    #[test]
    fn antimatter_examples() {
        let (a, b) = antimatter_factor(&AlgElem::monomial(x())).unwrap();
        assert_eq!(a, AlgElem::monomial(ExpVec::x_pow(rat(1, 2))));
        assert_eq!(a, b);
        assert_eq!(antimatter_factor(&AlgElem::one()), Err(AlgebraError::IsUnitOrZero));
        let f = el(&[s_y(), s_z()]);
        let (h, _) = antimatter_factor(&f).unwrap();
        let expected = AlgElem::monomial(&ExpVec::x_pow(rat(1, 2)) + &ExpVec::bulk(rat(1, 2)))
            * el(&[ExpVec::y_pow(rat(1, 2)), ExpVec::z_pow(rat(1, 2))]);
        assert_eq!(h, expected);
        assert_eq!(&h * &h, f);
        assert!(matches!(
            antimatter_factor(&AlgElem::monomial(t1())),
            Err(AlgebraError::NotInR(_))
        ));
    }

    #[test]
    fn common_divisor_content() {
        assert_eq!(monomial_common_divisor_trivial(&[y_t(1), z_t(1)]), Ok(true));
        assert_eq!(monomial_common_divisor_trivial(&[s_y(), s_z()]), Ok(false));
        assert_eq!(monomial_common_divisor_trivial(&[x()]), Ok(false));
        assert_eq!(monomial_common_divisor_trivial(&[]), Err(AlgebraError::Empty));
    }

    #[test]
    fn mcd_examples() {
        assert_eq!(mcd_verify(&b(1), &s_y(), &s_z()), Ok(McdVerdict::Maximal));
        let half = ExpVec::x_pow(rat(1, 2));
        assert_eq!(
            mcd_verify(&half, &s_y(), &s_z()),
            Ok(McdVerdict::NotMaximal {
                larger: ExpVec::x_pow(rat(3, 4))
            })
        );
        let x34 = ExpVec::x_pow(rat(3, 4));
        assert!(monomial_divides_in_r(&x34, &s_y()).is_some());
        assert!(monomial_divides_in_r(&x34, &s_z()).is_some());
        assert_eq!(mcd_verify(&y(), &s_y(), &s_z()), Ok(McdVerdict::NotCommonDivisor));
    }

    #[test]
    fn only_unit_is_one() {
        // a unit u with u * v = 1 forces both to be monomials with
        // exponent vectors summing to zero, hence both zero
        let candidates = [el(&[x()]), el(&[ExpVec::zero(), x()]), AlgElem::one()];
        for c in &candidates {
            let inv = AlgElem::one().exact_div(c);
            assert_eq!(inv.is_ok(), c.is_one(), "{c}");
        }
    }
}
