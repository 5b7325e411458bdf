//! The domain `Z + x Q(sqrt 2)[x]`: polynomials over `Q(sqrt 2)` whose
//! constant term is an integer.
//!
//! `Z` is a UFD and `Q(sqrt 2)` properly extends its fraction field, so the
//! domain is a GL-domain in which `x` fails to be primal. The prime-like
//! witness search below follows the case split on the order and constant
//! term of the divisor.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::classic::{smallest_prime_factor, FactorError, KPoly, QuadRat};
use crate::rational::{rat, Rational};
use crate::witness::WitnessReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DkError {
    #[error("{0} is not in Z + xK[x]: constant term is not an integer")]
    NotMember(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{0} is a unit; the other factor is divisible by r outright")]
    UnitCofactor(String),
    #[error("no built-in factorization for degree {0}; an oracle factor is required")]
    OracleNeeded(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DkElem(KPoly);

impl DkElem {
    /// Accepts `f` iff its constant coefficient is an integer.
    pub fn new(f: KPoly) -> Result<Self, DkError> {
        if f.constant_term().as_integer().is_none() {
            return Err(DkError::NotMember(f.to_string()));
        }
        Ok(DkElem(f))
    }

    pub fn from_int(n: i64) -> Self {
        DkElem(KPoly::constant(QuadRat::from_int(n)))
    }

    pub fn x() -> Self {
        DkElem(KPoly::x())
    }

    pub fn poly(&self) -> &KPoly {
        &self.0
    }

    pub fn into_poly(self) -> KPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Units of `D + xK[x]` are the units of `D`, here `+1` and `-1`.
    pub fn is_unit(&self) -> bool {
        self.0.degree() == Some(0)
            && self
                .0
                .constant_term()
                .as_integer()
                .is_some_and(|n| n.abs().is_one())
    }

    pub fn constant_term(&self) -> BigInt {
        self.0
            .constant_term()
            .as_integer()
            .expect("membership invariant")
    }

    /// Order of vanishing at zero.
    pub fn ord(&self) -> usize {
        self.0.ord().expect("ord of zero")
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn mul(&self, other: &DkElem) -> DkElem {
        DkElem(&self.0 * &other.0)
    }

    pub fn neg(&self) -> DkElem {
        DkElem(-&self.0)
    }

    /// `g / self` in the domain: divide in `K[x]`, then require the quotient's
    /// constant term to be an integer.
    pub fn divides(&self, g: &DkElem) -> Result<DkElem, DkError> {
        let q = g.0.div_exact(&self.0).ok_or(DkError::NotDivisible)?;
        DkElem::new(q).map_err(|_| DkError::NotDivisible)
    }
}

impl fmt::Display for DkElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    DividesB,
    DividesC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProofCase {
    /// `ord r >= 1`: any nonunit integer works.
    Case1Ord,
    /// `r(0)` is a nonunit integer: one of its prime factors.
    Case2_1Constant,
    /// `r(0) = +-1`: a prime of `K[x]` normalised to constant term 1.
    Case2_2PolyPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeLikeWitness {
    pub divisor: DkElem,
    pub side: Side,
    pub case_used: ProofCase,
    /// `(r / divisor, side / divisor)`.
    pub quotients: (DkElem, DkElem),
}

/// Finds a nonunit divisor of `r` that divides `b` or `c`, given `r | bc`.
///
/// `oracle` is consulted only when `r(0) = +-1` and `r` has degree four or
/// more; it must be a factor of `r` in `K[x]`.
pub fn prime_like_witness(
    r: &DkElem,
    b: &DkElem,
    c: &DkElem,
    oracle: Option<&KPoly>,
) -> Result<PrimeLikeWitness, DkError> {
    if r.is_zero() || r.is_unit() {
        return Err(DkError::PreconditionFailed(format!("{r} must be a nonzero nonunit")));
    }
    if b.is_zero() || c.is_zero() {
        return Err(DkError::PreconditionFailed("b and c must be nonzero".into()));
    }
    for v in [b, c] {
        if v.is_unit() {
            return Err(DkError::UnitCofactor(v.to_string()));
        }
    }
    if r.divides(&b.mul(c)).is_err() {
        return Err(DkError::PreconditionFailed(format!("{r} does not divide ({b})({c})")));
    }

    let (divisor, case_used) = if r.ord() >= 1 {
        (DkElem::from_int(2), ProofCase::Case1Ord)
    } else {
        let r0 = r.constant_term();
        if !r0.abs().is_one() {
            let p = smallest_prime_factor(&r0).expect("|r(0)| >= 2");
            let p = DkElem(KPoly::constant(QuadRat::from_rational(Rational::from_integer(p))));
            (p, ProofCase::Case2_1Constant)
        } else {
            let normalized = if r0.is_negative() { r.neg() } else { r.clone() };
            let factor = match normalized.poly().prime_factor() {
                Ok(f) => f,
                Err(FactorError::NeedOracle(d)) => {
                    let f = oracle.ok_or(DkError::OracleNeeded(d))?;
                    check_oracle_factor(f, normalized.poly())?;
                    f.clone()
                }
                Err(FactorError::Constant) => unreachable!("nonunit with unit constant has degree >= 1"),
            };
            let c0 = factor.constant_term();
            let rescaled = factor.scale(&c0.inverse().expect("factor of r has r(0) != 0"));
            (DkElem::new(rescaled).expect("constant term 1"), ProofCase::Case2_2PolyPrime)
        }
    };

    let r_quot = divisor.divides(r).map_err(|_| {
        DkError::PreconditionFailed(format!("internal: {divisor} does not divide {r}"))
    })?;
    let (side, side_quot) = match divisor.divides(b) {
        Ok(q) => (Side::DividesB, q),
        Err(_) => match divisor.divides(c) {
            Ok(q) => (Side::DividesC, q),
            Err(_) => {
                return Err(DkError::PreconditionFailed(format!(
                    "{divisor} divides neither {b} nor {c}; the factor is not prime"
                )))
            }
        },
    };
    Ok(PrimeLikeWitness {
        divisor,
        side,
        case_used,
        quotients: (r_quot, side_quot),
    })
}

fn check_oracle_factor(f: &KPoly, r: &KPoly) -> Result<(), DkError> {
    if f.degree().unwrap_or(0) == 0 || r.div_exact(f).is_none() {
        return Err(DkError::PreconditionFailed(format!("oracle factor {f} does not divide {r} properly")));
    }
    if f.degree() <= Some(3) && f.is_irreducible() != Ok(true) {
        return Err(DkError::PreconditionFailed(format!("oracle factor {f} is reducible")));
    }
    Ok(())
}

/// Verifies that `x` is not primal: it divides `(sqrt2 x)(x / sqrt2)` but
/// admits no splitting `x = r's'` with `r' | sqrt2 x` and `s' | x / sqrt2`
/// (or the other way round).
pub fn x_not_primal_check() -> WitnessReport {
    let start = Instant::now();
    let alpha = QuadRat::sqrt2();
    let alpha_inv = alpha.inverse().expect("sqrt 2 is nonzero");
    let x = DkElem::x();
    let ax = DkElem::new(KPoly::term(alpha.clone(), 1)).expect("no constant term");
    let ainv_x = DkElem::new(KPoly::term(alpha_inv.clone(), 1)).expect("no constant term");
    let mut report = WitnessReport::new(
        "x-not-primal",
        "Z + xQ(sqrt 2)[x] is not pre-Schreier: x is not primal",
    );
    report.inputs = vec![x.to_string(), ax.to_string(), ainv_x.to_string()];

    let product = ax.mul(&ainv_x);
    match x.divides(&product) {
        Ok(q) => report.check_with_quotient(
            "x divides (sqrt2 x)(x/sqrt2)",
            true,
            format!("({ax})({ainv_x}) = {product}"),
            q.to_string(),
        ),
        Err(_) => report.check("x divides (sqrt2 x)(x/sqrt2)", false, "division failed"),
    }
    for target in [&ax, &ainv_x] {
        let fails = x.divides(target).is_err();
        report.check(
            &format!("x does not divide {target}"),
            fails,
            "quotient constant is irrational",
        );
    }

    // x = u v forces deg u + deg v = 1, so one factor is a constant of the
    // domain, i.e. a nonzero integer d, and the other is x/d.
    let sqrt2_const = DkElem::new(KPoly::constant(alpha.clone()));
    report.check(
        "constants of the domain are integers",
        sqrt2_const.is_err() && DkElem::new(KPoly::constant(QuadRat::from_int(-7))).is_ok(),
        "sqrt 2 rejected as a constant, -7 accepted",
    );
    let sample: Vec<i64> = (-12..=12).filter(|d| *d != 0).collect();
    let shapes_ok = sample.iter().all(|&d| {
        let dk = DkElem::from_int(d);
        let cofactor = DkElem::new(KPoly::term(QuadRat::from_rational(rat(1, d)), 1));
        match cofactor {
            Ok(v) => dk.mul(&v) == x && v.degree() == Some(1) && dk.degree() == Some(0),
            Err(_) => false,
        }
    });
    report.check(
        "factorizations of x are d * (x/d) with d a nonzero integer",
        shapes_ok,
        "degree additivity forces a constant factor; sampled d in [-12, 12]",
    );

    // (x/d) | beta x  iff  d beta is an integer. beta has a nonzero sqrt 2
    // coordinate q, and the sqrt 2 coordinate of d beta is d q != 0 for
    // every d != 0, so d beta is never rational.
    for (label, beta) in [("sqrt2 x", &alpha), ("x/sqrt2", &alpha_inv)] {
        let symbolic = !beta.q.is_zero();
        let sampled = sample.iter().all(|&d| {
            let divisor = DkElem::new(KPoly::term(QuadRat::from_rational(rat(1, d)), 1)).unwrap();
            let target = DkElem::new(KPoly::term(beta.clone(), 1)).unwrap();
            divisor.divides(&target).is_err()
        });
        report.check(
            &format!("no x/d divides {label}"),
            symbolic && sampled,
            format!(
                "quotient d*({beta}) has sqrt2-part d*{} != 0 for all d != 0",
                beta.q
            ),
        );
    }
    report.check(
        "every splitting needs x/d to divide sqrt2 x or x/sqrt2",
        true,
        "both assignments of (d, x/d) to the two targets place x/d on one of them",
    );
    let xx = x.mul(&x);
    report.check(
        "sanity: x divides x*x",
        x.divides(&xx).as_ref() == Ok(&x),
        "quotient x",
    );
    report.finish(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: (i64, i64), q: (i64, i64)) -> QuadRat {
        QuadRat::new(rat(p.0, p.1), rat(q.0, q.1))
    }

    fn dk(cs: &[QuadRat]) -> DkElem {
        DkElem::new(KPoly::new(cs.to_vec())).unwrap()
    }

    #[test]
    fn membership() {
        assert!(DkElem::new(KPoly::term(QuadRat::sqrt2(), 1)).is_ok());
        assert!(matches!(
            DkElem::new(KPoly::constant(QuadRat::sqrt2())),
            Err(DkError::NotMember(_))
        ));
        assert!(DkElem::new(KPoly::new(vec![k((3, 1), (0, 1)), k((1, 2), (0, 1))])).is_ok());
    }

    #[test]
    fn divisibility() {
        let x = DkElem::x();
        let ax = dk(&[k((0, 1), (0, 1)), QuadRat::sqrt2()]);
        let ainv = dk(&[k((0, 1), (0, 1)), k((0, 1), (1, 2))]);
        assert_eq!(x.divides(&ax.mul(&ainv)), Ok(x.clone()));
        assert_eq!(x.divides(&ax), Err(DkError::NotDivisible));
        assert_eq!(ax.divides(&ax), Ok(DkElem::from_int(1)));
    }

    #[test]
    fn order() {
        assert_eq!(dk(&[k((0, 1), (0, 1)), QuadRat::sqrt2()]).ord(), 1);
        assert_eq!(dk(&[k((3, 1), (0, 1)), QuadRat::one()]).ord(), 0);
        assert_eq!(DkElem::new(KPoly::term(QuadRat::one(), 3)).unwrap().ord(), 3);
    }

    #[test]
    fn witness_case_1() {
        let r = dk(&[QuadRat::zero(), QuadRat::sqrt2()]);
        let c = dk(&[QuadRat::one(), QuadRat::one()]);
        let w = prime_like_witness(&r, &r, &c, None).unwrap();
        assert_eq!(w.divisor, DkElem::from_int(2));
        assert_eq!(w.side, Side::DividesB);
        assert_eq!(w.case_used, ProofCase::Case1Ord);
    }

    #[test]
    fn witness_case_2_1() {
        let r = dk(&[QuadRat::from_int(4), QuadRat::one()]);
        let c = dk(&[QuadRat::one(), QuadRat::one()]);
        let w = prime_like_witness(&r, &r, &c, None).unwrap();
        assert_eq!(w.divisor, DkElem::from_int(2));
        assert_eq!(w.side, Side::DividesB);
        assert_eq!(w.case_used, ProofCase::Case2_1Constant);
    }

    #[test]
    fn witness_case_2_2() {
        let r = dk(&[QuadRat::one(), QuadRat::sqrt2()]);
        let one_plus_x = dk(&[QuadRat::one(), QuadRat::one()]);
        let b = r.mul(&one_plus_x);
        assert!(matches!(
            prime_like_witness(&r, &b, &DkElem::from_int(1), None),
            Err(DkError::UnitCofactor(_))
        ));
        let w = prime_like_witness(&r, &b, &one_plus_x, None).unwrap();
        assert_eq!(w.divisor, r);
        assert_eq!(w.side, Side::DividesB);
        assert_eq!(w.case_used, ProofCase::Case2_2PolyPrime);
        assert_eq!(w.quotients, (DkElem::from_int(1), one_plus_x));
    }

    #[test]
    fn witness_rejects_bad_input() {
        let r = dk(&[QuadRat::from_int(3), QuadRat::one()]);
        let b = dk(&[QuadRat::from_int(2), QuadRat::one()]);
        assert!(matches!(
            prime_like_witness(&r, &b, &b, None),
            Err(DkError::PreconditionFailed(_))
        ));
        assert!(matches!(
            prime_like_witness(&DkElem::from_int(-1), &b, &b, None),
            Err(DkError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn witness_needs_oracle_for_quartics() {
        // r = (1 + x^2)(1 + sqrt2 x^2), degree 4 with r(0) = 1
        let f1 = dk(&[QuadRat::one(), QuadRat::zero(), QuadRat::one()]);
        let f2 = dk(&[QuadRat::one(), QuadRat::zero(), QuadRat::sqrt2()]);
        let r = f1.mul(&f2);
        let b = f1.mul(&DkElem::x());
        let c = f2.mul(&DkElem::x());
        assert_eq!(prime_like_witness(&r, &b, &c, None), Err(DkError::OracleNeeded(4)));
        let w = prime_like_witness(&r, &b, &c, Some(f2.poly())).unwrap();
        assert_eq!(w.divisor, f2);
        assert_eq!(w.side, Side::DividesC);
    }

    #[test]
    fn x_is_not_primal() {
        let report = x_not_primal_check();
        assert!(report.reproduced(), "{report:?}");
    }
}
