//! Divisibility predicates over the registered domains.
//!
//! Every predicate answers with an explicit `Unknown` when no decision
//! procedure covers its inputs; that verdict is never folded into `false`.
//! Coprimality is decided per domain: integer gcd, divisor enumeration in
//! `Z[sqrt(-5)]`, componentwise minima of monomials in `R0`/`R`, and
//! constant terms in `Z + xK[x]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{mcd_verify, AlgElem};
use crate::classic::{positive_divisors, QuadInt};
use crate::dk::{prime_like_witness, DkElem, DkError, ProofCase};
use crate::domain::{DomainElem, DomainError, DomainHandle, DomainId};
use crate::exponents::ExpVec;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("content list is empty after dropping zero coefficients")]
    EmptyContent,
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

/// Coefficients of a polynomial, i.e. generators of its content ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentList {
    coefficients: Vec<DomainElem>,
}

impl ContentList {
    pub fn new(domain: DomainId, coefficients: Vec<DomainElem>) -> Result<Self, PredicateError> {
        for c in &coefficients {
            if c.domain() != domain {
                return Err(DomainError::Mismatch {
                    expected: domain,
                    found: c.domain(),
                }
                .into());
            }
        }
        let coefficients: Vec<_> = coefficients.into_iter().filter(|c| !c.is_zero()).collect();
        if coefficients.is_empty() {
            return Err(PredicateError::EmptyContent);
        }
        Ok(ContentList { coefficients })
    }

    pub fn coefficients(&self) -> &[DomainElem] {
        &self.coefficients
    }
}

/// Outcome of a search for a common nonunit divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommonDivisor {
    Found(DomainElem),
    None,
    Unknown,
}

/// Looks for a nonunit dividing every element of a nonempty list of
/// nonzero elements of one domain.
pub fn common_nonunit_divisor(id: DomainId, elems: &[DomainElem]) -> CommonDivisor {
    if elems.iter().any(DomainElem::is_unit) {
        return CommonDivisor::None;
    }
    match id {
        DomainId::Z => {
            let g = elems.iter().fold(BigInt::zero(), |acc, e| match e {
                DomainElem::Z(n) => acc.gcd(n),
                _ => unreachable!("checked domain"),
            });
            if g.is_one() {
                CommonDivisor::None
            } else {
                CommonDivisor::Found(DomainElem::Z(g))
            }
        }
        DomainId::Z5 => {
            let qs: Vec<&QuadInt> = elems
                .iter()
                .map(|e| match e {
                    DomainElem::Z5(q) => q,
                    _ => unreachable!("checked domain"),
                })
                .collect();
            let smallest = qs.iter().min_by_key(|q| q.norm()).expect("nonempty");
            smallest
                .divisors()
                .into_iter()
                .filter(|d| !d.is_unit())
                .find(|d| qs.iter().all(|q| d.divides(q)))
                .map_or(CommonDivisor::None, |d| CommonDivisor::Found(DomainElem::Z5(d)))
        }
        DomainId::R0 | DomainId::R => {
            let Some(monos) = elems.iter().map(DomainElem::as_monomial).collect::<Option<Vec<_>>>()
            else {
                return CommonDivisor::Unknown;
            };
            let min = monos[1..]
                .iter()
                .fold(monos[0].clone(), |acc, m| acc.componentwise_min(m));
            if id == DomainId::R0 {
                if min.is_zero() {
                    CommonDivisor::None
                } else {
                    CommonDivisor::Found(DomainElem::R0(AlgElem::monomial(min)))
                }
            } else {
                match r_divisor_below(&min, monos.iter().copied()) {
                    Some(d) => CommonDivisor::Found(DomainElem::R(AlgElem::monomial(d))),
                    None => CommonDivisor::None,
                }
            }
        }
        DomainId::Dk => dk_common_divisor(elems),
    }
}

/// A nonunit monomial of `R` below `min` dividing each of `targets` in
/// `R`, or `None` when there is none.
///
/// Any such divisor is a nonzero vector of `Q_R` below `min`, so it needs
/// a positive `X`, `Y` or `Z` coordinate in `min`. When one exists the
/// `X, Y, Z` part of `min` is tried first, then half of one positive
/// coordinate, which always works since the coordinate stays positive in
/// every quotient.
fn r_divisor_below<'a>(
    min: &ExpVec,
    targets: impl Iterator<Item = &'a ExpVec> + Clone,
) -> Option<ExpVec> {
    if !min.has_xyz() {
        return None;
    }
    let divides_all = |d: &ExpVec| {
        targets
            .clone()
            .all(|t| t.checked_sub(d).is_some_and(|q| q.in_qr()))
    };
    let xyz = min.xyz_part();
    if divides_all(&xyz) {
        return Some(xyz);
    }
    let half = Rational::new(1.into(), 2.into());
    let d = if min.x().is_positive() {
        ExpVec::x_pow(min.x() * &half)
    } else if min.y().is_positive() {
        ExpVec::y_pow(min.y() * &half)
    } else {
        ExpVec::z_pow(min.z() * &half)
    };
    debug_assert!(divides_all(&d));
    Some(d)
}

/// An integer `d` divides `f` in `Z + xK[x]` iff it divides `f(0)`, and
/// every divisor of a nonzero integer is an integer. So with a constant
/// among the elements, or with a shared nontrivial constant-term gcd, the
/// question is settled by integer arithmetic.
fn dk_common_divisor(elems: &[DomainElem]) -> CommonDivisor {
    let polys: Vec<&DkElem> = elems
        .iter()
        .map(|e| match e {
            DomainElem::Dk(f) => f,
            _ => unreachable!("checked domain"),
        })
        .collect();
    let g = polys
        .iter()
        .fold(BigInt::zero(), |acc, f| acc.gcd(&f.constant_term()));
    let found = |n: BigInt| {
        CommonDivisor::Found(DomainElem::Dk(
            DkElem::new(crate::classic::KPoly::constant(crate::classic::QuadRat::from_rational(
                Rational::from_integer(n),
            )))
            .expect("integer constant"),
        ))
    };
    if g.is_zero() {
        // every element vanishes at 0, so 2 divides all of them
        return found(BigInt::from(2));
    }
    if !g.is_one() {
        return found(g);
    }
    if polys.iter().any(|f| f.degree() == Some(0)) {
        CommonDivisor::None
    } else {
        CommonDivisor::Unknown
    }
}

/// Whether the coefficients generate a content contained in no proper
/// principal ideal.
pub fn is_primitive(d: &DomainHandle, coefficients: &[DomainElem]) -> Result<Decision, PredicateError> {
    let content = ContentList::new(d.id, coefficients.to_vec())?;
    Ok(match common_nonunit_divisor(d.id, content.coefficients()) {
        CommonDivisor::Found(_) => Decision::No,
        CommonDivisor::None => Decision::Yes,
        CommonDivisor::Unknown => Decision::Unknown,
    })
}

/// `gcd(a, b) = 1` in the sense of having no common nonunit divisor.
pub fn coprime(d: &DomainHandle, a: &DomainElem, b: &DomainElem) -> Result<Decision, PredicateError> {
    if a.is_zero() && b.is_zero() {
        return Ok(Decision::No);
    }
    is_primitive(d, &[a.clone(), b.clone()])
}

/// Coefficient list of the product of two polynomials.
pub fn poly_mul(f: &[DomainElem], g: &[DomainElem]) -> Result<Vec<DomainElem>, PredicateError> {
    let (Some(first), false) = (f.first(), g.is_empty()) else {
        return Ok(Vec::new());
    };
    let id = first.domain();
    let mut out = vec![DomainElem::zero(id); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b)?)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GaussVerdict {
    ProductPrimitive,
    /// Certifies that the domain is not a GL-domain.
    ProductNotPrimitive { common_divisor: String },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussReport {
    pub f: Vec<String>,
    pub g: Vec<String>,
    pub product: Vec<String>,
    pub verdict: GaussVerdict,
}

/// Multiplies two primitive polynomials and decides whether the product is
/// primitive again.
pub fn gauss_product_check(
    d: &DomainHandle,
    f: &[DomainElem],
    g: &[DomainElem],
) -> Result<GaussReport, PredicateError> {
    let mut unknown = false;
    for (name, poly) in [("f", f), ("g", g)] {
        match is_primitive(d, poly)? {
            Decision::Yes => {}
            Decision::No => {
                return Err(PredicateError::PreconditionFailed(format!("{name} is not primitive")))
            }
            Decision::Unknown => unknown = true,
        }
    }
    let product = poly_mul(f, g)?;
    let show = |p: &[DomainElem]| p.iter().map(ToString::to_string).collect::<Vec<_>>();
    let verdict = if unknown {
        GaussVerdict::Unknown
    } else {
        let nonzero: Vec<DomainElem> = product.iter().filter(|c| !c.is_zero()).cloned().collect();
        match common_nonunit_divisor(d.id, &nonzero) {
            CommonDivisor::Found(c) => GaussVerdict::ProductNotPrimitive {
                common_divisor: c.to_string(),
            },
            CommonDivisor::None => GaussVerdict::ProductPrimitive,
            CommonDivisor::Unknown => GaussVerdict::Unknown,
        }
    };
    Ok(GaussReport {
        f: show(f),
        g: show(g),
        product: show(&product),
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AqVerdict {
    /// `gcd(r,s) = gcd(r,t) = 1` and `gcd(r,st) = 1`.
    Holds,
    /// `gcd(r,s) = gcd(r,t) = 1` but `gcd(r,st) != 1`: the domain is not GL.
    Violation,
    /// The hypothesis `gcd(r,s) = gcd(r,t) = 1` is false.
    HypothesisFails,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AqReport {
    pub r_s_coprime: Decision,
    pub r_t_coprime: Decision,
    pub r_st_coprime: Decision,
    pub verdict: AqVerdict,
}

/// Checks the implication `gcd(r,s) = gcd(r,t) = 1 => gcd(r,st) = 1`.
pub fn aq_triple_check(
    d: &DomainHandle,
    r: &DomainElem,
    s: &DomainElem,
    t: &DomainElem,
) -> Result<AqReport, PredicateError> {
    let rs = coprime(d, r, s)?;
    let rt = coprime(d, r, t)?;
    let rst = coprime(d, r, &s.mul(t)?)?;
    let verdict = match (rs, rt, rst) {
        (Decision::No, _, _) | (_, Decision::No, _) => AqVerdict::HypothesisFails,
        (Decision::Yes, Decision::Yes, Decision::Yes) => AqVerdict::Holds,
        (Decision::Yes, Decision::Yes, Decision::No) => AqVerdict::Violation,
        _ => AqVerdict::Unknown,
    };
    Ok(AqReport {
        r_s_coprime: rs,
        r_t_coprime: rt,
        r_st_coprime: rst,
        verdict,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessSide {
    R,
    S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeLikeOutcome {
    /// A nonunit `divisor` of `p` dividing the given side; quotients are
    /// `(p / divisor, side / divisor)`.
    Witness {
        divisor: DomainElem,
        side: WitnessSide,
        quotients: (DomainElem, DomainElem),
        case: Option<ProofCase>,
    },
    /// Exhaustive search found nothing: `p` is not prime-like.
    NoWitness,
    Unknown(String),
}

fn check_nonzero_nonunit(name: &str, p: &DomainElem) -> Result<(), PredicateError> {
    if p.is_zero() || p.is_unit() {
        return Err(PredicateError::PreconditionFailed(format!(
            "{name} = {p} must be a nonzero nonunit"
        )));
    }
    Ok(())
}

fn check_divides_product(p: &DomainElem, a: &DomainElem, b: &DomainElem) -> Result<(), PredicateError> {
    if p.divides(&a.mul(b)?)?.is_none() {
        return Err(PredicateError::PreconditionFailed(format!(
            "{p} does not divide ({a})({b})"
        )));
    }
    Ok(())
}

/// Searches for a nonunit divisor of `p` dividing `r` or `s`, given
/// `p | rs`.
pub fn prime_like_check(
    d: &DomainHandle,
    p: &DomainElem,
    r: &DomainElem,
    s: &DomainElem,
) -> Result<PrimeLikeOutcome, PredicateError> {
    p.same_domain(r)?;
    p.same_domain(s)?;
    check_nonzero_nonunit("p", p)?;
    check_divides_product(p, r, s)?;

    let witness = |divisor: DomainElem, side: WitnessSide, case| -> Result<PrimeLikeOutcome, PredicateError> {
        let target = match side {
            WitnessSide::R => r,
            WitnessSide::S => s,
        };
        let qp = divisor.divides(p)?.expect("divisor of p");
        let qt = divisor.divides(target)?.expect("divisor of side");
        Ok(PrimeLikeOutcome::Witness {
            divisor,
            side,
            quotients: (qp, qt),
            case,
        })
    };
    let first_dividing = |cands: Vec<DomainElem>| -> Result<Option<(DomainElem, WitnessSide)>, PredicateError> {
        for c in cands {
            if c.divides(r)?.is_some() {
                return Ok(Some((c, WitnessSide::R)));
            }
            if c.divides(s)?.is_some() {
                return Ok(Some((c, WitnessSide::S)));
            }
        }
        Ok(None)
    };

    match (d.id, p, r, s) {
        (DomainId::Z, DomainElem::Z(n), _, _) => {
            let cands = positive_divisors(n)
                .into_iter()
                .filter(|k| !k.is_one())
                .map(DomainElem::Z)
                .collect();
            match first_dividing(cands)? {
                Some((dv, side)) => witness(dv, side, None),
                None => Ok(PrimeLikeOutcome::NoWitness),
            }
        }
        (DomainId::Z5, DomainElem::Z5(q), _, _) => {
            let cands = q
                .divisors()
                .into_iter()
                .filter(|k| !k.is_unit())
                .map(DomainElem::Z5)
                .collect();
            match first_dividing(cands)? {
                Some((dv, side)) => witness(dv, side, None),
                None => Ok(PrimeLikeOutcome::NoWitness),
            }
        }
        (DomainId::R0 | DomainId::R, DomainElem::R0(f) | DomainElem::R(f), _, _) => {
            let Some(pm) = f.as_monomial() else {
                // p itself is the only candidate we can always check
                return match first_dividing(vec![p.clone()])? {
                    Some((dv, side)) => witness(dv, side, None),
                    None => Ok(PrimeLikeOutcome::Unknown(
                        "non-monomial p outside the decision procedures".into(),
                    )),
                };
            };
            for (side, target) in [(WitnessSide::R, r), (WitnessSide::S, s)] {
                let (DomainElem::R0(t) | DomainElem::R(t)) = target else {
                    unreachable!("checked domain")
                };
                if t.is_zero() {
                    return witness(p.clone(), side, None);
                }
                let min = pm.componentwise_min(&t.monomial_min().expect("nonzero"));
                let found = if d.id == DomainId::R0 {
                    (!min.is_zero()).then_some(min)
                } else {
                    let mut targets: Vec<&ExpVec> = t.monomials().collect();
                    targets.push(pm);
                    r_divisor_below(&min, targets.into_iter())
                };
                if let Some(m) = found {
                    let dv = match d.id {
                        DomainId::R0 => DomainElem::R0(AlgElem::monomial(m)),
                        _ => DomainElem::R(AlgElem::monomial(m)),
                    };
                    return witness(dv, side, None);
                }
            }
            Ok(PrimeLikeOutcome::NoWitness)
        }
        (DomainId::Dk, DomainElem::Dk(pp), DomainElem::Dk(rr), DomainElem::Dk(ss)) => {
            if rr.is_unit() {
                return witness(p.clone(), WitnessSide::S, None);
            }
            if ss.is_unit() {
                return witness(p.clone(), WitnessSide::R, None);
            }
            if rr.is_zero() {
                return witness(p.clone(), WitnessSide::R, None);
            }
            if ss.is_zero() {
                return witness(p.clone(), WitnessSide::S, None);
            }
            match prime_like_witness(pp, rr, ss, None) {
                Ok(w) => {
                    let side = match w.side {
                        crate::dk::Side::DividesB => WitnessSide::R,
                        crate::dk::Side::DividesC => WitnessSide::S,
                    };
                    witness(DomainElem::Dk(w.divisor), side, Some(w.case_used))
                }
                Err(DkError::OracleNeeded(deg)) => Ok(PrimeLikeOutcome::Unknown(format!(
                    "degree {deg} factorization over Q(sqrt 2) needs an oracle factor"
                ))),
                Err(e) => Err(PredicateError::PreconditionFailed(e.to_string())),
            }
        }
        _ => unreachable!("checked domain"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalDecomposition {
    /// Divides `a`.
    pub r_part: DomainElem,
    /// Divides `b`.
    pub s_part: DomainElem,
    pub unit_slack: DomainElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimalOutcome {
    Decomposed(PrimalDecomposition),
    /// The chain ended with a nonunit remainder.
    NotPrimal {
        r_part: DomainElem,
        s_part: DomainElem,
        remainder: DomainElem,
    },
    Unknown(String),
}

/// A maximal common divisor of `a` and `b`, when the domain has a procedure.
pub fn mcd(d: &DomainHandle, a: &DomainElem, b: &DomainElem) -> Result<Option<DomainElem>, PredicateError> {
    a.same_domain(b)?;
    if b.is_zero() {
        return Ok(Some(a.clone()));
    }
    if a.is_zero() {
        return Ok(Some(b.clone()));
    }
    Ok(match (d.id, a, b) {
        (DomainId::Z, DomainElem::Z(x), DomainElem::Z(y)) => Some(DomainElem::Z(x.gcd(y))),
        (DomainId::R0, DomainElem::R0(_), DomainElem::R0(_)) => match (a.as_monomial(), b.as_monomial()) {
            (Some(x), Some(y)) => Some(DomainElem::R0(AlgElem::monomial(x.componentwise_min(y)))),
            _ => None,
        },
        (DomainId::R, DomainElem::R(_), DomainElem::R(_)) => match (a.as_monomial(), b.as_monomial()) {
            (Some(x), Some(y)) => {
                let m = x.componentwise_min(y);
                (m.in_qr() && mcd_verify(&m, x, y).is_ok_and(|v| v.is_maximal()))
                    .then(|| DomainElem::R(AlgElem::monomial(m)))
            }
            _ => None,
        },
        _ => None,
    })
}

/// The constructive primality chain: `d = mcd(p, a)`, `p' = p / d`,
/// `d' = mcd(p', b)`, `r = p' / d'`. In a GL MCD-domain `r` is a unit and
/// `p = d d' r` with `d | a`, `d' | b`.
pub fn primal_decompose(
    d: &DomainHandle,
    p: &DomainElem,
    a: &DomainElem,
    b: &DomainElem,
) -> Result<PrimalOutcome, PredicateError> {
    p.same_domain(a)?;
    p.same_domain(b)?;
    check_nonzero_nonunit("p", p)?;
    check_divides_product(p, a, b)?;
    if !(d.capabilities.has_gcd || d.capabilities.has_mcd_verify) {
        return Ok(PrimalOutcome::Unknown(format!("no mcd procedure for {}", d.id)));
    }
    let Some(first) = mcd(d, p, a)? else {
        return Ok(PrimalOutcome::Unknown("mcd(p, a) outside the decision procedures".into()));
    };
    let p_rest = first.divides(p)?.expect("mcd divides p");
    let Some(second) = mcd(d, &p_rest, b)? else {
        return Ok(PrimalOutcome::Unknown("mcd(p', b) outside the decision procedures".into()));
    };
    let remainder = second.divides(&p_rest)?.expect("mcd divides p'");
    if !remainder.is_unit() {
        return Ok(PrimalOutcome::NotPrimal {
            r_part: first,
            s_part: second,
            remainder,
        });
    }
    let decomposition = PrimalDecomposition {
        r_part: first,
        s_part: second,
        unit_slack: remainder,
    };
    verify_primal(p, a, b, &decomposition)?;
    Ok(PrimalOutcome::Decomposed(decomposition))
}

/// Re-checks `p = r s u` with `u` a unit, `r | a` and `s | b`.
pub fn verify_primal(
    p: &DomainElem,
    a: &DomainElem,
    b: &DomainElem,
    dec: &PrimalDecomposition,
) -> Result<(), PredicateError> {
    let product = dec.r_part.mul(&dec.s_part)?.mul(&dec.unit_slack)?;
    let ok = &product == p
        && dec.unit_slack.is_unit()
        && dec.r_part.divides(a)?.is_some()
        && dec.s_part.divides(b)?.is_some();
    if ok {
        Ok(())
    } else {
        Err(PredicateError::PreconditionFailed(format!(
            "decomposition ({}, {}, {}) of {p} fails verification",
            dec.r_part, dec.s_part, dec.unit_slack
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::named::*;
    use crate::parse::parse_expr;
    use crate::rational::{int, rat};

    fn e(domain: DomainId, text: &str) -> DomainElem {
        parse_expr(text, domain).unwrap()
    }

    fn h(id: DomainId) -> DomainHandle {
        DomainHandle::new(id)
    }

    fn mono(id: DomainId, v: ExpVec) -> DomainElem {
        match id {
            DomainId::R0 => DomainElem::R0(AlgElem::monomial(v)),
            _ => DomainElem::R(AlgElem::monomial(v)),
        }
    }

    #[test]
    fn primitivity_examples() {
        let r = h(DomainId::R);
        let content = [mono(DomainId::R, y_t(1)), mono(DomainId::R, z_t(1))];
        assert_eq!(is_primitive(&r, &content), Ok(Decision::Yes));
        let z5 = h(DomainId::Z5);
        let c = [e(DomainId::Z5, "2"), e(DomainId::Z5, "1+1i5")];
        assert_eq!(is_primitive(&z5, &c), Ok(Decision::Yes));
        let c = [e(DomainId::Z5, "4"), e(DomainId::Z5, "4"), e(DomainId::Z5, "6")];
        assert_eq!(is_primitive(&z5, &c), Ok(Decision::No));
        assert_eq!(
            is_primitive(&z5, &[e(DomainId::Z5, "0")]),
            Err(PredicateError::EmptyContent)
        );
        // non-monomial coefficients in R have no decision procedure
        let c = [e(DomainId::R, "X + Y"), e(DomainId::R, "X + Z")];
        assert_eq!(is_primitive(&r, &c), Ok(Decision::Unknown));
    }

    #[test]
    fn dk_primitivity() {
        let dk = h(DomainId::Dk);
        let c = [e(DomainId::Dk, "2"), e(DomainId::Dk, "1r2*x")];
        assert_eq!(is_primitive(&dk, &c), Ok(Decision::No));
        let c = [e(DomainId::Dk, "3"), e(DomainId::Dk, "x + 2")];
        assert_eq!(is_primitive(&dk, &c), Ok(Decision::Yes));
        let c = [e(DomainId::Dk, "x + 1"), e(DomainId::Dk, "x^2 - 1")];
        assert_eq!(is_primitive(&dk, &c), Ok(Decision::Unknown));
    }

    #[test]
    fn gauss_examples() {
        let z5 = h(DomainId::Z5);
        let f = [e(DomainId::Z5, "2"), e(DomainId::Z5, "1+1i5")];
        let g = [e(DomainId::Z5, "2"), e(DomainId::Z5, "1-1i5")];
        let rep = gauss_product_check(&z5, &f, &g).unwrap();
        assert_eq!(rep.product, vec!["4", "4", "6"]);
        assert_eq!(
            rep.verdict,
            GaussVerdict::ProductNotPrimitive {
                common_divisor: "2".into()
            }
        );
        let z = h(DomainId::Z);
        let rep = gauss_product_check(
            &z,
            &[DomainElem::int(2), DomainElem::int(3)],
            &[DomainElem::int(3), DomainElem::int(2)],
        )
        .unwrap();
        assert_eq!(rep.verdict, GaussVerdict::ProductPrimitive);
        let r = h(DomainId::R);
        let f = [mono(DomainId::R, y_t(1)), mono(DomainId::R, z_t(1))];
        let g = [mono(DomainId::R, y_t(2)), mono(DomainId::R, z_t(2))];
        let rep = gauss_product_check(&r, &f, &g).unwrap();
        assert_eq!(rep.verdict, GaussVerdict::ProductPrimitive);
        // cross terms cancel in characteristic two
        assert_eq!(rep.product[1], "0");
        let err = gauss_product_check(&z, &[DomainElem::int(2), DomainElem::int(4)], &[DomainElem::int(1)]);
        assert!(matches!(err, Err(PredicateError::PreconditionFailed(_))));
    }

    #[test]
    fn aq_examples() {
        let z5 = h(DomainId::Z5);
        let rep = aq_triple_check(
            &z5,
            &e(DomainId::Z5, "2"),
            &e(DomainId::Z5, "1+1i5"),
            &e(DomainId::Z5, "1-1i5"),
        )
        .unwrap();
        assert_eq!(rep.verdict, AqVerdict::Violation);
        let r = h(DomainId::R);
        let rep = aq_triple_check(&r, &e(DomainId::R, "X"), &e(DomainId::R, "Y"), &e(DomainId::R, "Z")).unwrap();
        assert_eq!(rep.verdict, AqVerdict::Holds);
        let z = h(DomainId::Z);
        let rep = aq_triple_check(&z, &DomainElem::int(4), &DomainElem::int(3), &DomainElem::int(5)).unwrap();
        assert_eq!(rep.verdict, AqVerdict::Holds);
        let rep = aq_triple_check(&z, &DomainElem::int(4), &DomainElem::int(2), &DomainElem::int(5)).unwrap();
        assert_eq!(rep.verdict, AqVerdict::HypothesisFails);
    }

    #[test]
    fn prime_like_examples() {
        let z5 = h(DomainId::Z5);
        let out = prime_like_check(
            &z5,
            &e(DomainId::Z5, "2"),
            &e(DomainId::Z5, "1+1i5"),
            &e(DomainId::Z5, "1-1i5"),
        )
        .unwrap();
        assert_eq!(out, PrimeLikeOutcome::NoWitness);

        let z = h(DomainId::Z);
        let out = prime_like_check(&z, &DomainElem::int(6), &DomainElem::int(4), &DomainElem::int(9)).unwrap();
        match out {
            PrimeLikeOutcome::Witness { divisor, side, .. } => {
                assert_eq!(divisor, DomainElem::int(2));
                assert_eq!(side, WitnessSide::R);
            }
            other => panic!("{other:?}"),
        }

        let r = h(DomainId::R);
        let out = prime_like_check(
            &r,
            &e(DomainId::R, "X"),
            &e(DomainId::R, "X^(1/2)*Y"),
            &e(DomainId::R, "X^(1/2)*Z"),
        )
        .unwrap();
        match out {
            PrimeLikeOutcome::Witness { divisor, .. } => {
                assert_eq!(divisor, mono(DomainId::R, ExpVec::x_pow(rat(1, 2))))
            }
            other => panic!("{other:?}"),
        }

        let bad = prime_like_check(&z, &DomainElem::int(7), &DomainElem::int(4), &DomainElem::int(9));
        assert!(matches!(bad, Err(PredicateError::PreconditionFailed(_))));
        let unit = prime_like_check(&z, &DomainElem::int(-1), &DomainElem::int(4), &DomainElem::int(9));
        assert!(matches!(unit, Err(PredicateError::PreconditionFailed(_))));
    }

    #[test]
    fn prime_like_in_r_needs_quotients_in_r() {
        // p = X U, r = X^(1/2) Y T_1: the min is X^(1/2) T_1, whose X-part
        // divides both with quotients in R
        let r = h(DomainId::R);
        let p = mono(DomainId::R, &ExpVec::x_pow(int(1)) + &ExpVec::bulk(int(1)));
        let rr = mono(
            DomainId::R,
            &(&ExpVec::x_pow(rat(1, 2)) + &ExpVec::y_pow(int(1))) + &ExpVec::t_pow(1, int(1)),
        );
        let ss = mono(DomainId::R, &ExpVec::x_pow(rat(1, 2)) + &ExpVec::bulk(int(1)));
        match prime_like_check(&r, &p, &rr, &ss).unwrap() {
            PrimeLikeOutcome::Witness { divisor, quotients, .. } => {
                assert!(matches!(divisor, DomainElem::R(_)));
                assert!(matches!(quotients.0, DomainElem::R(ref f) if f.in_r()));
                assert!(matches!(quotients.1, DomainElem::R(ref f) if f.in_r()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn prime_like_dk_short_circuits_units() {
        let dk = h(DomainId::Dk);
        let p = e(DomainId::Dk, "1r2*x + 1");
        let b = e(DomainId::Dk, "1r2*x^2 + (1+1r2)*x + 1");
        let out = prime_like_check(&dk, &p, &b, &DomainElem::Dk(DkElem::from_int(1))).unwrap();
        assert!(matches!(out, PrimeLikeOutcome::Witness { side: WitnessSide::R, .. }));
        let out = prime_like_check(&dk, &p, &b, &e(DomainId::Dk, "x + 1")).unwrap();
        assert!(matches!(
            out,
            PrimeLikeOutcome::Witness {
                case: Some(ProofCase::Case2_2PolyPrime),
                ..
            }
        ));
    }

    #[test]
    fn primal_examples() {
        let z = h(DomainId::Z);
        let out = primal_decompose(&z, &DomainElem::int(6), &DomainElem::int(4), &DomainElem::int(9)).unwrap();
        assert_eq!(
            out,
            PrimalOutcome::Decomposed(PrimalDecomposition {
                r_part: DomainElem::int(2),
                s_part: DomainElem::int(3),
                unit_slack: DomainElem::int(1),
            })
        );
        let out = primal_decompose(&z, &DomainElem::int(7), &DomainElem::int(7), &DomainElem::int(1)).unwrap();
        assert_eq!(
            out,
            PrimalOutcome::Decomposed(PrimalDecomposition {
                r_part: DomainElem::int(7),
                s_part: DomainElem::int(1),
                unit_slack: DomainElem::int(1),
            })
        );
        let out = primal_decompose(&z, &DomainElem::int(-6), &DomainElem::int(4), &DomainElem::int(9)).unwrap();
        match out {
            PrimalOutcome::Decomposed(d) => assert_eq!(d.unit_slack, DomainElem::int(-1)),
            other => panic!("{other:?}"),
        }

        let r0 = h(DomainId::R0);
        let out = primal_decompose(
            &r0,
            &e(DomainId::R0, "X*Y"),
            &e(DomainId::R0, "X*Z"),
            &e(DomainId::R0, "Y^2*Z"),
        )
        .unwrap();
        assert_eq!(
            out,
            PrimalOutcome::Decomposed(PrimalDecomposition {
                r_part: e(DomainId::R0, "X"),
                s_part: e(DomainId::R0, "Y"),
                unit_slack: e(DomainId::R0, "1"),
            })
        );

        let z5 = h(DomainId::Z5);
        let out = primal_decompose(&z5, &e(DomainId::Z5, "2"), &e(DomainId::Z5, "2"), &e(DomainId::Z5, "3")).unwrap();
        assert!(matches!(out, PrimalOutcome::Unknown(_)));
    }

    #[test]
    fn monotone_under_extension() {
        let z = h(DomainId::Z);
        let base = [DomainElem::int(4), DomainElem::int(6)];
        assert_eq!(is_primitive(&z, &base), Ok(Decision::No));
        let mut ext = base.to_vec();
        ext.push(DomainElem::int(9));
        assert_eq!(is_primitive(&z, &ext), Ok(Decision::Yes));
    }

    #[test]
    fn r_common_divisor_uses_xyz() {
        let r = h(DomainId::R);
        assert_eq!(
            common_nonunit_divisor(DomainId::R, &[mono(DomainId::R, s_y()), mono(DomainId::R, s_z())]),
            CommonDivisor::Found(mono(DomainId::R, ExpVec::x_pow(int(1))))
        );
        assert_eq!(
            is_primitive(&r, &[mono(DomainId::R, b(1)), mono(DomainId::R, y_t(1))]),
            Ok(Decision::Yes)
        );
    }
}
