//! Scripted reproductions of the structural results, each emitting a
//! [`WitnessReport`].

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{antimatter_factor, mcd_verify, monomial_common_divisor_trivial, AlgElem, McdVerdict};
use crate::classic::QuadInt;
use crate::dk::{x_not_primal_check, ProofCase};
use crate::domain::{DomainElem, DomainHandle, DomainId};
use crate::exponents::named::{b, s_y, s_z, y_t, z_t};
use crate::exponents::ExpVec;
use crate::fuzz;
use crate::predicates::{
    aq_triple_check, gauss_product_check, is_primitive, prime_like_check, AqVerdict, Decision, GaussVerdict,
    PrimeLikeOutcome,
};
use crate::rational::rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Reproduced,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub name: String,
    pub anchor: String,
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    pub details: Vec<SubCheck>,
    pub elapsed_us: u64,
}

impl WitnessReport {
    pub fn new(name: &str, anchor: &str) -> Self {
        WitnessReport {
            name: name.to_string(),
            anchor: anchor.to_string(),
            inputs: Vec::new(),
            verdict: Verdict::Failed,
            details: Vec::new(),
            elapsed_us: 0,
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.details.push(SubCheck {
            name: name.to_string(),
            passed,
            detail: detail.into(),
            quotient: None,
        });
    }

    pub fn check_with_quotient(&mut self, name: &str, passed: bool, detail: impl Into<String>, quotient: String) {
        self.details.push(SubCheck {
            name: name.to_string(),
            passed,
            detail: detail.into(),
            quotient: Some(quotient),
        });
    }

    /// Fixes the verdict and the elapsed time. A report with no sub-checks
    /// is a failure.
    pub fn finish(mut self, start: Instant) -> Self {
        let ok = !self.details.is_empty() && self.details.iter().all(|c| c.passed);
        self.verdict = if ok { Verdict::Reproduced } else { Verdict::Failed };
        self.elapsed_us = u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX);
        self
    }

    pub fn reproduced(&self) -> bool {
        self.verdict == Verdict::Reproduced
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &SubCheck> {
        self.details.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary: one line per sub-check.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {:?}  [{}]\n", self.name, self.verdict, self.anchor);
        for c in &self.details {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("  {mark} {}: {}", c.name, c.detail));
            if let Some(q) = &c.quotient {
                out.push_str(&format!(" (quotient {q})"));
            }
            out.push('\n');
        }
        out.push_str(&format!("  elapsed {} us\n", self.elapsed_us));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("family size {0} outside 1..=1000000")]
    FamilySize(u64),
    #[error("unknown witness {0:?}")]
    UnknownName(String),
}

pub const DEFAULT_N: u32 = 100;
pub const DEFAULT_TRIALS: u32 = 10_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    n: u32,
}

impl FamilyParams {
    pub fn new(n: u64) -> Result<Self, WitnessError> {
        if (1..=1_000_000).contains(&n) {
            Ok(FamilyParams { n: n as u32 })
        } else {
            Err(WitnessError::FamilySize(n))
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams { n: DEFAULT_N }
    }
}

pub const NAMES: [&str; 8] = [
    "mcd-infinite",
    "idf-fails",
    "antimatter",
    "gauss-fails-z5",
    "x-not-primal",
    "claim-fuzz",
    "aq-z5",
    "prime-like-cases",
];

/// Runs a witness by name. `n` is the family size for indexed witnesses and
/// the trial count for fuzzed ones.
pub fn run_witness(name: &str, n: Option<u64>, seed: u64) -> Result<WitnessReport, WitnessError> {
    let family = || n.map_or(Ok(FamilyParams::default()), FamilyParams::new);
    let trials = || n.map_or(Ok(DEFAULT_TRIALS), |t| FamilyParams::new(t).map(|p| p.n()));
    Ok(match name {
        "mcd-infinite" => witness_mcd_infinite(family()?),
        "idf-fails" => witness_idf_fails(family()?),
        "antimatter" => witness_antimatter_idf(trials()?, seed),
        "gauss-fails-z5" => witness_gauss_fails_z5(),
        "x-not-primal" => witness_x_not_primal(),
        "claim-fuzz" => witness_claim_fuzz(trials()?, seed),
        "aq-z5" => witness_aq_z5(),
        "prime-like-cases" => witness_prime_like_cases(family()?.n(), seed),
        other => return Err(WitnessError::UnknownName(other.to_string())),
    })
}

/// `s_y = X Y U`, `s_z = X Z U` and the infinite family `b_i = X U T_i^-1` of
/// pairwise distinct maximal common divisors.
pub fn witness_mcd_infinite(params: FamilyParams) -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "mcd-infinite",
        "R is a GL-domain that is not MCD-finite: {s_y, s_z} has infinitely many MCDs",
    );
    let (sy, sz) = (s_y(), s_z());
    report.inputs = vec![sy.to_string(), sz.to_string(), format!("n = {}", params.n())];
    report.check(
        "s_y and s_z lie in R",
        sy.in_qr() && sz.in_qr(),
        "both have a positive X exponent",
    );
    let half = ExpVec::x_pow(rat(1, 2));
    let not_max = matches!(mcd_verify(&half, &sy, &sz), Ok(McdVerdict::NotMaximal { .. }));
    report.check("control: X^(1/2) is not maximal", not_max, "mcd_verify finds a larger divisor");

    let mut seen = BTreeSet::new();
    let mut failures = Vec::new();
    for i in 1..=params.n() {
        let bi = b(i);
        let ok = mcd_verify(&bi, &sy, &sz) == Ok(McdVerdict::Maximal);
        if !ok {
            failures.push(i);
        }
        if i <= 3 || !ok {
            let q = format!(
                "({}, {})",
                sy.checked_sub(&bi).map_or("-".into(), |v| v.to_string()),
                sz.checked_sub(&bi).map_or("-".into(), |v| v.to_string())
            );
            report.check_with_quotient(&format!("b_{i} = {bi} is maximal"), ok, "mcd_verify", q);
        }
        seen.insert(bi);
    }
    report.check(
        &format!("all b_1..b_{} are maximal common divisors", params.n()),
        failures.is_empty(),
        if failures.is_empty() {
            "mcd_verify = Maximal for every index".to_string()
        } else {
            format!("failed at indices {failures:?}")
        },
    );
    report.check(
        "b_i pairwise distinct (units of R are trivial, so non-associate)",
        seen.len() == params.n() as usize,
        format!("{} distinct monomials", seen.len()),
    );
    report.finish(start)
}

/// `f = s_y + s_z x` in `R[x]` with the irreducible divisors
/// `g_i = Y T_i + Z T_i x`, `f = b_i g_i`.
pub fn witness_idf_fails(params: FamilyParams) -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "idf-fails",
        "the IDF property does not ascend from R to R[x]: s_y + s_z x has infinitely many non-associate irreducible divisors",
    );
    let f = [AlgElem::monomial(s_y()), AlgElem::monomial(s_z())];
    report.inputs = vec![format!("f = ({}) + ({})x", f[0], f[1]), format!("n = {}", params.n())];
    report.check("f has coefficients in R", f.iter().all(AlgElem::in_r), "s_y, s_z in R");

    let mut seen = BTreeSet::new();
    let (mut bad_product, mut bad_content, mut bad_membership) = (Vec::new(), Vec::new(), Vec::new());
    for i in 1..=params.n() {
        let bi = AlgElem::monomial(b(i));
        let g = [AlgElem::monomial(y_t(i)), AlgElem::monomial(z_t(i))];
        let product_ok = g.iter().zip(&f).all(|(gc, fc)| &(&bi * gc) == fc);
        let members_ok = bi.in_r() && g.iter().all(AlgElem::in_r);
        // degree one with trivial content: any factorization has a constant
        // factor dividing both coefficients, hence a unit
        let content_ok = monomial_common_divisor_trivial(&[y_t(i), z_t(i)]) == Ok(true);
        if !product_ok {
            bad_product.push(i);
        }
        if !content_ok {
            bad_content.push(i);
        }
        if !members_ok {
            bad_membership.push(i);
        }
        if i <= 3 {
            report.check_with_quotient(
                &format!("b_{i} * g_{i} = f"),
                product_ok && content_ok && members_ok,
                format!("g_{i} = ({}) + ({})x, content trivial", g[0], g[1]),
                bi.to_string(),
            );
        }
        seen.insert(g);
    }
    let describe = |v: &[u32], good: &str| {
        if v.is_empty() {
            good.to_string()
        } else {
            format!("failed at indices {v:?}")
        }
    };
    report.check(
        "b_i g_i = f for every index",
        bad_product.is_empty(),
        describe(&bad_product, "exact coefficientwise multiplication"),
    );
    report.check(
        "b_i and g_i lie in R and R[x]",
        bad_membership.is_empty(),
        describe(&bad_membership, "every monomial has a positive X, Y or Z exponent"),
    );
    report.check(
        "g_i irreducible: degree 1 with trivial content",
        bad_content.is_empty(),
        describe(&bad_content, "componentwise min of Y T_i, Z T_i has no X, Y, Z part"),
    );
    report.check(
        "g_i pairwise non-associate",
        seen.len() == params.n() as usize,
        format!("{} distinct polynomials; the only unit of R[x] is 1", seen.len()),
    );
    report.finish(start)
}

/// Every nonzero nonunit of `R` is a square of a nonunit, so `R` has no
/// irreducibles.
pub fn witness_antimatter_idf(trials: u32, seed: u64) -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "antimatter",
        "R is antimatter (every nonunit is a square of a nonunit), hence vacuously IDF",
    );
    report.inputs = vec![format!("trials = {trials}"), format!("seed = {seed}")];
    let canonical = [
        AlgElem::monomial(ExpVec::x_pow(rat(1, 1))),
        AlgElem::from_monomials([s_y(), s_z()]),
    ];
    for f in &canonical {
        let ok = fuzz::check_antimatter(f).is_ok();
        let h = f.sqrt();
        report.check_with_quotient(&format!("{f} = h^2"), ok, "h = sqrt f is a nonunit of R", h.to_string());
    }
    let summary = fuzz::run_property(fuzz::Property::Antimatter, trials, seed);
    report.check(
        "fuzzed nonunits of R all factor as nonunit squares",
        summary.failed == 0 && summary.passed == u64::from(trials),
        summary.describe(),
    );
    // sqrt is not the only split: X = X^(1/3) X^(2/3) as well
    let (h, _) = antimatter_factor(&canonical[0]).expect("X is a nonunit of R");
    report.check("sqrt X = X^(1/2)", h == AlgElem::monomial(ExpVec::x_pow(rat(1, 2))), "Frobenius halves exponents");
    report.finish(start)
}

fn z5(a: i64, b: i64) -> DomainElem {
    DomainElem::Z5(QuadInt::new(a, b))
}

/// `(2 + (1+sqrt-5)x)(2 + (1-sqrt-5)x) = 4 + 4x + 6x^2` is not primitive.
pub fn witness_gauss_fails_z5() -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "gauss-fails-z5",
        "Z[sqrt(-5)] is not a GL-domain: a product of primitive polynomials is not primitive",
    );
    let d = DomainHandle::new(DomainId::Z5);
    let f = [z5(2, 0), z5(1, 1)];
    let g = [z5(2, 0), z5(1, -1)];
    report.inputs = vec!["2 + (1+1i5)x".into(), "2 + (1-1i5)x".into()];
    for (name, p) in [("f", &f), ("g", &g)] {
        report.check(
            &format!("{name} is primitive"),
            is_primitive(&d, p) == Ok(Decision::Yes),
            "no common nonunit divisor by enumeration",
        );
    }
    match gauss_product_check(&d, &f, &g) {
        Ok(rep) => {
            report.check(
                "f g = 4 + 4x + 6x^2",
                rep.product == ["4", "4", "6"],
                rep.product.join(", "),
            );
            let ok = matches!(&rep.verdict, GaussVerdict::ProductNotPrimitive { common_divisor } if common_divisor == "2");
            report.check_with_quotient(
                "product is not primitive",
                ok,
                format!("{:?}", rep.verdict),
                "(2, 2, 3)".into(),
            );
        }
        Err(e) => report.check("gauss_product_check", false, e.to_string()),
    }
    report.finish(start)
}

pub fn witness_x_not_primal() -> WitnessReport {
    x_not_primal_check()
}

/// If `fg` lies in `R` then `f` or `g` does, over fuzzed pairs of `R0`.
pub fn witness_claim_fuzz(trials: u32, seed: u64) -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "claim-fuzz",
        "for f, g in R0 with fg in R, one of f, g lies in R",
    );
    report.inputs = vec![format!("trials = {trials}"), format!("seed = {seed}")];
    let summary = fuzz::run_property(fuzz::Property::Claim, trials, seed);
    report.check(
        "no claim violations",
        summary.failed == 0 && summary.passed == u64::from(trials),
        summary.describe(),
    );
    let applicable = summary.count("applicable");
    report.check(
        "the hypothesis fg in R is exercised",
        applicable * 4 >= u64::from(trials),
        format!("{applicable} of {trials} pairs have fg in R"),
    );
    report.finish(start)
}

/// `gcd(2, 1+sqrt-5) = gcd(2, 1-sqrt-5) = 1` but `2 | 6`.
pub fn witness_aq_z5() -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "aq-z5",
        "in a GL-domain gcd(r,s) = gcd(r,t) = 1 implies gcd(r,st) = 1; Z[sqrt(-5)] violates it",
    );
    let d = DomainHandle::new(DomainId::Z5);
    let (r, s, t) = (z5(2, 0), z5(1, 1), z5(1, -1));
    report.inputs = vec![r.to_string(), s.to_string(), t.to_string()];
    match aq_triple_check(&d, &r, &s, &t) {
        Ok(rep) => {
            report.check("gcd(2, 1+1i5) = 1", rep.r_s_coprime == Decision::Yes, "divisor enumeration");
            report.check("gcd(2, 1-1i5) = 1", rep.r_t_coprime == Decision::Yes, "divisor enumeration");
            report.check_with_quotient(
                "gcd(2, 6) != 1",
                rep.r_st_coprime == Decision::No,
                "2 divides 6",
                "3".into(),
            );
            report.check("AQ implication violated", rep.verdict == AqVerdict::Violation, format!("{:?}", rep.verdict));
        }
        Err(e) => report.check("aq_triple_check", false, e.to_string()),
    }
    let pl = prime_like_check(&d, &r, &s, &t);
    report.check(
        "2 is not prime-like",
        matches!(pl, Ok(PrimeLikeOutcome::NoWitness)),
        "its only nonunit divisor up to units is 2, dividing neither factor",
    );
    report.finish(start)
}

/// One canonical triple per proof case plus `n` fuzzed triples, all of
/// which must produce verified witnesses.
pub fn witness_prime_like_cases(n: u32, seed: u64) -> WitnessReport {
    let start = Instant::now();
    let mut report = WitnessReport::new(
        "prime-like-cases",
        "Z + xK[x] is a GL-domain: every nonzero nonunit is prime-like (case split on ord and r(0))",
    );
    report.inputs = vec![format!("fuzzed triples = {n}"), format!("seed = {seed}")];
    let d = DomainHandle::new(DomainId::Dk);
    let canonical = [
        ("x", "x^2 + x", "x + 2", ProofCase::Case1Ord),
        ("6", "2*x + 4", "3*x + 3", ProofCase::Case2_1Constant),
        ("1r2*x + 1", "1r2*x^2 + (1+1r2)*x + 1", "x + 1", ProofCase::Case2_2PolyPrime),
    ];
    for (r, bb, c, case) in canonical {
        let parse = |t| crate::parse::parse_expr(t, DomainId::Dk).expect("canonical literal");
        let out = prime_like_check(&d, &parse(r), &parse(bb), &parse(c));
        match out {
            Ok(PrimeLikeOutcome::Witness { divisor, quotients, case: got, .. }) => report.check_with_quotient(
                &format!("r = {r}, b = {bb}, c = {c}"),
                got == Some(case),
                format!("divisor {divisor} via {got:?}"),
                format!("({}, {})", quotients.0, quotients.1),
            ),
            other => report.check(&format!("r = {r}, b = {bb}, c = {c}"), false, format!("{other:?}")),
        }
    }
    let summary = fuzz::run_property(fuzz::Property::PrimeLikeDk, n, seed);
    report.check(
        "fuzzed triples all yield verified witnesses",
        summary.failed == 0 && summary.passed == u64::from(n),
        summary.describe(),
    );
    report.finish(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_witness_reproduces() {
        for name in NAMES {
            let rep = run_witness(name, Some(50), 7).unwrap();
            assert!(rep.reproduced(), "{}", rep.to_text());
        }
    }

    #[test]
    fn family_guard() {
        assert_eq!(FamilyParams::new(0), Err(WitnessError::FamilySize(0)));
        assert!(FamilyParams::new(1_000_001).is_err());
        assert_eq!(FamilyParams::new(1).unwrap().n(), 1);
        assert!(run_witness("mcd-infinite", Some(0), 0).is_err());
        assert!(matches!(run_witness("nope", None, 0), Err(WitnessError::UnknownName(_))));
    }

    #[test]
    fn single_member_families() {
        let p = FamilyParams::new(1).unwrap();
        assert!(witness_mcd_infinite(p).reproduced());
        assert!(witness_idf_fails(p).reproduced());
    }

    #[test]
    fn reports_are_deterministic() {
        let mut a = witness_mcd_infinite(FamilyParams::new(20).unwrap());
        let mut b = witness_mcd_infinite(FamilyParams::new(20).unwrap());
        a.elapsed_us = 0;
        b.elapsed_us = 0;
        assert_eq!(a.to_json(), b.to_json());
        let mut a = witness_claim_fuzz(200, 3);
        let mut b = witness_claim_fuzz(200, 3);
        a.elapsed_us = 0;
        b.elapsed_us = 0;
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn empty_report_fails() {
        let r = WitnessReport::new("empty", "nothing").finish(Instant::now());
        assert!(!r.reproduced());
    }
}
