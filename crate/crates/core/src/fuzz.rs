//! Seeded random generators and property runners.
//!
//! Generated exponents have denominators at most 6 and numerators bounded
//! by 4 times the denominator; elements have at most 5 monomials and use
//! `T`-indices 1 to 4. Every runner is deterministic in its seed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{antimatter_factor, claim_check, AlgElem, AlgebraError, ClaimVerdict};
use crate::classic::{KPoly, QuadInt, QuadRat};
use crate::dk::{prime_like_witness, DkElem, ProofCase, Side};
use crate::domain::{DomainElem, DomainHandle, DomainId};
use crate::exponents::ExpVec;
use crate::parse::{parse_expr, print_expr};
use crate::predicates::{
    aq_triple_check, gauss_product_check, is_primitive, prime_like_check, primal_decompose, verify_primal,
    AqVerdict, Decision, GaussVerdict, PrimalOutcome, PrimeLikeOutcome,
};
use crate::rational::Rational;

const MAX_TERMS: usize = 5;
const MAX_DEN: i64 = 6;
const MAX_INDEX: u32 = 4;
const MAX_MAG: i64 = 4;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonnegative rational `n/d` with `d <= 6` and `n/d <= 4`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    let d = rng.random_range(1..=MAX_DEN);
    let n = rng.random_range(0..=MAX_MAG * d);
    Rational::new(n.into(), d.into())
}

fn positive_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

fn maybe_rational<R: Rng>(rng: &mut R) -> Rational {
    if rng.random_bool(0.5) {
        rational(rng)
    } else {
        Rational::zero()
    }
}

fn t_part<R: Rng>(rng: &mut R) -> (Rational, Vec<(u32, Rational)>) {
    let u = maybe_rational(rng);
    let mut devs = Vec::new();
    for i in 1..=MAX_INDEX {
        if rng.random_bool(0.3) {
            // exponent of T_i is any nonnegative value, independent of the tail
            devs.push((i, rational(rng) - &u));
        }
    }
    (u, devs)
}

/// Any monomial of `R0`.
pub fn expvec<R: Rng>(rng: &mut R) -> ExpVec {
    let (x, y, z) = (maybe_rational(rng), maybe_rational(rng), maybe_rational(rng));
    let (u, devs) = t_part(rng);
    ExpVec::new(x, y, z, u, devs).expect("nonnegative by construction")
}

/// A monomial with a positive `X`, `Y` or `Z` exponent, so in `Q_R`.
pub fn i_monomial<R: Rng>(rng: &mut R) -> ExpVec {
    let m = expvec(rng);
    if m.has_xyz() {
        return m;
    }
    let lift = match rng.random_range(0..3) {
        0 => ExpVec::x_pow(positive_rational(rng)),
        1 => ExpVec::y_pow(positive_rational(rng)),
        _ => ExpVec::z_pow(positive_rational(rng)),
    };
    &m + &lift
}

/// A nonzero monomial with no `X`, `Y` or `Z`.
pub fn pure_t_monomial<R: Rng>(rng: &mut R) -> ExpVec {
    loop {
        let (u, devs) = t_part(rng);
        let m = ExpVec::new(Rational::zero(), Rational::zero(), Rational::zero(), u, devs)
            .expect("nonnegative by construction");
        if !m.is_zero() {
            return m;
        }
    }
}

fn sum_of<R: Rng>(rng: &mut R, min_terms: usize, mut gen: impl FnMut(&mut R) -> ExpVec) -> AlgElem {
    let k = rng.random_range(min_terms..=MAX_TERMS);
    AlgElem::from_monomials((0..k).map(|_| gen(rng)))
}

pub fn r0_elem<R: Rng>(rng: &mut R) -> AlgElem {
    sum_of(rng, 0, expvec)
}

pub fn nonzero_r0_elem<R: Rng>(rng: &mut R) -> AlgElem {
    loop {
        let f = sum_of(rng, 1, expvec);
        if !f.is_zero() {
            return f;
        }
    }
}

/// An element of the ideal generated by monomials with `X`, `Y` or `Z`.
pub fn i_elem<R: Rng>(rng: &mut R) -> AlgElem {
    sum_of(rng, 0, i_monomial)
}

pub fn pure_t_elem<R: Rng>(rng: &mut R) -> AlgElem {
    sum_of(rng, 1, pure_t_monomial)
}

pub fn r_elem<R: Rng>(rng: &mut R) -> AlgElem {
    let mut f = i_elem(rng);
    if rng.random_bool(0.3) {
        f = &f + &AlgElem::one();
    }
    f
}

pub fn r_nonunit<R: Rng>(rng: &mut R) -> AlgElem {
    loop {
        let f = r_elem(rng);
        if !f.is_zero() && !f.is_one() {
            return f;
        }
    }
}

/// `f = f1 + f2` with `f1` in the ideal and `f2` one of `0`, `1` or a
/// random pure-`T` polynomial, so both branches of the hypothesis occur.
pub fn claim_operand<R: Rng>(rng: &mut R) -> AlgElem {
    let f1 = i_elem(rng);
    let f2 = match rng.random_range(0..3) {
        0 => AlgElem::zero(),
        1 => AlgElem::one(),
        _ => pure_t_elem(rng),
    };
    &f1 + &f2
}

fn small_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

fn small_quadrat<R: Rng>(rng: &mut R) -> QuadRat {
    let p = Rational::new(small_int(rng, 3).into(), rng.random_range(1..=2i64).into());
    let q = if rng.random_bool(0.5) {
        Rational::new(small_int(rng, 2).into(), rng.random_range(1..=2i64).into())
    } else {
        Rational::zero()
    };
    QuadRat::new(p, q)
}

fn nonzero_quadrat<R: Rng>(rng: &mut R) -> QuadRat {
    loop {
        let c = small_quadrat(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// An element of `Z + xK[x]` of exact degree `deg` with constant `c0`.
pub fn dk_elem<R: Rng>(rng: &mut R, deg: usize, c0: i64) -> DkElem {
    let mut coeffs = vec![QuadRat::from_int(c0)];
    for k in 1..=deg {
        coeffs.push(if k == deg { nonzero_quadrat(rng) } else { small_quadrat(rng) });
    }
    DkElem::new(KPoly::new(coeffs)).expect("integer constant term")
}

/// Like [`dk_elem`] with the degree drawn from `degrees` and the constant
/// from `constants`.
fn dk_elem_among<R: Rng>(rng: &mut R, degrees: RangeInclusive<usize>, constants: &[i64]) -> DkElem {
    let deg = rng.random_range(degrees);
    let c0 = constants[rng.random_range(0..constants.len())];
    dk_elem(rng, deg, c0)
}

fn pick<R: Rng, T: Copy>(rng: &mut R, xs: &[T]) -> T {
    xs[rng.random_range(0..xs.len())]
}

/// A triple `(r, b, c)` with `r = r1 r2`, `b = r1 h1`, `c = r2 h2`, so
/// `r | bc` holds by construction, steered into the given proof case.
/// `deg r <= 3`.
pub fn dk_triple<R: Rng>(rng: &mut R, case: ProofCase) -> (DkElem, DkElem, DkElem) {
    let (r1, r2) = match case {
        ProofCase::Case1Ord => (
            dk_elem_among(rng, 1..=2, &[0]),
            dk_elem_among(rng, 0..=1, &[-3, -2, -1, 1, 2, 3]),
        ),
        ProofCase::Case2_1Constant => (
            dk_elem_among(rng, 0..=2, &[-6, -4, -3, -2, 2, 3, 4, 6]),
            dk_elem_among(rng, 0..=1, &[-2, -1, 1, 2]),
        ),
        ProofCase::Case2_2PolyPrime => (
            dk_elem_among(rng, 1..=2, &[-1, 1]),
            dk_elem_among(rng, 0..=1, &[-1, 1]),
        ),
    };
    let small = [-3, -2, -1, 0, 1, 2, 3];
    let h1 = dk_elem_among(rng, 1..=1, &small);
    let h2 = dk_elem_among(rng, 1..=1, &small);
    (r1.mul(&r2), r1.mul(&h1), r2.mul(&h2))
}

pub fn quad_int<R: Rng>(rng: &mut R, bound: i64) -> QuadInt {
    QuadInt::new(small_int(rng, bound), small_int(rng, bound / 2 + 1))
}

/// The kind of a fuzzed property run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    Claim,
    Antimatter,
    ExactDiv,
    NonMultiple,
    Sqrt,
    PrimeLikeDk,
    PrimalZ,
    PrimalR0,
    GaussZ,
    PrimeLikeControl,
    PrimeLikeCoherence,
    ParseRoundTrip,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::Claim,
        Property::Antimatter,
        Property::ExactDiv,
        Property::NonMultiple,
        Property::Sqrt,
        Property::PrimeLikeDk,
        Property::PrimalZ,
        Property::PrimalR0,
        Property::GaussZ,
        Property::PrimeLikeControl,
        Property::PrimeLikeCoherence,
        Property::ParseRoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Claim => "claim",
            Property::Antimatter => "antimatter",
            Property::ExactDiv => "exact-div",
            Property::NonMultiple => "non-multiple",
            Property::Sqrt => "sqrt",
            Property::PrimeLikeDk => "prime-like-dk",
            Property::PrimalZ => "primal-z",
            Property::PrimalR0 => "primal-r0",
            Property::GaussZ => "gauss-z",
            Property::PrimeLikeControl => "prime-like-control",
            Property::PrimeLikeCoherence => "prime-like-coherence",
            Property::ParseRoundTrip => "parse-roundtrip",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
                format!("unknown property {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub property: String,
    pub seed: u64,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    /// Category tallies, e.g. proof cases hit.
    pub counts: BTreeMap<String, u64>,
    pub first_failure: Option<String>,
}

impl FuzzSummary {
    fn new(property: Property, seed: u64) -> Self {
        FuzzSummary {
            property: property.name().to_string(),
            seed,
            trials: 0,
            passed: 0,
            failed: 0,
            counts: BTreeMap::new(),
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.trials += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(e) => {
                self.failed += 1;
                self.first_failure.get_or_insert(e);
            }
        }
    }

    fn tally(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{}/{} passed", self.passed, self.trials);
        if !self.counts.is_empty() {
            let parts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!(" ({})", parts.join(", ")));
        }
        if let Some(f) = &self.first_failure {
            s.push_str(&format!("; first failure: {f}"));
        }
        s
    }
}

/// Checks that `antimatter_factor` splits `f` into two nonunits of `R`
/// whose product is `f`.
pub fn check_antimatter(f: &AlgElem) -> Result<(), String> {
    let (g, h) = antimatter_factor(f).map_err(|e| format!("{f}: {e}"))?;
    let ok = &g * &h == *f
        && [&g, &h].iter().all(|v| v.in_r() && !v.is_zero() && !v.is_one());
    ok.then_some(()).ok_or_else(|| format!("{f}: bad factors {g}, {h}"))
}

/// Certifies that `f` does not divide `g` using monomial data alone: a
/// multiple `f h` has every monomial above the componentwise minimum of
/// `f`, and its largest and smallest monomials are sums of those of `f`
/// and `h`.
pub fn non_multiple_certificate(f: &AlgElem, g: &AlgElem) -> Option<&'static str> {
    if f.is_zero() {
        return Some("zero divisor");
    }
    if g.is_zero() {
        return None;
    }
    let fmin = f.monomial_min().expect("nonzero");
    if g.monomials().any(|m| !fmin.divides(m)) {
        return Some("componentwise minimum");
    }
    if !f.lead().expect("nonzero").divides(g.lead().expect("nonzero")) {
        return Some("leading monomial");
    }
    let trail = |e: &AlgElem| e.monomials().next().cloned().expect("nonzero");
    if !trail(f).divides(&trail(g)) {
        return Some("trailing monomial");
    }
    None
}

fn dk_trial<R: Rng>(rng: &mut R, case: ProofCase, summary: &mut FuzzSummary) -> Result<(), String> {
    let (r, b, c) = dk_triple(rng, case);
    let ctx = || format!("r = {r}, b = {b}, c = {c}");
    let w = prime_like_witness(&r, &b, &c, None).map_err(|e| format!("{}: {e}", ctx()))?;
    let side = match w.side {
        Side::DividesB => &b,
        Side::DividesC => &c,
    };
    let verified = !w.divisor.is_unit()
        && w.divisor.divides(&r).as_ref() == Ok(&w.quotients.0)
        && w.divisor.divides(side).as_ref() == Ok(&w.quotients.1);
    if !verified {
        return Err(format!("{}: witness {} fails re-verification", ctx(), w.divisor));
    }
    if w.case_used != case {
        return Err(format!("{}: expected {case:?}, got {:?}", ctx(), w.case_used));
    }
    summary.tally(&format!("{:?}", w.case_used));
    Ok(())
}

/// Builds `p | ab` in `Z` with `|p| <= 10^4`: `p = p1 p2`, `a = p1 h1`,
/// `b = p2 h2`.
pub fn z_primal_triple<R: Rng>(rng: &mut R) -> (BigInt, BigInt, BigInt) {
    loop {
        let p1: i64 = rng.random_range(1..=100) * pick(rng, &[-1, 1]);
        let p2: i64 = rng.random_range(1..=100);
        if (p1 * p2).abs() < 2 {
            continue;
        }
        let h1: i64 = rng.random_range(1..=30) * pick(rng, &[-1, 1]);
        let h2: i64 = rng.random_range(1..=30);
        return ((p1 * p2).into(), (p1 * h1).into(), (p2 * h2).into());
    }
}

/// Builds `p | ab` among monomials of `R0`.
pub fn r0_primal_triple<R: Rng>(rng: &mut R) -> (ExpVec, ExpVec, ExpVec) {
    loop {
        let (p1, p2) = (expvec(rng), expvec(rng));
        let p = &p1 + &p2;
        if p.is_zero() {
            continue;
        }
        let (h1, h2) = (expvec(rng), expvec(rng));
        return (p, &p1 + &h1, &p2 + &h2);
    }
}

fn primal_trial(d: &DomainHandle, p: DomainElem, a: DomainElem, b: DomainElem) -> Result<(), String> {
    match primal_decompose(d, &p, &a, &b) {
        Ok(PrimalOutcome::Decomposed(dec)) => verify_primal(&p, &a, &b, &dec).map_err(|e| e.to_string()),
        other => Err(format!("p = {p}, a = {a}, b = {b}: {other:?}")),
    }
}

fn random_int_poly<R: Rng>(rng: &mut R) -> Vec<DomainElem> {
    let deg = rng.random_range(1..=3);
    let mut cs: Vec<i64> = (0..=deg).map(|_| small_int(rng, 9)).collect();
    if cs[deg] == 0 {
        cs[deg] = 1;
    }
    cs.into_iter().map(DomainElem::int).collect()
}

fn mono_elem(id: DomainId, m: ExpVec) -> DomainElem {
    match id {
        DomainId::R0 => DomainElem::R0(AlgElem::monomial(m)),
        _ => DomainElem::R(AlgElem::monomial(m)),
    }
}

fn control_trial<R: Rng>(rng: &mut R, summary: &mut FuzzSummary) -> Result<(), String> {
    let (id, p, r, s) = match rng.random_range(0..3) {
        0 => {
            let (p, a, b) = z_primal_triple(rng);
            (DomainId::Z, DomainElem::Z(p), DomainElem::Z(a), DomainElem::Z(b))
        }
        1 => {
            let (p1, p2) = (i_monomial(rng), i_monomial(rng));
            let (h1, h2) = (i_monomial(rng), i_monomial(rng));
            let p = &p1 + &p2;
            (
                DomainId::R,
                mono_elem(DomainId::R, p),
                mono_elem(DomainId::R, &p1 + &h1),
                mono_elem(DomainId::R, &p2 + &h2),
            )
        }
        _ => {
            let case = pick(rng, &[ProofCase::Case1Ord, ProofCase::Case2_1Constant, ProofCase::Case2_2PolyPrime]);
            let (r, b, c) = dk_triple(rng, case);
            (DomainId::Dk, DomainElem::Dk(r), DomainElem::Dk(b), DomainElem::Dk(c))
        }
    };
    summary.tally(id.tag());
    match prime_like_check(&DomainHandle::new(id), &p, &r, &s) {
        Ok(PrimeLikeOutcome::Witness { .. }) => Ok(()),
        other => Err(format!("{id}: p = {p}, r = {r}, s = {s}: {other:?}")),
    }
}

/// In `Z[sqrt(-5)]`: `p` a nonunit divisor of `rs`. A missing witness must
/// come with an AQ violation on `(p, r, s)`.
fn coherence_trial<R: Rng>(rng: &mut R, summary: &mut FuzzSummary) -> Result<(), String> {
    let d = DomainHandle::new(DomainId::Z5);
    let (r, s) = loop {
        let (r, s) = (quad_int(rng, 6), quad_int(rng, 6));
        if !r.is_zero() && !s.is_zero() && !(&r * &s).is_unit() {
            break (r, s);
        }
    };
    let divisors: Vec<QuadInt> = (&r * &s).divisors().into_iter().filter(|q| !q.is_unit()).collect();
    let p = divisors[rng.random_range(0..divisors.len())].clone();
    let (p, r, s) = (DomainElem::Z5(p), DomainElem::Z5(r), DomainElem::Z5(s));
    let out = prime_like_check(&d, &p, &r, &s).map_err(|e| e.to_string())?;
    match out {
        PrimeLikeOutcome::Witness { .. } => {
            summary.tally("witness");
            Ok(())
        }
        PrimeLikeOutcome::NoWitness => {
            summary.tally("no-witness");
            match aq_triple_check(&d, &p, &r, &s) {
                Ok(rep) if rep.verdict == AqVerdict::Violation => Ok(()),
                other => Err(format!("p = {p}, r = {r}, s = {s}: no witness but {other:?}")),
            }
        }
        PrimeLikeOutcome::Unknown(why) => Err(format!("p = {p}: unknown ({why})")),
    }
}

/// A random element of the given domain, in canonical form.
pub fn domain_elem<R: Rng>(rng: &mut R, id: DomainId) -> DomainElem {
    match id {
        DomainId::R0 => DomainElem::R0(r0_elem(rng)),
        DomainId::R => DomainElem::R(r_elem(rng)),
        DomainId::Z => DomainElem::Z(BigInt::from(rng.random_range(-100_000i64..=100_000))),
        DomainId::Z5 => DomainElem::Z5(quad_int(rng, 50)),
        DomainId::Dk => {
            DomainElem::Dk(dk_elem_among(rng, 0..=3, &[-9, -4, -2, -1, 0, 1, 2, 5, 9]))
        }
    }
}

fn round_trip(e: &DomainElem) -> Result<(), String> {
    let text = print_expr(e);
    let back = parse_expr(&text, e.domain()).map_err(|err| format!("{text:?}: {err}"))?;
    if &back != e || print_expr(&back) != text {
        return Err(format!("{text:?} reparsed as {back}"));
    }
    Ok(())
}

pub fn run_property(property: Property, trials: u32, seed: u64) -> FuzzSummary {
    let mut rng = rng(seed);
    let mut summary = FuzzSummary::new(property, seed);
    for i in 0..trials {
        let outcome = match property {
            Property::Claim => {
                let (f, g) = (claim_operand(&mut rng), claim_operand(&mut rng));
                match claim_check(&f, &g) {
                    Ok(ClaimVerdict::NotApplicable) => Ok(()),
                    Ok(ClaimVerdict::Holds { .. }) => {
                        summary.tally("applicable");
                        Ok(())
                    }
                    Err(e) => Err(e.to_string()),
                }
            }
            Property::Antimatter => check_antimatter(&r_nonunit(&mut rng)),
            Property::ExactDiv => {
                let (f, h) = (nonzero_r0_elem(&mut rng), r0_elem(&mut rng));
                let g = &f * &h;
                match g.exact_div(&f) {
                    Ok(q) if q == h => Ok(()),
                    other => Err(format!("({g}) / ({f}) gave {other:?}, expected {h}")),
                }
            }
            Property::NonMultiple => {
                let (f, g, why) = loop {
                    let f = nonzero_r0_elem(&mut rng);
                    let g = &(&f * &r0_elem(&mut rng)) + &AlgElem::monomial(expvec(&mut rng));
                    if let Some(why) = non_multiple_certificate(&f, &g) {
                        break (f, g, why);
                    }
                };
                summary.tally(why);
                match g.exact_div(&f) {
                    Err(AlgebraError::NotDivisible) => Ok(()),
                    other => Err(format!("({g}) / ({f}) gave {other:?}")),
                }
            }
            Property::Sqrt => {
                let f = r0_elem(&mut rng);
                let ok = f.square().sqrt() == f && f.sqrt().square() == f;
                ok.then_some(()).ok_or_else(|| format!("sqrt round trip fails on {f}"))
            }
            Property::PrimeLikeDk => {
                let cases = [ProofCase::Case1Ord, ProofCase::Case2_1Constant, ProofCase::Case2_2PolyPrime];
                dk_trial(&mut rng, cases[i as usize % 3], &mut summary)
            }
            Property::PrimalZ => {
                let (p, a, b) = z_primal_triple(&mut rng);
                primal_trial(&DomainHandle::new(DomainId::Z), DomainElem::Z(p), DomainElem::Z(a), DomainElem::Z(b))
            }
            Property::PrimalR0 => {
                let (p, a, b) = r0_primal_triple(&mut rng);
                let m = |v| mono_elem(DomainId::R0, v);
                primal_trial(&DomainHandle::new(DomainId::R0), m(p), m(a), m(b))
            }
            Property::GaussZ => {
                let d = DomainHandle::new(DomainId::Z);
                let primitive = |rng: &mut ChaCha8Rng| loop {
                    let f = random_int_poly(rng);
                    if is_primitive(&d, &f) == Ok(Decision::Yes) {
                        return f;
                    }
                };
                let (f, g) = (primitive(&mut rng), primitive(&mut rng));
                match gauss_product_check(&d, &f, &g) {
                    Ok(rep) if rep.verdict == GaussVerdict::ProductPrimitive => Ok(()),
                    other => Err(format!("{other:?}")),
                }
            }
            Property::PrimeLikeControl => control_trial(&mut rng, &mut summary),
            Property::PrimeLikeCoherence => coherence_trial(&mut rng, &mut summary),
            Property::ParseRoundTrip => {
                let id = DomainId::ALL[i as usize % DomainId::ALL.len()];
                round_trip(&domain_elem(&mut rng, id))
            }
        };
        summary.record(outcome);
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_classes() {
        let mut rng = rng(1);
        for _ in 0..200 {
            assert!(i_monomial(&mut rng).has_xyz());
            let t = pure_t_monomial(&mut rng);
            assert!(!t.has_xyz() && !t.is_zero());
            assert!(r_elem(&mut rng).in_r());
            let f = r_nonunit(&mut rng);
            assert!(f.in_r() && !f.is_one() && !f.is_zero());
            assert!(r0_elem(&mut rng).len() <= MAX_TERMS);
            let m = expvec(&mut rng);
            let exps = [m.x().clone(), m.y().clone(), m.z().clone(), m.tail().clone()]
                .into_iter()
                .chain((1..=MAX_INDEX + 1).map(|i| m.t_exp(i)));
            for e in exps {
                assert!(*e.denom() <= BigInt::from(MAX_DEN), "{m}");
            }
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let a = run_property(Property::Claim, 100, 42);
        let b = run_property(Property::Claim, 100, 42);
        assert_eq!(a, b);
        let mut r1 = rng(9);
        let mut r2 = rng(9);
        assert_eq!(r0_elem(&mut r1), r0_elem(&mut r2));
    }

    #[test]
    fn dk_triples_satisfy_precondition() {
        let mut rng = rng(5);
        for case in [ProofCase::Case1Ord, ProofCase::Case2_1Constant, ProofCase::Case2_2PolyPrime] {
            for _ in 0..30 {
                let (r, b, c) = dk_triple(&mut rng, case);
                assert!(r.divides(&b.mul(&c)).is_ok());
                assert!(r.poly().degree() <= Some(3));
            }
        }
    }

    #[test]
    fn every_property_passes_small_runs() {
        for p in Property::ALL {
            let s = run_property(p, 60, 11);
            assert!(s.ok(), "{p}: {}", s.describe());
            assert_eq!(s.trials, 60);
        }
    }

    #[test]
    fn certificate_never_fires_on_multiples() {
        let mut rng = rng(3);
        for _ in 0..300 {
            let f = nonzero_r0_elem(&mut rng);
            let g = &f * &r0_elem(&mut rng);
            assert_eq!(non_multiple_certificate(&f, &g), None);
        }
    }

    #[test]
    fn property_names_parse() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>(), Ok(p));
        }
        assert!("bogus".parse::<Property>().is_err());
    }
}
