use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{forward_binop, QuadRat};
use crate::rational::{lcm_of_denominators, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("degree {0} is above the built-in factoring range; supply a factor")]
    NeedOracle(usize),
    #[error("constant polynomials have no prime factor")]
    Constant,
}

/// Dense polynomial over `Q(sqrt 2)`, lowest degree first, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct KPoly {
    coeffs: Vec<QuadRat>,
}

/// Beyond this many candidate values of `t` the cubic search gives up and asks for
/// an oracle factor.
/// Beyond this Cauchy bound floating point can no longer separate the
/// integer candidates, and the caller has to supply a factor.
const MAX_NUMERIC_BOUND: f64 = 1e9;

impl KPoly {
    pub fn new(mut coeffs: Vec<QuadRat>) -> Self {
        while coeffs.last().is_some_and(QuadRat::is_zero) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QuadRat) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(QuadRat::one())
    }

    /// The monomial `c x^k`.
    pub fn term(c: QuadRat, k: usize) -> Self {
        let mut coeffs = vec![QuadRat::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::term(QuadRat::one(), 1)
    }

    pub fn coeffs(&self) -> &[QuadRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at zero; `None` for the zero polynomial.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn constant_term(&self) -> QuadRat {
        self.coeff(0)
    }

    pub fn leading(&self) -> Option<&QuadRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &QuadRat) -> KPoly {
        KPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> KPoly {
        match self.leading() {
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
            None => KPoly::zero(),
        }
    }

    pub fn eval(&self, at: &QuadRat) -> QuadRat {
        self.coeffs
            .iter()
            .rev()
            .fold(QuadRat::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Euclidean division: `self = f q + r` with `deg r < deg f`.
    pub fn divmod(&self, f: &KPoly) -> (KPoly, KPoly) {
        let df = f.degree().expect("division by the zero polynomial");
        let inv = f.coeffs[df].inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QuadRat::zero(); rem.len().saturating_sub(df)];
        while rem.len() > df {
            let k = rem.len() - 1 - df;
            let c = &rem[rem.len() - 1] * &inv;
            for (j, fc) in f.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * fc);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(QuadRat::is_zero) {
                rem.pop();
            }
        }
        (KPoly::new(quot), KPoly::new(rem))
    }

    /// The quotient when `f` divides `self` in `K[x]`.
    pub fn div_exact(&self, f: &KPoly) -> Option<KPoly> {
        if f.is_zero() {
            return None;
        }
        let (q, r) = self.divmod(f);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> KPoly {
        KPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &QuadRat::from_int(k as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &KPoly) -> KPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// A monic irreducible factor for degree at most three, found by
    /// exact root search in `Q(sqrt 2)`. An irreducible input comes back
    /// as its monic associate.
    pub fn prime_factor(&self) -> Result<KPoly, FactorError> {
        let monic = self.monic();
        match self.degree() {
            None | Some(0) => Err(FactorError::Constant),
            Some(1) => Ok(monic),
            Some(2) => {
                let b = monic.coeff(1);
                let c = monic.coeff(0);
                let disc = &(&b * &b) - &(&QuadRat::from_int(4) * &c);
                match disc.sqrt() {
                    Some(s) => {
                        let root = &(&s - &b) / &QuadRat::from_int(2);
                        Ok(linear_factor(&root))
                    }
                    None => Ok(monic),
                }
            }
            Some(3) => match cubic_root(&monic)? {
                Some(root) => Ok(linear_factor(&root)),
                None => Ok(monic),
            },
            Some(d) => Err(FactorError::NeedOracle(d)),
        }
    }

    /// True for irreducible polynomials of degree at most three.
    pub fn is_irreducible(&self) -> Result<bool, FactorError> {
        let factor = self.prime_factor()?;
        Ok(factor.degree() == self.degree())
    }
}

fn linear_factor(root: &QuadRat) -> KPoly {
    KPoly::new(vec![-root, QuadRat::one()])
}

/// Root search for a monic cubic over `Q(sqrt 2)`.
///
/// Scaling by the common denominator `D` gives a monic cubic `g` with
/// coefficients in `Z[sqrt 2]`, the ring of integers of the field, so its
/// roots in the field lie in `Z[sqrt 2]`.
///
/// Repeated roots come out of `gcd(f, f')` exactly. A simple root
/// `s + t sqrt 2` shows up as real roots `s + t sqrt 2` of `g` and
/// `s - t sqrt 2` of its conjugate; both are well conditioned, so locating
/// them in floating point pins `s` and `t` to within one. Every candidate
/// is checked exactly before it is returned.
fn cubic_root(monic: &KPoly) -> Result<Option<QuadRat>, FactorError> {
    if monic.coeff(0).is_zero() {
        return Ok(Some(QuadRat::zero()));
    }
    let common = monic.gcd(&monic.derivative());
    match common.degree() {
        Some(1) => return Ok(Some(-&common.coeff(0))),
        // (y - b)^2 divides a cubic only when b is a triple root
        Some(2) => return Ok(Some(&(-&common.coeff(1)) / &QuadRat::from_int(2))),
        _ => {}
    }

    let scale_int = lcm_of_denominators(monic.coeffs().iter().flat_map(|c| [&c.p, &c.q]));
    let scale = QuadRat::from_rational(Rational::from_integer(scale_int.clone()));
    // g(y) = D^3 f(y / D)
    let g = KPoly::new(
        (0..=3usize)
            .map(|k| {
                let factor = Rational::from_integer(num_traits::pow(scale_int.clone(), 3 - k));
                &monic.coeff(k) * &QuadRat::from_rational(factor)
            })
            .collect(),
    );
    // abs_bound dominates both real embeddings, so one Cauchy bound covers
    // every real root of g and of its conjugate
    let bound = g.coeffs()[..3]
        .iter()
        .map(QuadRat::abs_bound)
        .max()
        .unwrap_or_default()
        + Rational::one();
    let bound = bound.to_f64().unwrap_or(f64::INFINITY);
    if bound > MAX_NUMERIC_BOUND {
        return Err(FactorError::NeedOracle(3));
    }
    let embed = |c: &QuadRat, sign: f64| {
        c.p.to_f64().expect("bounded") + sign * std::f64::consts::SQRT_2 * c.q.to_f64().expect("bounded")
    };
    let roots: Vec<Vec<f64>> = [1.0, -1.0]
        .iter()
        .map(|&sign| {
            let c: Vec<f64> = (0..3).map(|k| embed(&g.coeff(k), sign)).collect();
            real_cubic_roots(c[2], c[1], c[0], bound)
        })
        .collect();
    for r1 in &roots[0] {
        for r2 in &roots[1] {
            let s0 = ((r1 + r2) / 2.0).round() as i64;
            let t0 = ((r1 - r2) / (2.0 * std::f64::consts::SQRT_2)).round() as i64;
            for s in s0 - 1..=s0 + 1 {
                for t in t0 - 1..=t0 + 1 {
                    let beta = QuadRat::new(Rational::from_integer(s.into()), Rational::from_integer(t.into()));
                    if g.eval(&beta).is_zero() {
                        return Ok(Some(&beta / &scale));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Real roots of `y^3 + a y^2 + b y + c`, all of which lie in
/// `[-bound, bound]`, by bisection on the monotone pieces.
fn real_cubic_roots(a: f64, b: f64, c: f64, bound: f64) -> Vec<f64> {
    let f = |y: f64| ((y + a) * y + b) * y + c;
    // critical points solve 3y^2 + 2ay + b = 0
    let disc = a * a - 3.0 * b;
    let mut cuts = vec![-bound];
    if disc > 0.0 {
        let r = disc.sqrt();
        for y in [(-a - r) / 3.0, (-a + r) / 3.0] {
            if y > -bound && y < bound {
                cuts.push(y);
            }
        }
    }
    cuts.push(bound);
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if f(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}

impl Add for &KPoly {
    type Output = KPoly;
    fn add(self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        KPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &KPoly {
    type Output = KPoly;
    fn sub(self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        KPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![QuadRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPoly::new(out)
    }
}

impl Neg for &KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        KPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_binop!(KPoly, Add, add);
forward_binop!(KPoly, Sub, sub);
forward_binop!(KPoly, Mul, mul);

fn coeff_is_simple_negative(c: &QuadRat) -> bool {
    (c.q.is_zero() && c.p.is_negative()) || (c.p.is_zero() && c.q.is_negative())
}

/// Highest degree first: `(1+1r2)*x^2 + 1`, `x - 1/2r2`.
impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = coeff_is_simple_negative(c);
            let shown = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let compound = !shown.p.is_zero() && !shown.q.is_zero();
            let body = if compound {
                format!("({shown})")
            } else {
                shown.to_string()
            };
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if shown != QuadRat::one() {
                        write!(f, "{body}*")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
