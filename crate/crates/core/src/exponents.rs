//! Exponent vectors of the product monoid `P = prod_{i >= 1} Q_{>=0}`.
//!
//! Only eventually-constant sequences are representable. A vector carries
//! the exponents of `X`, `Y`, `Z`, a tail value `u` shared by every `T_i`
//! (printed as the bulk variable `U = T_1 T_2 T_3 ...`) and a finite map of
//! deviations `e_i`, so that the exponent of `T_i` is `u + e_i`.
//!
//! Zero deviations are never stored, which makes structural equality the
//! same as equality in `P`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{fmt_exponent, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpError {
    #[error("exponent of {0} is negative")]
    Negative(String),
    #[error("T indices start at 1")]
    ZeroIndex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVec {
    x: Rational,
    y: Rational,
    z: Rational,
    u: Rational,
    exc: BTreeMap<u32, Rational>,
}

impl Default for ExpVec {
    fn default() -> Self {
        Self::zero()
    }
}

impl ExpVec {
    /// The identity of `P`, i.e. the monomial `1`.
    pub fn zero() -> Self {
        ExpVec {
            x: Rational::zero(),
            y: Rational::zero(),
            z: Rational::zero(),
            u: Rational::zero(),
            exc: BTreeMap::new(),
        }
    }

    /// Builds a vector from raw parts, validating nonnegativity of every
    /// coordinate and dropping zero deviations.
    pub fn new(
        x: Rational,
        y: Rational,
        z: Rational,
        u: Rational,
        deviations: impl IntoIterator<Item = (u32, Rational)>,
    ) -> Result<Self, ExpError> {
        let mut exc = BTreeMap::new();
        for (i, e) in deviations {
            if i == 0 {
                return Err(ExpError::ZeroIndex);
            }
            let slot = exc.entry(i).or_insert_with(Rational::zero);
            *slot += e;
        }
        exc.retain(|_, e| !e.is_zero());
        let v = ExpVec { x, y, z, u, exc };
        v.validate()?;
        Ok(v)
    }

    fn validate(&self) -> Result<(), ExpError> {
        for (name, val) in [("X", &self.x), ("Y", &self.y), ("Z", &self.z), ("U", &self.u)] {
            if val.is_negative() {
                return Err(ExpError::Negative(name.to_string()));
            }
        }
        for (i, e) in &self.exc {
            if (&self.u + e).is_negative() {
                return Err(ExpError::Negative(format!("T[{i}]")));
            }
        }
        Ok(())
    }

    pub fn x_pow(q: Rational) -> Self {
        Self::new(q, Rational::zero(), Rational::zero(), Rational::zero(), [])
            .expect("nonnegative X exponent")
    }

    pub fn y_pow(q: Rational) -> Self {
        Self::new(Rational::zero(), q, Rational::zero(), Rational::zero(), [])
            .expect("nonnegative Y exponent")
    }

    pub fn z_pow(q: Rational) -> Self {
        Self::new(Rational::zero(), Rational::zero(), q, Rational::zero(), [])
            .expect("nonnegative Z exponent")
    }

    /// `T_i^q`.
    pub fn t_pow(i: u32, q: Rational) -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            [(i, q)],
        )
        .expect("nonnegative T exponent")
    }

    /// `U^q = (T_1 T_2 T_3 ...)^q`.
    pub fn bulk(q: Rational) -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), q, [])
            .expect("nonnegative bulk exponent")
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn z(&self) -> &Rational {
        &self.z
    }

    /// The eventual exponent shared by all but finitely many `T_i`.
    pub fn tail(&self) -> &Rational {
        &self.u
    }

    pub fn deviations(&self) -> &BTreeMap<u32, Rational> {
        &self.exc
    }

    /// Exponent of `T_i`.
    pub fn t_exp(&self, i: u32) -> Rational {
        match self.exc.get(&i) {
            Some(e) => &self.u + e,
            None => self.u.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero() && self.t_part_is_zero()
    }

    /// True when some `X`, `Y` or `Z` exponent is positive.
    pub fn has_xyz(&self) -> bool {
        self.x.is_positive() || self.y.is_positive() || self.z.is_positive()
    }

    pub fn t_part_is_zero(&self) -> bool {
        self.u.is_zero() && self.exc.is_empty()
    }

    /// The same vector with its `T`-part removed.
    pub fn xyz_part(&self) -> ExpVec {
        ExpVec {
            x: self.x.clone(),
            y: self.y.clone(),
            z: self.z.clone(),
            u: Rational::zero(),
            exc: BTreeMap::new(),
        }
    }

    fn indices<'a>(&'a self, other: &'a ExpVec) -> impl Iterator<Item = u32> + 'a {
        let mut keys: Vec<u32> = self.exc.keys().chain(other.exc.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
    }

    /// Returns `w` with `other + w = self`, or `None` when some coordinate
    /// of the difference would be negative.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        let x = &self.x - &other.x;
        let y = &self.y - &other.y;
        let z = &self.z - &other.z;
        let u = &self.u - &other.u;
        if x.is_negative() || y.is_negative() || z.is_negative() || u.is_negative() {
            return None;
        }
        let mut exc = BTreeMap::new();
        for i in self.indices(other) {
            let a = self.exc.get(&i).cloned().unwrap_or_default();
            let b = other.exc.get(&i).cloned().unwrap_or_default();
            let e = a - b;
            if (&u + &e).is_negative() {
                return None;
            }
            if !e.is_zero() {
                exc.insert(i, e);
            }
        }
        Some(ExpVec { x, y, z, u, exc })
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        other.checked_sub(self).is_some()
    }

    /// Componentwise minimum; this is the gcd in `P`.
    pub fn componentwise_min(&self, other: &ExpVec) -> ExpVec {
        let u = (&self.u).min(&other.u).clone();
        let mut exc = BTreeMap::new();
        for i in self.indices(other) {
            let a = self.t_exp(i);
            let b = other.t_exp(i);
            let e = a.min(b) - &u;
            if !e.is_zero() {
                exc.insert(i, e);
            }
        }
        ExpVec {
            x: (&self.x).min(&other.x).clone(),
            y: (&self.y).min(&other.y).clone(),
            z: (&self.z).min(&other.z).clone(),
            u,
            exc,
        }
    }

    /// Divides every coordinate by `n`.
    pub fn div_scalar(&self, n: u32) -> ExpVec {
        assert!(n >= 1, "scalar division by zero");
        let n = Rational::from_integer(BigInt::from(n));
        ExpVec {
            x: &self.x / &n,
            y: &self.y / &n,
            z: &self.z / &n,
            u: &self.u / &n,
            exc: self.exc.iter().map(|(i, e)| (*i, e / &n)).collect(),
        }
    }

    pub fn mul_scalar(&self, n: u32) -> ExpVec {
        let n = Rational::from_integer(BigInt::from(n));
        let mut exc: BTreeMap<u32, Rational> =
            self.exc.iter().map(|(i, e)| (*i, e * &n)).collect();
        exc.retain(|_, e| !e.is_zero());
        ExpVec {
            x: &self.x * &n,
            y: &self.y * &n,
            z: &self.z * &n,
            u: &self.u * &n,
            exc,
        }
    }

    /// Classifies the vector against the monomial monoid `Q_R` of the
    /// subring `R`: a monomial lies in `R` iff its `T`-part is trivial or
    /// it involves `X`, `Y` or `Z`.
    pub fn q_membership(&self) -> QMembership {
        classify(self.has_xyz(), self.t_part_is_zero())
    }

    pub fn in_qr(&self) -> bool {
        self.q_membership().verdict.is_member()
    }

    /// Denominators appearing anywhere in the vector.
    pub fn denominators(&self) -> impl Iterator<Item = &BigInt> {
        [&self.x, &self.y, &self.z, &self.u]
            .into_iter()
            .chain(self.exc.values())
            .map(|q| q.denom())
    }
}

fn classify(has_xyz: bool, t_zero: bool) -> QMembership {
    let (verdict, explanation) = match (has_xyz, t_zero) {
        (_, true) => (
            QVerdict::InQPureXyz,
            "monomial in X, Y, Z only".to_string(),
        ),
        (true, false) => (
            QVerdict::InQMixed,
            "T-part carried by a positive X, Y or Z exponent".to_string(),
        ),
        (false, false) => (
            QVerdict::NotInQPureT,
            "nontrivial T-part without any X, Y or Z factor".to_string(),
        ),
    };
    QMembership {
        verdict,
        explanation,
    }
}

/// Membership verdict for raw exponent data that may not even be a valid
/// element of `P`.
pub fn classify_raw(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    u: &Rational,
    deviations: &BTreeMap<u32, Rational>,
) -> QMembership {
    let negative = [x, y, z, u].iter().any(|q| q.is_negative())
        || deviations.values().any(|e| (u + e).is_negative());
    if negative {
        return QMembership {
            verdict: QVerdict::NotInQNegative,
            explanation: "some coordinate is negative".to_string(),
        };
    }
    let has_xyz = x.is_positive() || y.is_positive() || z.is_positive();
    let t_zero = u.is_zero() && deviations.values().all(|e| e.is_zero());
    classify(has_xyz, t_zero)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QVerdict {
    InQPureXyz,
    InQMixed,
    NotInQPureT,
    NotInQNegative,
}

impl QVerdict {
    pub fn is_member(self) -> bool {
        matches!(self, QVerdict::InQPureXyz | QVerdict::InQMixed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMembership {
    pub verdict: QVerdict,
    pub explanation: String,
}

impl Add for &ExpVec {
    type Output = ExpVec;

    fn add(self, rhs: &ExpVec) -> ExpVec {
        let mut exc = self.exc.clone();
        for (i, e) in &rhs.exc {
            let slot = exc.entry(*i).or_insert_with(Rational::zero);
            *slot += e;
        }
        exc.retain(|_, e| !e.is_zero());
        ExpVec {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            z: &self.z + &rhs.z,
            u: &self.u + &rhs.u,
            exc,
        }
    }
}

impl Add for ExpVec {
    type Output = ExpVec;

    fn add(self, rhs: ExpVec) -> ExpVec {
        &self + &rhs
    }
}

/// Lexicographic on `(x, y, z, u, e_1, e_2, ...)`, a missing deviation
/// counting as zero. The order is translation invariant, so it serves as
/// the monomial order for exact division.
impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x
            .cmp(&other.x)
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.u.cmp(&other.u))
            .then_with(|| {
                let zero = Rational::zero();
                for i in self.indices(other) {
                    let a = self.exc.get(&i).unwrap_or(&zero);
                    let b = other.exc.get(&i).unwrap_or(&zero);
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: String, q: &Rational| {
            if q.is_zero() {
                return;
            }
            if q == &Rational::from_integer(1.into()) {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{}", fmt_exponent(q)));
            }
        };
        push("X".into(), &self.x);
        push("Y".into(), &self.y);
        push("Z".into(), &self.z);
        push("U".into(), &self.u);
        for (i, e) in &self.exc {
            push(format!("T[{i}]"), e);
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// The named vectors of the non-MCD-finite witness.
pub mod named {
    use super::*;
    use crate::rational::int;

    /// `s_y = X Y U`.
    pub fn s_y() -> ExpVec {
        ExpVec::new(int(1), int(1), int(0), int(1), []).unwrap()
    }

    /// `s_z = X Z U`.
    pub fn s_z() -> ExpVec {
        ExpVec::new(int(1), int(0), int(1), int(1), []).unwrap()
    }

    /// `b_i = X U / T_i`.
    pub fn b(i: u32) -> ExpVec {
        ExpVec::new(int(1), int(0), int(0), int(1), [(i, int(-1))]).unwrap()
    }

    /// `Y T_i`.
    pub fn y_t(i: u32) -> ExpVec {
        ExpVec::new(int(0), int(1), int(0), int(0), [(i, int(1))]).unwrap()
    }

    /// `Z T_i`.
    pub fn z_t(i: u32) -> ExpVec {
        ExpVec::new(int(0), int(0), int(1), int(0), [(i, int(1))]).unwrap()
    }
}
