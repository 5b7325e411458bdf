//! One divisibility interface over the five registered domains.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgElem;
use crate::classic::QuadInt;
use crate::dk::DkElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainId {
    /// `F2[P]`.
    R0,
    /// The subring of `F2[P]` that is GL but not MCD-finite.
    R,
    Z,
    /// `Z[sqrt(-5)]`.
    Z5,
    /// `Z + x Q(sqrt 2)[x]`.
    Dk,
}

impl DomainId {
    pub const ALL: [DomainId; 5] = [DomainId::R0, DomainId::R, DomainId::Z, DomainId::Z5, DomainId::Dk];

    pub fn tag(self) -> &'static str {
        match self {
            DomainId::R0 => "r0",
            DomainId::R => "r",
            DomainId::Z => "z",
            DomainId::Z5 => "z5",
            DomainId::Dk => "dk",
        }
    }
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DomainId {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DomainId::ALL
            .into_iter()
            .find(|d| d.tag() == s)
            .ok_or_else(|| DomainError::UnknownTag(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Capabilities {
    pub has_gcd: bool,
    pub has_mcd_verify: bool,
    pub has_divisor_enumeration: bool,
    pub units_trivial: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DomainHandle {
    pub id: DomainId,
    pub capabilities: Capabilities,
}

impl DomainHandle {
    pub fn new(id: DomainId) -> Self {
        let capabilities = match id {
            DomainId::R0 => Capabilities {
                has_gcd: true,
                has_mcd_verify: true,
                has_divisor_enumeration: false,
                units_trivial: true,
            },
            DomainId::R => Capabilities {
                has_gcd: false,
                has_mcd_verify: true,
                has_divisor_enumeration: false,
                units_trivial: true,
            },
            DomainId::Z => Capabilities {
                has_gcd: true,
                has_mcd_verify: true,
                has_divisor_enumeration: true,
                units_trivial: false,
            },
            DomainId::Z5 => Capabilities {
                has_gcd: false,
                has_mcd_verify: false,
                has_divisor_enumeration: true,
                units_trivial: false,
            },
            DomainId::Dk => Capabilities {
                has_gcd: false,
                has_mcd_verify: false,
                has_divisor_enumeration: false,
                units_trivial: false,
            },
        };
        DomainHandle { id, capabilities }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("unknown domain tag {0:?} (expected r0, r, z, z5 or dk)")]
    UnknownTag(String),
    #[error("element of {found} used where {expected} was expected")]
    Mismatch { expected: DomainId, found: DomainId },
    #[error("{0} is not an element of R")]
    NotInR(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DomainElem {
    R0(AlgElem),
    R(AlgElem),
    Z(BigInt),
    Z5(QuadInt),
    Dk(DkElem),
}

impl DomainElem {
    /// Wraps an algebra element as an element of `R`, checking membership.
    pub fn r(f: AlgElem) -> Result<Self, DomainError> {
        if f.in_r() {
            Ok(DomainElem::R(f))
        } else {
            Err(DomainError::NotInR(f.to_string()))
        }
    }

    pub fn int(n: i64) -> Self {
        DomainElem::Z(BigInt::from(n))
    }

    pub fn domain(&self) -> DomainId {
        match self {
            DomainElem::R0(_) => DomainId::R0,
            DomainElem::R(_) => DomainId::R,
            DomainElem::Z(_) => DomainId::Z,
            DomainElem::Z5(_) => DomainId::Z5,
            DomainElem::Dk(_) => DomainId::Dk,
        }
    }

    pub fn one(id: DomainId) -> Self {
        match id {
            DomainId::R0 => DomainElem::R0(AlgElem::one()),
            DomainId::R => DomainElem::R(AlgElem::one()),
            DomainId::Z => DomainElem::Z(BigInt::one()),
            DomainId::Z5 => DomainElem::Z5(QuadInt::one()),
            DomainId::Dk => DomainElem::Dk(DkElem::from_int(1)),
        }
    }

    pub fn zero(id: DomainId) -> Self {
        match id {
            DomainId::R0 => DomainElem::R0(AlgElem::zero()),
            DomainId::R => DomainElem::R(AlgElem::zero()),
            DomainId::Z => DomainElem::Z(BigInt::zero()),
            DomainId::Z5 => DomainElem::Z5(QuadInt::zero()),
            DomainId::Dk => DomainElem::Dk(DkElem::from_int(0)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DomainElem::R0(f) | DomainElem::R(f) => f.is_zero(),
            DomainElem::Z(n) => n.is_zero(),
            DomainElem::Z5(q) => q.is_zero(),
            DomainElem::Dk(f) => f.is_zero(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            DomainElem::R0(f) | DomainElem::R(f) => f.is_one(),
            DomainElem::Z(n) => n.abs().is_one(),
            DomainElem::Z5(q) => q.is_unit(),
            DomainElem::Dk(f) => f.is_unit(),
        }
    }

    /// The algebra element behind an `R0`/`R` value, if it is a monomial.
    pub fn as_monomial(&self) -> Option<&crate::exponents::ExpVec> {
        match self {
            DomainElem::R0(f) | DomainElem::R(f) => f.as_monomial(),
            _ => None,
        }
    }

    pub fn same_domain(&self, other: &DomainElem) -> Result<(), DomainError> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(DomainError::Mismatch {
                expected: self.domain(),
                found: other.domain(),
            })
        }
    }

    pub fn add(&self, other: &DomainElem) -> Result<DomainElem, DomainError> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (DomainElem::R0(a), DomainElem::R0(b)) => DomainElem::R0(a + b),
            (DomainElem::R(a), DomainElem::R(b)) => DomainElem::R(a + b),
            (DomainElem::Z(a), DomainElem::Z(b)) => DomainElem::Z(a + b),
            (DomainElem::Z5(a), DomainElem::Z5(b)) => DomainElem::Z5(a + b),
            (DomainElem::Dk(a), DomainElem::Dk(b)) => DomainElem::Dk(
                DkElem::new(a.poly() + b.poly()).expect("integer constant terms add to one"),
            ),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &DomainElem) -> Result<DomainElem, DomainError> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (DomainElem::R0(a), DomainElem::R0(b)) => DomainElem::R0(a * b),
            (DomainElem::R(a), DomainElem::R(b)) => DomainElem::R(a * b),
            (DomainElem::Z(a), DomainElem::Z(b)) => DomainElem::Z(a * b),
            (DomainElem::Z5(a), DomainElem::Z5(b)) => DomainElem::Z5(a * b),
            (DomainElem::Dk(a), DomainElem::Dk(b)) => DomainElem::Dk(a.mul(b)),
            _ => unreachable!(),
        })
    }

    /// `other / self` when `self` divides `other` in the domain.
    pub fn divides(&self, other: &DomainElem) -> Result<Option<DomainElem>, DomainError> {
        self.same_domain(other)?;
        Ok(match (self, other) {
            (DomainElem::R0(a), DomainElem::R0(b)) => b.exact_div(a).ok().map(DomainElem::R0),
            (DomainElem::R(a), DomainElem::R(b)) => b
                .exact_div(a)
                .ok()
                .filter(AlgElem::in_r)
                .map(DomainElem::R),
            (DomainElem::Z(a), DomainElem::Z(b)) => {
                if a.is_zero() {
                    None
                } else {
                    let (q, r) = b.div_rem(a);
                    r.is_zero().then_some(DomainElem::Z(q))
                }
            }
            (DomainElem::Z5(a), DomainElem::Z5(b)) => b.div_exact(a).map(DomainElem::Z5),
            (DomainElem::Dk(a), DomainElem::Dk(b)) => a.divides(b).ok().map(DomainElem::Dk),
            _ => unreachable!(),
        })
    }
}

impl fmt::Display for DomainElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainElem::R0(a) | DomainElem::R(a) => a.fmt(f),
            DomainElem::Z(n) => n.fmt(f),
            DomainElem::Z5(q) => q.fmt(f),
            DomainElem::Dk(p) => p.fmt(f),
        }
    }
}
