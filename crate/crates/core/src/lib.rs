//! Exact divisibility theory for a handful of computable integral domains.
//!
//! The crate models five domains behind one divisibility interface:
//!
//! * `R0 = F2[P]`, the monoid algebra over the product monoid `P` of
//!   nonnegative rationals (restricted to eventually-constant exponent
//!   vectors), and its subring `R` generated by `X^a, Y^a, Z^a` and
//!   `X^a T, Y^a T, Z^a T` (`a > 0`, `T` a pure `T`-monomial);
//! * the integers and `Z[sqrt(-5)]`;
//! * `Z + x Q(sqrt 2)[x]`.
//!
//! On top of the arithmetic it offers primitivity and Gauss-lemma checks,
//! prime-like witnesses, primal decompositions, and scripted witness runs
//! showing that `R` is an antimatter GL-domain that is not MCD-finite, so
//! `R[x]` loses the IDF property.

pub mod algebra;
pub mod classic;
pub mod cli;
pub mod dk;
pub mod domain;
pub mod exponents;
pub mod fuzz;
pub mod parse;
pub mod predicates;
pub mod rational;
pub mod witness;

pub use algebra::AlgElem;
pub use classic::{KPoly, QuadInt, QuadRat};
pub use dk::DkElem;
pub use domain::{DomainElem, DomainHandle, DomainId};
pub use exponents::ExpVec;
pub use rational::Rational;
