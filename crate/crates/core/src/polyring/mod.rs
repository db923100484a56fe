//! Sparse multivariate polynomials over an abstract coefficient ring,
//! graded reverse lexicographic order, and basic reduction.

pub mod monomial;
pub mod poly;
pub mod reduce;
pub mod ring;

pub use monomial::{Monomial, MonomialError, MAX_VARS};
pub use poly::Polynomial;
pub use reduce::{interreduce, normal_form, normal_form_traced, ReductionStep};
pub use ring::{Field, IntegerRing, RationalField, Ring};
