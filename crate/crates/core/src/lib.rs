//! Exact computations with eigencones and tensor cones of semisimple groups.
//!
//! The tensor cone `Gamma(s, G)` consists of the `s`-tuples of dominant
//! weights `(lambda_1, ..., lambda_s)` such that some multiple `N lambda`
//! has a nonzero `G`-invariant in `V_{N lambda_1} (x) ... (x) V_{N lambda_s}`.
//! This crate enumerates its regular facets through deformed Schubert
//! calculus, produces the extremal rays of each face from Schubert
//! intersection numbers and from induction from the Levi subgroup, and checks
//! everything against a double description engine and a tensor-invariant
//! oracle.

pub mod cone;
pub mod error;
pub mod faces;
pub mod golden;
pub mod linalg;
pub mod oracle;
pub mod rays;
pub mod reproduce;
pub mod rootdata;
pub mod scalar;
pub mod schubert;
pub mod symmetry;
pub mod system;
pub mod tuple;
pub mod weyl;

pub use error::{Error, Result};

/// Exact rational scalar used for weights throughout.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer used by the cone engine.
pub type Int = num_bigint::BigInt;
pub type QWeight = rootdata::Weight<Rational>;
pub type QCoweight = rootdata::Coweight<Rational>;
pub type IntHRep = cone::HRep<Int>;
pub type IntRay = cone::Ray<Int>;
