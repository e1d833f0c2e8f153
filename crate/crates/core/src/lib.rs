//! Exact computations with commuting involutions of classical Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: dense matrices, subspaces and polynomials over any [`Scalar`];
//!   rationals use fraction-free elimination.
//! * [`lie`]: `gl`, `sl`, `so`, `sp` in matrix form, centralizers, nilpotents
//!   of a given Jordan type.
//! * [`gradings`]: involutions, Z2 and Z2xZ2 gradings and a catalog of
//!   concrete decompositions.
//! * [`partitions`]: closed centralizer-dimension formulas and sweeps.
//! * [`commvar`]: Cartan subspaces, restricted roots, standard components and
//!   lower bounds for commuting varieties.
//! * [`jordan`]: Jordan algebras, short gradings and Jordan triads.
//!
//! Everything is generic over [`Scalar`]; the aliases below fix the exact
//! rational instantiation used by the checks.

pub mod commvar;
pub mod error;
pub mod gradings;
pub mod jordan;
pub mod lie;
pub mod linalg;
pub mod partitions;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
pub type QMatrix = linalg::Matrix<Rational>;
pub type QSubspace = linalg::Subspace<Rational>;
pub type QAlgebra = lie::LieAlgebra<Rational>;
pub type QDecomposition = gradings::Quaternionic<Rational>;
pub type QJordan = jordan::JordanAlgebra<Rational>;

/// Double-precision instantiation, for quick exploratory runs.
pub type FMatrix = linalg::Matrix<f64>;
