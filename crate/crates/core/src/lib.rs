//! Exact computations for (2,3,5)-distributions as parabolic geometries of
//! type (G₂, P₁), carried out over exact scalars.
//!
//! The algebra is generic over the coefficient ring; the aliases below fix
//! the common choices.

pub mod automorphism;
pub mod dictionary;
pub mod field;
pub mod g2;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod models;
pub mod parabolic;
pub mod poly;
pub mod prolongation;
pub mod real_forms;
pub mod report;
pub mod rolling;
pub mod scalar;

pub use field::{rat, Conjugate, Field, Rational, Ring};
pub use g2::{BasisLabel, G2Element};
pub use poly::ParamPoly;
pub use scalar::{Scalar, ScalarError};

/// Elements of 𝔤 over exact scalars.
pub type G2 = G2Element<Scalar>;
/// Elements of 𝔤 over ℚ.
pub type RationalG2 = G2Element<Rational>;
/// Elements of 𝔤 whose coefficients depend polynomially on a model parameter.
pub type FormalG2 = G2Element<ParamPoly>;
