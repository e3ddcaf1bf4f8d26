//! Exact computational toolkit for higher-order G-structures.
//!
//! The crate makes the group-theoretic machinery of volumes, conformal
//! structures, metrics, connections and projective structures computable at
//! points of polynomial charts:
//!
//! - second-order jet-group arithmetic (`jet`): the semidirect product
//!   G¹ₙ ⋉ S²ₙ, subgroup membership, and the SL±·CO factorization;
//! - Lie algebra prolongations and finite-type classification (`prolong`),
//!   with a registry of the classical algebras;
//! - pointwise pseudo-Riemannian structure algebra (`structures`): exact
//!   signatures and the metric ↔ (conformal class, volume) factorization;
//! - connection-level operations on polynomial charts (`connection`):
//!   Levi-Civita, projective shifts, equiaffine selection, Weyl
//!   compatibility, and the conformal–projective intersection solver.
//!
//! All arithmetic upstream of n-th roots is exact over arbitrary-precision
//! rationals; roots fall back to `f64` with a 1e-12 tolerance unless they
//! are perfect powers, in which case they stay exact. The linear-algebra
//! substrate is generic over the scalar type ([`scalar::Scalar`]); the
//! aliases below fix the rational instantiation used throughout.

pub mod connection;
pub mod error;
pub mod jet;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod prolong;
pub mod sample;
pub mod scalar;
pub mod structures;
pub mod sym2;

pub use error::{Error, Result};
pub use scalar::{Rat, RootScalar, Scalar};

/// Dense matrix over the exact rational field.
pub type RatMatrix = matrix::Matrix<Rat>;
/// Symmetric bilinear map with exact rational coefficients.
pub type RatSym2 = sym2::Sym2Tensor<Rat>;
/// Multivariate polynomial with exact rational coefficients.
pub type RatPoly = poly::Polynomial<Rat>;
/// Float matrix used on the root-bearing legs.
pub type FloatMatrix = matrix::Matrix<f64>;
