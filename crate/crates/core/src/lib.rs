//! A signature-generic Clifford (geometric) algebra engine over exact
//! scalars.
//!
//! Two independent product engines back the geometric product: a term
//! rewriting engine that reduces tensor words modulo the Clifford relation
//! and works for any symmetric bilinear matrix, and a fast bit-set blade
//! engine for diagonal metrics. The two are kept in exhaustive agreement by
//! the test suite, so the rewriting engine doubles as the ground truth for
//! everything else: involutions, the Z₂ grading, versors, the alternating
//! wedge, and the concrete model algebras (ℂ, ℍ, conformal, projective).
//!
//! Scalars default to arbitrary-precision rationals ([`Rational`]); the
//! core types are generic over any commutative [`Ring`] with decidable
//! equality, and operations that divide require a [`Field`].

pub mod blade;
pub mod error;
pub mod expr;
pub mod fast;
pub mod form;
pub mod models;
pub mod multivector;
pub mod quotient;
pub mod scalar;
pub mod structure;
pub mod testutil;
pub mod vector;

pub use blade::Blade;
pub use error::{Error, Result};
pub use fast::{
    geometric_product, geometric_product_with, left_contraction, wedge_product, Engine,
};
pub use form::{QuadraticForm, Signature};
pub use multivector::Multivector;
pub use quotient::{confluence_probe, normalize, product_general, tensor_mul, TensorElement};
pub use scalar::{rat, Field, Rational, Ring, SignedRing};
pub use structure::{iota_wedge, lift, random_multivector, Lift, LiftError, TargetAlgebra, Versor};
pub use vector::Vector;
