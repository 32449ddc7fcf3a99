//! Pseudospectral laboratory for the k-generalized Zakharov–Kuznetsov equation
//! ∂ₜu + ∂ₓΔu = ±∂ₓ(u^{k+1}) on ℝ×𝕋_λ, approximated by a long periodic box in x.
//!
//! Numerics are generic over [`Scalar`] (f32/f64); the aliases at the bottom fix f64.
//! Closed-form exponents are generic over [`scalar::Exact`] and default to exact rationals.

// `!(x > 0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// by-value `add`/`sub` on fields are chaining helpers, not operator impls
#![allow(clippy::should_implement_trait)]

pub mod dynamics;
pub mod error;
pub mod estimates;
pub mod growth;
pub mod imethod;
pub mod invariants;
pub mod numerics;
pub mod scalar;
pub mod spectral;

pub use error::{GzkError, Result};
pub use scalar::{Exact, Scalar};

pub type Grid = spectral::GridSpec<f64>;
pub type Field = spectral::RealField<f64>;
pub type Spectrum = spectral::SpectralField<f64>;
pub type Rational = num_rational::Ratio<i64>;
