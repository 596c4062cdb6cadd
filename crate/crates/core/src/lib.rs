//! High-precision Keiper–Li coefficients `λ_n`, their entire extension
//! `λ(s)`, and the complex zeros of that extension.
//!
//! The pipeline runs in stages:
//!
//! 1. [`nodes`] tabulates `f(s) = ln ξ(s)` at the nodes `j/(j+1)`;
//! 2. [`lambda::solve_alphas`] turns the table into interpolation
//!    coefficients `α_k` using the exact [`combinatorics::CMatrix`];
//! 3. [`lambda::LambdaEvaluator`] sums `λ(s) = Σ β_k(s) α_k` for complex `s`;
//! 4. [`zeros`] locates zeros of `λ(s)` by Newton iteration;
//! 5. [`analysis`] holds the empirical studies on tabulated zeros.
//!
//! Exact objects use [`BigInteger`]/[`BigRational`]; approximate ones use
//! [`BigReal`]/[`BigComplex`] at a [`PrecisionContext`]. Kernels that only
//! need field arithmetic are generic over [`Field`] and also run on `f64`.

pub mod analysis;
pub mod combinatorics;
pub mod error;
pub mod lambda;
pub mod mp;
pub mod nodes;
pub mod scalar;
pub mod special;
pub mod table;
pub mod zeros;

pub use error::{Error, Result};
pub use mp::{make_context, PrecisionContext};
pub use scalar::{Analytic, Field};

/// Arbitrary-precision real.
pub type BigReal = rug::Float;
/// Arbitrary-precision complex.
pub type BigComplex = rug::Complex;
/// Exact rational, always canonical.
pub type BigRational = rug::Rational;
/// Exact integer.
pub type BigInteger = rug::Integer;
/// Machine complex, for quick checks and plotting paths.
pub type Complex64 = num_complex::Complex<f64>;
