//! Arbitrary-precision `ζ(s)`, `ln Γ(s)` and `f(s) = ln ξ(s)`.
//!
//! The kernels are generic over [`Analytic`] scalars and take a target
//! precision in decimal digits; the `BigReal`/`BigComplex` wrappers bind
//! them to a [`PrecisionContext`].

mod euler;
mod gamma;
mod xi;
mod zeta;

use rug::Rational;

pub use euler::{euler_gamma, euler_gamma_brent_mcmillan};
pub use gamma::{log_gamma, log_gamma_with};
pub use xi::{xi_log, xi_log_real, xi_log_with};
pub use zeta::{zeta_em, zeta_em_with, EulerMaclaurinParams};

use crate::mp::{bernoulli_numbers, PrecisionContext};
use crate::scalar::Analytic;
use crate::Result;

/// Bernoulli numbers shared by repeated special-function evaluations.
#[derive(Clone, Debug)]
pub struct SpecialTables {
    /// `B_{2m}`, `m = 0..`.
    bernoulli: Vec<Rational>,
}

impl SpecialTables {
    /// Tables sufficient for `digits` of precision with `|Im s| <= max_im`.
    pub fn new(digits: u32, max_im: f64) -> Self {
        let params = EulerMaclaurinParams::for_digits(digits, max_im);
        let count = params.corrections + EulerMaclaurinParams::VALIDATION_EXTRA_M + 2;
        Self {
            bernoulli: bernoulli_numbers(count),
        }
    }

    pub fn for_context(ctx: &PrecisionContext, max_im: f64) -> Self {
        Self::new(ctx.total_digits(), max_im)
    }

    /// Extended copy when a request outgrows the table.
    pub(crate) fn covering(&self, count: usize) -> std::borrow::Cow<'_, [Rational]> {
        if count < self.bernoulli.len() {
            std::borrow::Cow::Borrowed(&self.bernoulli)
        } else {
            std::borrow::Cow::Owned(bernoulli_numbers(count + 1))
        }
    }

    /// `ζ(s)` with the validating dual-parameter Euler–Maclaurin sum.
    pub fn zeta<T: Analytic>(&self, s: &T, digits: u32, check_digits: u32) -> Result<T> {
        zeta_em_with(s, digits, check_digits, self)
    }

    pub fn log_gamma<T: Analytic>(&self, s: &T, digits: u32) -> Result<T> {
        log_gamma_with(s, digits, self)
    }

    pub fn xi_log<T: Analytic>(&self, s: &T, digits: u32, check_digits: u32) -> Result<T> {
        xi_log_with(s, digits, check_digits, self)
    }
}
