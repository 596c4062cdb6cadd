//! Empirical studies: high-order finite differences of zero sequences, the
//! logarithmic law for `Im σ_k`, and a simulator for `λ_n` when one zeta
//! zero leaves the critical line.

mod diff;
mod fit;
mod rhsim;
mod zetazeros;

pub use diff::{binomial_weights, finite_difference, rms_log10, stride, DiffSeries, Normalization};
pub use fit::{fit_log_factor, perturb_zeros, rescale_for_plot, LOG_LAW_FACTOR, MIN_FIT_POINTS};
pub use rhsim::{lambda_sum_zeros_range, rh_first_negative, SCAN_BLOCK};
pub use zetazeros::{ZetaZeroList, GAMMA_TXT};
