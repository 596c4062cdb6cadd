//! Interpolation coefficients `α_k`, the Taylor coefficients `ν_q` and the
//! evaluation of `λ(s)`, with two independent oracles for `λ_n`.

mod alpha;
mod csv;
mod evaluator;
mod nu;
mod oracle;
mod series;

pub use alpha::{
    interpolant_eval, solve_alphas, AlphaSeries, MIN_ALPHA1_DIGITS, SIGNIFICANCE_OFFSET_DIGITS,
};
pub use csv::{alpha_table, lambda_table, nu_table};
pub use evaluator::{lambda1_closed, LambdaEvaluator, LambdaValue, LambdaWithDerivative};
pub use nu::{nu_coeffs, NuSeries};
pub use oracle::{lambda_cauchy_oracle, lambda_sum_zeros, Deviation, MAX_CONTOUR_RADIUS};
pub use series::{STOP_MARGIN, STOP_RUN};

pub(crate) use oracle::{contribution, power_bases, zero_bases, Base};
