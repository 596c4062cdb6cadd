//! Exact integer and rational objects behind the interpolation scheme.
//!
//! Everything here is built without floating point; conversion to
//! [`BigReal`](crate::BigReal) happens only when coefficients meet the
//! tabulated node values.

mod beta;
mod cmatrix;
mod dump;
mod omega;
mod stirling;

pub use beta::{
    beta_direct, beta_poly, binomial_poly, chi_coeffs, chi_coeffs_fast, chi_rows, BetaPolynomial, ChiRow,
};
pub use cmatrix::{c_coeff, omega_system_inverse, CMatrix};
pub use dump::dump_json;
pub use omega::{eta_eval, omega_eval};
pub use stirling::{stirling_triangle, StirlingTriangle};
