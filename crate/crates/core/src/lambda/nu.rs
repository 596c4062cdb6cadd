use rug::{Float, Integer, Rational};

use super::alpha::AlphaSeries;
use crate::combinatorics::ChiRow;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Even Taylor coefficients `ν_2, ν_4, …, ν_{q_max}` of `λ(s)`.
///
/// Odd coefficients are identically zero and not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct NuSeries {
    values: Vec<Float>,
    significance: Vec<f64>,
    truncation_k: usize,
    warnings: Vec<String>,
}

impl NuSeries {
    /// Largest stored even index.
    pub fn q_max(&self) -> usize {
        2 * self.values.len()
    }

    /// `ν_q`; `None` for odd `q`, which is exactly zero.
    pub fn get(&self, q: usize) -> Option<&Float> {
        if q == 0 || q % 2 == 1 || q > self.q_max() {
            return None;
        }
        Some(&self.values[q / 2 - 1])
    }

    /// `ν_{2i+2}` at index `i`.
    pub fn values(&self) -> &[Float] {
        &self.values
    }

    /// Significant digits of `ν_q`, even `q`.
    pub fn significance(&self, q: usize) -> f64 {
        self.significance[q / 2 - 1]
    }

    pub fn significances(&self) -> &[f64] {
        &self.significance
    }

    /// Number of `α_k` used in every sum.
    pub fn truncation_k(&self) -> usize {
        self.truncation_k
    }

    /// Truncation warnings raised while summing.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `(q, ν_q)` over even `q`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Float)> {
        self.values.iter().enumerate().map(|(i, v)| (2 * i + 2, v))
    }
}

/// `ν_q = Σ_k χ_{k,q-1} α_k / ((2k-1)! (k!)²)` for even `q <= q_max`.
///
/// Sums run over all `k <= α.k_max()` in ascending order at the precision of
/// the `α` values. A warning is recorded when the last term is not below
/// the partial sum's error floor.
pub fn nu_coeffs(alphas: &AlphaSeries, chis: &[ChiRow], q_max: usize) -> Result<NuSeries> {
    if q_max < 2 || q_max % 2 == 1 {
        return Err(Error::InvalidArgument(format!("q_max must be even and >= 2, got {q_max}")));
    }
    let k_max = alphas.k_max();
    if chis.len() < k_max || chis.iter().take(k_max).enumerate().any(|(i, c)| c.k() != i + 1) {
        return Err(Error::InvalidArgument(format!("χ rows 1..={k_max} required")));
    }
    let bits = alphas.value(1).prec();
    let denominators: Vec<Integer> = (1..=k_max as u32)
        .map(|k| {
            let f = Integer::from(Integer::factorial(k));
            Integer::from(&f * &f) * Integer::from(Integer::factorial(2 * k - 1))
        })
        .collect();

    let mut values = Vec::new();
    let mut significance = Vec::new();
    let mut warnings = Vec::new();
    for q in (2..=q_max).step_by(2) {
        let mut acc = Float::new(bits);
        let mut error = f64::NEG_INFINITY;
        let mut last = f64::NEG_INFINITY;
        // χ_{k,q-1} vanishes for 2k-1 < q-1
        for k in q / 2..=k_max {
            let coeff = Rational::from((chis[k - 1].get(q - 1), denominators[k - 1].clone()));
            let term = Float::with_val(bits, &coeff) * alphas.value(k);
            last = term.log10_abs();
            error = error.max(last - alphas.significance(k));
            acc += term;
        }
        let size = acc.log10_abs();
        if q / 2 > k_max {
            warnings.push(format!("ν_{q}: no coefficient reaches this order"));
            error = f64::INFINITY;
        } else if last > error {
            warnings.push(format!(
                "ν_{q}: last term 10^{last:.1} is above the error floor 10^{error:.1}"
            ));
            error = last;
        }
        values.push(acc);
        significance.push(size - error);
    }
    if let Some(first) = warnings.first() {
        log::warn!("{} of {} ν coefficients truncated; first: {first}", warnings.len(), values.len());
    }
    Ok(NuSeries {
        values,
        significance,
        truncation_k: k_max,
        warnings,
    })
}
