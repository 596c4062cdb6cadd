use rayon::prelude::*;
use rug::Float;

use crate::combinatorics::{omega_eval, CMatrix};
use crate::error::{Error, Result};
use crate::mp::{digits_to_bits, PrecisionContext};
use crate::nodes::NodeValueTable;
use crate::scalar::Field;

/// Digits removed from the node table for the significance rerun.
pub const SIGNIFICANCE_OFFSET_DIGITS: u32 = 50;

/// Below this many significant digits in `α_1` the run is rejected.
pub const MIN_ALPHA1_DIGITS: f64 = 10.0;

/// Interpolation coefficients `α_k` with per-entry significance.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaSeries {
    values: Vec<Float>,
    significance: Vec<f64>,
    source_digits: u32,
}

impl AlphaSeries {
    /// Builds a series from raw parts, monotonizing the significance and
    /// dropping the tail from the first entry without significant digits.
    pub fn from_parts(values: Vec<Float>, significance: Vec<f64>, source_digits: u32) -> Result<Self> {
        if values.len() != significance.len() {
            return Err(Error::InvalidArgument("one significance per coefficient required".into()));
        }
        let mut sig = Vec::with_capacity(significance.len());
        let mut floor = f64::INFINITY;
        for s in significance {
            floor = floor.min(s);
            if floor <= 0.0 {
                break;
            }
            sig.push(floor);
        }
        let mut values = values;
        values.truncate(sig.len());
        if values.is_empty() {
            return Err(Error::InsufficientPrecision("no coefficient has significant digits".into()));
        }
        Ok(Self {
            values,
            significance: sig,
            source_digits,
        })
    }

    pub fn k_max(&self) -> usize {
        self.values.len()
    }

    /// `α_k`, 1-based.
    pub fn value(&self, k: usize) -> &Float {
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[Float] {
        &self.values
    }

    /// Estimated significant decimal digits of `α_k`, nonincreasing in `k`.
    pub fn significance(&self, k: usize) -> f64 {
        self.significance[k - 1]
    }

    pub fn significances(&self) -> &[f64] {
        &self.significance
    }

    pub fn source_digits(&self) -> u32 {
        self.source_digits
    }

    /// The first `k_max` coefficients.
    pub fn truncated(&self, k_max: usize) -> Self {
        let k = k_max.min(self.k_max());
        Self {
            values: self.values[..k].to_vec(),
            significance: self.significance[..k].to_vec(),
            source_digits: self.source_digits,
        }
    }
}

fn combine(table: &NodeValueTable, cmat: &CMatrix, bits: u32) -> Vec<Float> {
    (1..=cmat.k_max())
        .into_par_iter()
        .map(|k| {
            let mut acc = Float::new(bits);
            for (j, c) in cmat.row(k).iter().enumerate() {
                acc += Float::with_val(bits, c) * table.value(j + 1);
            }
            acc
        })
        .collect()
}

/// `α_k = Σ_{j<=k} c_kj f(j/(j+1))` for `k = 1..=cmat.k_max()`.
///
/// The sums run at the context's internal precision. Significance is the
/// number of digits on which this run agrees with a rerun from the node
/// table rounded to `digits - 50`, so it understates the accuracy of the
/// reported values.
pub fn solve_alphas(table: &NodeValueTable, cmat: &CMatrix, ctx: &PrecisionContext) -> Result<AlphaSeries> {
    if table.count() < cmat.k_max() {
        return Err(Error::InvalidArgument(format!(
            "node table has {} entries but the c-matrix needs {}",
            table.count(),
            cmat.k_max()
        )));
    }
    let (table, _) = table.coerce_to(ctx)?;
    let primary = combine(&table, cmat, ctx.bits());

    let low_digits = table.digits().saturating_sub(SIGNIFICANCE_OFFSET_DIGITS).max(10);
    let low_table = table.rounded_to(low_digits);
    let secondary = combine(&low_table, cmat, digits_to_bits(low_digits + ctx.guard_digits()));

    let cap = f64::from(table.digits());
    let significance: Vec<f64> = primary
        .iter()
        .zip(&secondary)
        .map(|(a, b)| {
            let diff = Float::with_val(ctx.bits(), a - b);
            (a.log10_abs() - diff.log10_abs()).min(cap)
        })
        .collect();
    if significance[0] < MIN_ALPHA1_DIGITS {
        return Err(Error::InsufficientPrecision(format!(
            "α_1 has only {:.1} significant digits",
            significance[0]
        )));
    }
    let values = primary.iter().map(|a| ctx.report(a)).collect();
    AlphaSeries::from_parts(values, significance, table.digits())
}

/// `F_m(s) = Σ_{k=1..m} (-1)^k α_k ω_k(s)`.
pub fn interpolant_eval(alphas: &AlphaSeries, m: usize, s: &Float) -> Result<Float> {
    if m > alphas.k_max() {
        return Err(Error::InvalidArgument(format!(
            "interpolant order {m} exceeds the {} available coefficients",
            alphas.k_max()
        )));
    }
    let mut acc = Float::new(s.prec());
    for k in 1..=m {
        let term = omega_eval(k, s) * alphas.value(k);
        if k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}
