use rug::Integer;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalization {
    #[default]
    None,
    /// Divide by `2^m`.
    PowerOfTwo,
}

/// `Δ^m` of a sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffSeries<F> {
    pub order: usize,
    pub values: Vec<F>,
    pub normalization: Normalization,
}

/// Signed weights `(-1)^r C(m, r)`, `r = 0..=m`.
pub fn binomial_weights(m: usize) -> Vec<Integer> {
    let mut w = Vec::with_capacity(m + 1);
    let mut c = Integer::from(1);
    for r in 0..=m {
        w.push(if r % 2 == 0 { c.clone() } else { Integer::from(-&c) });
        c = c * (m - r) as u64 / (r as u64 + 1);
    }
    w
}

/// `(Δ^m x)_i = Σ_{r=0..m} (-1)^r C(m,r) x_{i+m-r}` with exact weights.
pub fn finite_difference<F: Field>(seq: &[F], m: usize, normalization: Normalization) -> Result<DiffSeries<F>> {
    if m == 0 || seq.len() <= m {
        return Err(Error::InvalidArgument(format!(
            "order {m} needs more than {m} elements, got {}",
            seq.len()
        )));
    }
    let like = &seq[0];
    let weights: Vec<F> = binomial_weights(m).iter().map(|w| F::from_integer_like(w, like)).collect();
    let scale = match normalization {
        Normalization::None => None,
        Normalization::PowerOfTwo => Some(F::from_integer_like(&(Integer::from(1) << m as u32), like)),
    };
    let values = (0..seq.len() - m)
        .map(|i| {
            let mut acc = like.zero_like();
            for (r, w) in weights.iter().enumerate() {
                acc = acc + &(w.clone() * &seq[i + m - r]);
            }
            match &scale {
                Some(s) => acc / s,
                None => acc,
            }
        })
        .collect();
    Ok(DiffSeries {
        order: m,
        values,
        normalization,
    })
}

/// Every `step`-th element starting at `offset`.
pub fn stride<F: Clone>(seq: &[F], step: usize, offset: usize) -> Vec<F> {
    seq.iter().skip(offset).step_by(step.max(1)).cloned().collect()
}

/// `log10` of the root mean square of `|v|`.
pub fn rms_log10<F: Field>(values: &[F]) -> f64 {
    let logs: Vec<f64> = values.iter().map(|v| 2.0 * v.log10_abs()).collect();
    let top = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return top;
    }
    let mean = logs.iter().map(|l| 10f64.powf(l - top)).sum::<f64>() / values.len() as f64;
    0.5 * (top + mean.log10())
}
