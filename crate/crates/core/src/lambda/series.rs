//! Truncated summation shared by the `λ` routes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Terms below `10^-(target + STOP_MARGIN)` of the running maximum count as negligible.
pub const STOP_MARGIN: f64 = 5.0;
/// Consecutive negligible terms that end a sum.
pub const STOP_RUN: usize = 3;

const CHUNK: usize = 8;

/// Result of [`accumulate`].
#[derive(Clone, Debug)]
pub(crate) struct Accumulated<T> {
    pub sum: T,
    pub used: usize,
    /// Digits of `sum` not explained by data error, rounding or truncation.
    pub significance: f64,
}

/// Sums `term(1) + term(2) + …` in ascending order.
///
/// Terms are produced in parallel chunks and folded left. The sum stops
/// after [`STOP_RUN`] consecutive terms below `10^-(target+5)` of the largest
/// term so far. If `count` terms run out first, the tail is estimated from
/// the ratio of the last two terms; a tail that is not decaying is an
/// [`Error::InsufficientTruncation`].
///
/// `term_digits(k)` is the relative accuracy of term `k` in digits and
/// `precision_digits` the arithmetic precision.
pub(crate) fn accumulate<T, F, G>(
    count: usize,
    term: F,
    term_digits: G,
    target: f64,
    precision_digits: f64,
    radius: f64,
) -> Result<Accumulated<T>>
where
    T: Field,
    F: Fn(usize) -> T + Sync,
    G: Fn(usize) -> f64,
{
    let mut sum: Option<T> = None;
    let mut running_max = f64::NEG_INFINITY;
    let mut error_log10 = f64::NEG_INFINITY;
    let mut quiet = 0;
    let mut history: Vec<f64> = Vec::new();
    let mut used = 0;
    let mut stopped = false;

    'outer: for start in (1..=count).step_by(CHUNK) {
        let end = (start + CHUNK - 1).min(count);
        let chunk: Vec<T> = (start..=end).into_par_iter().map(&term).collect();
        for (offset, t) in chunk.into_iter().enumerate() {
            let k = start + offset;
            let size = t.log10_abs();
            running_max = running_max.max(size);
            error_log10 = error_log10.max(size - term_digits(k));
            history.push(size);
            sum = Some(match sum {
                None => t,
                Some(s) => s + &t,
            });
            used = k;
            if size < running_max - (target + STOP_MARGIN) || size == f64::NEG_INFINITY {
                quiet += 1;
                if quiet >= STOP_RUN {
                    stopped = true;
                    break 'outer;
                }
            } else {
                quiet = 0;
            }
        }
    }
    let sum = sum.ok_or_else(|| Error::InvalidArgument("empty series".into()))?;

    if !stopped {
        let n = history.len();
        let last = history[n - 1];
        let prev = if n >= 2 { history[n - 2] } else { f64::INFINITY };
        if last >= prev || last >= running_max - 1.0 {
            return Err(Error::InsufficientTruncation {
                radius,
                message: format!(
                    "terms still at 10^{last:.1} after {count} coefficients (largest 10^{running_max:.1})"
                ),
            });
        }
        let log_ratio = last - prev;
        let r = 10f64.powf(log_ratio);
        let tail = last + (r / (1.0 - r)).log10();
        error_log10 = error_log10.max(tail);
    }
    error_log10 = error_log10.max(running_max - precision_digits);

    let size = sum.log10_abs();
    let significance = if size == f64::NEG_INFINITY && error_log10 == f64::NEG_INFINITY {
        target
    } else {
        (size - error_log10).min(target)
    };
    Ok(Accumulated {
        sum,
        used,
        significance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_stops_early() {
        let acc = accumulate(200, |k| 0.5f64.powi(k as i32), |_| 15.0, 10.0, 15.0, 1.0).unwrap();
        assert!((acc.sum - 1.0).abs() < 1e-14);
        assert!(acc.used < 60);
        assert!(acc.significance >= 10.0);
    }

    #[test]
    fn exhausted_decaying_series_estimates_tail() {
        let acc = accumulate(10, |k| 0.1f64.powi(k as i32), |_| 15.0, 30.0, 15.0, 1.0).unwrap();
        assert_eq!(acc.used, 10);
        // tail 0.1^11/0.9 against a sum of 1/9: exactly 10 digits
        assert!((acc.significance - 10.0).abs() < 0.01, "{}", acc.significance);
    }

    #[test]
    fn growing_series_is_rejected() {
        let r = accumulate(10, |k| 2f64.powi(k as i32), |_| 15.0, 10.0, 15.0, 7.0);
        assert!(matches!(r, Err(Error::InsufficientTruncation { .. })));
    }

    #[test]
    fn zero_series() {
        let acc = accumulate(50, |_| 0.0f64, |_| 15.0, 10.0, 15.0, 0.0).unwrap();
        assert_eq!(acc.sum, 0.0);
        assert_eq!(acc.used, 3);
        assert_eq!(acc.significance, 10.0);
    }
}
