use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::mp::PrecisionContext;
use crate::scalar::Field;

/// Euler's constant by the Brent–McMillan Bessel-function scheme at `bits`.
///
/// With `A_0 = -ln n`, `B_0 = 1`, `B_k = B_{k-1} n²/k²`,
/// `A_k = (A_{k-1} n²/k + B_k)/k`, the ratio `ΣA_k / ΣB_k` equals `γ` up to
/// `O(e^{-4n})`.
pub fn euler_gamma_brent_mcmillan(bits: u32) -> Float {
    let digits = f64::from(bits) * std::f64::consts::LOG10_2;
    let n = (digits * std::f64::consts::LN_10 / 4.0).ceil() as u64 + 2;
    let n_sq = Float::with_val(bits, n * n);
    let mut a = -Float::with_val(bits, n).ln();
    let mut b = Float::with_val(bits, 1);
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k: u64 = 1;
    loop {
        b = b * &n_sq / (k * k);
        a = (a * &n_sq / k + &b) / k;
        u += &a;
        v += &b;
        let negligible = b.log10_abs() - v.log10_abs() < -digits - 5.0
            && a.log10_abs() - u.log10_abs().max(0.0) < -digits - 5.0;
        if negligible && k > n {
            break;
        }
        k += 1;
    }
    u / v
}

/// Euler's constant at the context precision, cross-checked against MPFR's
/// independent implementation.
pub fn euler_gamma(ctx: &PrecisionContext) -> Result<Float> {
    let ours = euler_gamma_brent_mcmillan(ctx.bits());
    let reference = Float::with_val(ctx.bits(), Constant::Euler);
    let diff = Float::with_val(ctx.bits(), &ours - &reference);
    if diff.log10_abs() > -f64::from(ctx.working_digits()) {
        return Err(Error::InsufficientPrecision(format!(
            "Euler's constant methods disagree at 10^{:.1}",
            diff.log10_abs()
        )));
    }
    Ok(ours)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::{make_context, parse_real};

    #[test]
    fn known_digits() {
        let g = euler_gamma_brent_mcmillan(200);
        let expected =
            parse_real("0.57721566490153286060651209008240243104215933593992", 200).unwrap();
        assert!(Float::with_val(200, g - expected).abs() < 1e-50);
    }

    #[test]
    fn methods_agree_at_high_precision() {
        let c = make_context(1000).unwrap();
        euler_gamma(&c).unwrap();
    }
}
