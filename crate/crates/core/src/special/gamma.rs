use std::f64::consts::PI;

use rug::{Complex, Integer, Rational};

use super::SpecialTables;
use crate::error::{Error, Result};
use crate::mp::PrecisionContext;
use crate::scalar::Analytic;

/// Principal branch of `ln Γ(s)` at `digits` of precision.
///
/// Shifts `s` right by `K` unit steps until `Re(s + K) >= digits`, sums the
/// Stirling series there, and removes `ln Π (s + j)`. The branch of the
/// product's logarithm is fixed from the accumulated machine-precision
/// arguments of the factors, so the result is continuous off the negative
/// real axis.
pub fn log_gamma_with<T: Analytic>(s: &T, digits: u32, tables: &SpecialTables) -> Result<T> {
    let re = s.re_f64();
    if s.im_f64() == 0.0 && re <= 0.0 && re == re.round() {
        let frac = s.clone() - &T::from_integer_like(&Integer::from(re as i64), s);
        if frac.is_zero() {
            return Err(Error::Pole(format!("{re}")));
        }
    }

    let radius = f64::from(digits).max(20.0);
    let shift = (radius - re).ceil().max(0.0) as usize;

    let mut product = s.one_like();
    let mut arg_sum = 0.0;
    let mut z = s.clone();
    for _ in 0..shift {
        arg_sum += z.arg_f64();
        product = product * &z;
        z = z + &s.one_like();
    }

    let half = T::from_rational_like(&Rational::from((1, 2)), s);
    let two_pi = T::pi_like(s) * &T::from_i64_like(2, s);
    let mut acc = (z.clone() - &half) * &z.ln() - &z + &(two_pi.ln() * &half);

    let target = -(f64::from(digits) + 2.0);
    let z_inv = z.one_like() / &z;
    let z_inv_sq = z_inv.clone() * &z_inv;
    let mut power = z_inv;
    let scale = acc.log10_abs().max(0.0);
    let bernoulli = tables.covering(digits as usize / 2 + 20);
    let mut m = 1;
    loop {
        if m >= bernoulli.len() {
            return Err(Error::InsufficientPrecision(
                "Stirling series did not converge".into(),
            ));
        }
        let den = Integer::from((2 * m) * (2 * m - 1));
        let coeff = Rational::from(&bernoulli[m] / den);
        let term = T::from_rational_like(&coeff, s) * &power;
        let small = term.log10_abs() - scale < target;
        acc = acc + &term;
        if small {
            break;
        }
        power = power * &z_inv_sq;
        m += 1;
    }

    if shift == 0 {
        return Ok(acc);
    }
    let log_product = product.ln();
    let turns = ((arg_sum - log_product.im_f64()) / (2.0 * PI)).round() as i64;
    let correction = log_product
        .add_turns(turns)
        .ok_or_else(|| Error::Domain("ln Γ of a negative real argument".into()))?;
    Ok(acc - &correction)
}

/// `ln Γ(s)` at the context precision, rounded to working digits.
pub fn log_gamma(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let tables = SpecialTables::for_context(ctx, 0.0);
    let s = ctx.complex(s);
    let v = log_gamma_with(&s, ctx.total_digits(), &tables)?;
    Ok(Complex::with_val(ctx.working_bits(), v))
}
