use rug::{Complex, Float};

use super::SpecialTables;
use crate::error::{Error, Result};
use crate::mp::PrecisionContext;
use crate::scalar::Analytic;

/// `f(s) = ln ξ(s)` with `ξ(s) = 2(s-1) π^(-s/2) Γ(1+s/2) ζ(s)`.
///
/// Computed as `ln 2 - (s/2) ln π + ln Γ(1+s/2) + Log((s-1)ζ(s))`. The
/// product `(s-1)ζ(s)` is positive on the real segment `(0, 1)`, so real
/// scalars stay real there. At `s = 1` the product is taken as its limit 1.
pub fn xi_log_with<T: Analytic>(
    s: &T,
    digits: u32,
    check_digits: u32,
    tables: &SpecialTables,
) -> Result<T> {
    let one = s.one_like();
    let two = T::from_i64_like(2, s);
    let half_s = s.clone() / &two;

    let product = if (s.clone() - &one).is_zero() {
        one.clone()
    } else {
        (s.clone() - &one) * &tables.zeta(s, digits, check_digits)?
    };
    if product.im_f64() == 0.0 && product.re_f64() <= 0.0 {
        return Err(Error::BranchCut(format!("{:.6}{:+.6}i", s.re_f64(), s.im_f64())));
    }

    let ln_pi = T::pi_like(s).ln();
    let gamma = tables.log_gamma(&(half_s.clone() + &one), digits)?;
    Ok(two.ln() - &(half_s * &ln_pi) + &gamma + &product.ln())
}

/// Complex `f(s)` at the context precision, rounded to working digits.
pub fn xi_log(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let tables = SpecialTables::for_context(ctx, s.imag().to_f64());
    let s = ctx.complex(s);
    let v = xi_log_with(&s, ctx.total_digits(), ctx.working_digits(), &tables)?;
    Ok(Complex::with_val(ctx.working_bits(), v))
}

/// Real `f(s)`, evaluated entirely in real arithmetic.
pub fn xi_log_real(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let tables = SpecialTables::for_context(ctx, 0.0);
    let s = ctx.real(s);
    let v = xi_log_with(&s, ctx.total_digits(), ctx.working_digits(), &tables)?;
    Ok(ctx.report(&v))
}
