//! Independent routes to `λ_n`: contour coefficients of `ln φ` and the
//! sum over zeta zeros.

use std::f64::consts::PI;

use rayon::prelude::*;
use rug::float::Constant;
use rug::{Complex, Float};

use crate::analysis::ZetaZeroList;
use crate::error::{Error, Result};
use crate::mp::PrecisionContext;
use crate::scalar::Field;
use crate::special::{xi_log_with, SpecialTables};

/// Largest contour radius accepted by [`lambda_cauchy_oracle`].
pub const MAX_CONTOUR_RADIUS: f64 = 0.6;

/// Unwrapped phase steps above this are treated as unresolved.
const MAX_PHASE_STEP: f64 = PI / 2.0;

/// `ln φ(s) = f(1/(1-s))` at `samples` equally spaced points of `|s| = r`,
/// continuous along the contour.
fn contour_samples(radius: &Float, samples: usize, ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    let bits = ctx.bits();
    let tables = SpecialTables::for_context(ctx, 2.0);
    let two_pi = Float::with_val(bits, Constant::Pi) * 2u32;
    let mut values = (0..samples)
        .into_par_iter()
        .map(|j| {
            let theta = Float::with_val(bits, &two_pi * j as u64) / samples as u64;
            let (sin, cos) = theta.sin_cos(Float::new(bits));
            let s = Complex::with_val(bits, (cos * radius, sin * radius));
            let w = Complex::with_val(bits, 1u32) / (Complex::with_val(bits, 1u32) - s);
            xi_log_with(&w, ctx.total_digits(), ctx.working_digits(), &tables)
        })
        .collect::<Result<Vec<_>>>()?;

    let turn = two_pi.to_f64();
    let mut shift = 0i64;
    let mut prev = values[0].imag().to_f64();
    for j in 1..=samples {
        let idx = j % samples;
        let raw = values[idx].imag().to_f64() + shift as f64 * turn;
        let jumps = ((prev - raw) / turn).round() as i64;
        shift += jumps;
        let adjusted = raw + jumps as f64 * turn;
        if (adjusted - prev).abs() > MAX_PHASE_STEP {
            return Err(Error::UnwrapFailure { index: j - 1, next: j });
        }
        if idx == 0 {
            if shift != 0 {
                // the contour winds around a zero or pole of ξ
                return Err(Error::UnwrapFailure { index: samples - 1, next: 0 });
            }
        } else if shift != 0 {
            let c = Float::with_val(bits, &two_pi * shift);
            *values[idx].mut_imag() += c;
        }
        prev = adjusted;
    }
    Ok(values)
}

/// Trapezoidal Taylor coefficients `c_n`, `n = 1..=n_max`, of the samples.
fn taylor_coefficients(values: &[Complex], radius: &Float, n_max: usize) -> Vec<Float> {
    let bits = values[0].prec().0;
    let samples = values.len();
    let two_pi = Float::with_val(bits, Constant::Pi) * 2u32;
    let trig: Vec<(Float, Float)> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let theta = Float::with_val(bits, &two_pi * k as u64) / samples as u64;
            theta.sin_cos(Float::new(bits))
        })
        .collect();
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut acc = Float::new(bits);
            for (j, v) in values.iter().enumerate() {
                // Re(v e^{-inθ}); the imaginary parts cancel by symmetry
                let (sin, cos) = &trig[(n * j) % samples];
                acc += Float::with_val(bits, v.real() * cos) + Float::with_val(bits, v.imag() * sin);
            }
            let scale = Float::with_val(bits, rug::ops::Pow::pow(radius, n as i32)) * samples as u64;
            acc / scale
        })
        .collect()
}

/// `λ_n = n·c_n`, `n = 1..=n_max`, from the Taylor coefficients of
/// `ln φ(s) = f(1/(1-s))` on the circle `|s| = radius`.
///
/// The trapezoidal sums are repeated with twice the samples; the doubled
/// run is returned and must agree with the first to within the precision
/// left after dividing by `radius^n`.
pub fn lambda_cauchy_oracle(
    n_max: usize,
    radius: &Float,
    samples: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<Float>> {
    let r = radius.to_f64();
    if !(r > 0.0 && r <= MAX_CONTOUR_RADIUS) {
        return Err(Error::InvalidArgument(format!(
            "contour radius must lie in (0, {MAX_CONTOUR_RADIUS}], got {r}"
        )));
    }
    if samples < 256 || !samples.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "samples must be a power of two >= 256, got {samples}"
        )));
    }
    if n_max == 0 || n_max >= samples / 2 {
        return Err(Error::InvalidArgument(format!("n_max must lie in 1..{}", samples / 2)));
    }
    let radius = Float::with_val(ctx.bits(), radius);
    let coarse = taylor_coefficients(&contour_samples(&radius, samples, ctx)?, &radius, n_max);
    let fine = taylor_coefficients(&contour_samples(&radius, 2 * samples, ctx)?, &radius, n_max);

    let mut out = Vec::with_capacity(n_max);
    for (i, (a, b)) in coarse.iter().zip(&fine).enumerate() {
        let n = i + 1;
        let diff = Float::with_val(ctx.bits(), a - b);
        let allowed = -(f64::from(ctx.working_digits()) + n as f64 * r.log10()) + 2.0;
        let moved = diff.log10_abs() - b.log10_abs().max(0.0);
        if moved > allowed {
            return Err(Error::Aliasing { n, log10_diff: moved });
        }
        out.push(ctx.report(&(b.clone() * n as u64)));
    }
    Ok(out)
}

/// A zero moved off the critical line: `ρ = 1/2 + δ + iγ_index`.
#[derive(Clone, Debug)]
pub struct Deviation {
    /// 1-based position in the ordinate list.
    pub index: usize,
    pub delta: Float,
}

/// `1 - 1/ρ` for `ρ = re + iγ`.
fn mobius(re: &Float, gamma: &Float, bits: u32) -> Complex {
    let rho = Complex::with_val(bits, (re, gamma));
    Complex::with_val(bits, 1u32) - Complex::with_val(bits, 1u32) / rho
}

/// Per-ordinate bases of the zero sum: on the line one `z = 1 - 1/ρ`, off
/// it `z` for `ρ` and `w` for `1 - ρ`.
#[derive(Clone, Debug)]
pub(crate) enum Base {
    OnLine(Complex),
    Off(Complex, Complex),
}

pub(crate) fn zero_bases(
    zeros: &ZetaZeroList,
    deviation: Option<&Deviation>,
    bits: u32,
) -> Result<Vec<Base>> {
    let half = Float::with_val(bits, 0.5);
    if let Some(d) = deviation {
        if d.index == 0 || d.index > zeros.len() {
            return Err(Error::InvalidArgument(format!(
                "deviation index {} outside 1..={}",
                d.index,
                zeros.len()
            )));
        }
        if d.delta.is_sign_negative() || d.delta >= 0.5 {
            return Err(Error::InvalidArgument("δ must lie in [0, 1/2)".into()));
        }
    }
    Ok(zeros
        .ordinates()
        .iter()
        .enumerate()
        .map(|(i, gamma)| match deviation {
            Some(d) if d.index == i + 1 && !d.delta.is_zero() => {
                let re = Float::with_val(bits, &half + &d.delta);
                let mirror = Float::with_val(bits, &half - &d.delta);
                let neg_gamma = Float::with_val(bits, -gamma);
                Base::Off(mobius(&re, gamma, bits), mobius(&mirror, &neg_gamma, bits))
            }
            _ => Base::OnLine(mobius(&half, gamma, bits)),
        })
        .collect())
}

/// Contribution of one ordinate given the `n`-th powers of its bases.
///
/// On the line `ρ̄ = 1 - ρ`, so the pair contributes
/// `2 - 2 Re z^n = |1 - z^n|²`, nonnegative by construction. Off the line
/// the four zeros `ρ, 1-ρ, ρ̄, 1-ρ̄` contribute `2 Re[(1 - z^n) + (1 - w^n)]`.
pub(crate) fn contribution(powers: &Base, bits: u32) -> Float {
    match powers {
        Base::OnLine(zn) => {
            let d = Complex::with_val(bits, 1u32) - zn;
            Float::with_val(bits, d.norm_ref())
        }
        Base::Off(zn, wn) => {
            let s = Float::with_val(bits, 2u32) - zn.real() - wn.real();
            s * 2u32
        }
    }
}

pub(crate) fn power_bases(bases: &[Base], n: u64, bits: u32) -> Vec<Base> {
    use rug::ops::Pow;
    bases
        .iter()
        .map(|b| match b {
            Base::OnLine(z) => Base::OnLine(Complex::with_val(bits, z.pow(n))),
            Base::Off(z, w) => Base::Off(Complex::with_val(bits, z.pow(n)), Complex::with_val(bits, w.pow(n))),
        })
        .collect()
}

/// `λ_n ≈ Σ_ρ [1 - (1 - 1/ρ)^n]` over the listed zeros and their mirrors.
pub fn lambda_sum_zeros(
    n: u64,
    zeros: &ZetaZeroList,
    deviation: Option<&Deviation>,
    ctx: &PrecisionContext,
) -> Result<Float> {
    let bits = ctx.bits();
    let bases = zero_bases(zeros, deviation, bits)?;
    let powers = power_bases(&bases, n, bits);
    let mut acc = Float::new(bits);
    for p in &powers {
        acc += contribution(p, bits);
    }
    Ok(ctx.report(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::make_context;
    use rug::ops::Pow;

    #[test]
    fn off_line_contribution_is_the_four_term_sum() {
        let ctx = make_context(40).unwrap();
        let bits = ctx.bits();
        let zeros = ZetaZeroList::new(vec![ctx.real(14.134725141734693)]).unwrap();
        let dev = Deviation { index: 1, delta: ctx.real(0.2) };
        let gamma = ctx.real(14.134725141734693);
        let right = Float::with_val(bits, 0.5 + &dev.delta);
        let left = Float::with_val(bits, 0.5 - &dev.delta);
        let rhos = [
            Complex::with_val(bits, (&right, &gamma)),
            Complex::with_val(bits, (&left, -gamma.clone())),
            Complex::with_val(bits, (&right, -gamma.clone())),
            Complex::with_val(bits, (&left, &gamma)),
        ];
        for n in [1u64, 5, 60] {
            let mut direct = Complex::new(bits);
            for rho in &rhos {
                let z = Complex::with_val(bits, 1u32) - Complex::with_val(bits, 1u32) / rho;
                direct += Complex::with_val(bits, 1u32) - z.pow(n);
            }
            let ours = lambda_sum_zeros(n, &zeros, Some(&dev), &ctx).unwrap();
            let d = Float::with_val(bits, direct.real() - &ours);
            assert!(d.clone().abs() < 1e-35, "n = {n}: {} vs {}", direct.real().to_f64(), ours.to_f64());
            assert!(direct.imag().clone().abs() < 1e-35);
        }
    }

    #[test]
    fn on_line_pair_matches_direct_sum() {
        let ctx = make_context(40).unwrap();
        let bits = ctx.bits();
        let gamma = ctx.real(21.022039638771555);
        let zeros = ZetaZeroList::new(vec![gamma.clone()]).unwrap();
        let pair = [Complex::with_val(bits, (0.5, &gamma)), Complex::with_val(bits, (0.5, -gamma))];
        for n in [1u64, 7, 300] {
            let mut direct = Complex::new(bits);
            for rho in &pair {
                let z = Complex::with_val(bits, 1u32) - Complex::with_val(bits, 1u32) / rho;
                direct += Complex::with_val(bits, 1u32) - z.pow(n);
            }
            let ours = lambda_sum_zeros(n, &zeros, None, &ctx).unwrap();
            assert!(Float::with_val(bits, direct.real() - &ours).abs() < 1e-35, "n = {n}");
        }
    }
}
