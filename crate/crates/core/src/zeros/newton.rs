use rug::{Complex, Float};

use super::table::{ComplexZero, ZeroTable};
use crate::error::{Error, Result};
use crate::lambda::LambdaEvaluator;
use crate::scalar::Field;

pub const MAX_NEWTON_STEPS: usize = 60;

/// `(a, b)` of the fallback seed `Re σ_k ≈ a·k + b`.
pub const SEED_FALLBACK: (f64, f64) = (88.7, -12.0);

/// Starting point for `σ_k` with `Im = 16 ln Re`.
///
/// The real part continues from `σ_{k-1}` by the mean spacing of `prior`
/// when `σ_{k-1}` is known, comes from a least-squares line through
/// `prior` when it has two or more entries, and from [`SEED_FALLBACK`]
/// otherwise.
pub fn seed_zero(k: usize, prior: &ZeroTable, bits: u32) -> Complex {
    let points: Vec<(f64, f64)> = prior.zeros().iter().map(|z| (z.index as f64, z.re.to_f64())).collect();
    let (a, b) = if points.len() >= 2 {
        let n = points.len() as f64;
        let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
        let my = points.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
        let a = sxy / sxx;
        (a, my - a * mx)
    } else {
        SEED_FALLBACK
    };
    let re = match k.checked_sub(1).and_then(|p| prior.by_index(p)) {
        Some(prev) => prev.re.to_f64() + a,
        None => a * k as f64 + b,
    };
    let im = 16.0 * re.ln();
    Complex::with_val(bits, (re, im))
}

fn log10_abs(z: &Complex) -> f64 {
    z.log10_abs()
}

/// Newton iteration `σ ← σ - λ(σ)/λ'(σ)` until `|λ(σ)| < tol`.
///
/// The result is mapped to the canonical quadrant and carries index 0;
/// callers assign the index. Linear convergence with rate near 1/2 (a
/// double zero) or `|λ'| < sqrt(tol)` at the solution sets
/// `derivative_underflow`.
pub fn refine_zero(seed: &Complex, ev: &LambdaEvaluator, tol: &Float) -> Result<ComplexZero> {
    let bits = ev.ctx().bits();
    let mut z = Complex::with_val(bits, seed);
    let tol_log = tol.log10_abs();
    let radius = ev.reliable_radius();
    let mut steps_log: Vec<f64> = Vec::new();
    let mut last_residual = f64::INFINITY;

    for step in 0..=MAX_NEWTON_STEPS {
        let r = z.real().to_f64().hypot(z.imag().to_f64());
        if r > radius {
            return Err(Error::InsufficientTruncation {
                radius: r,
                message: format!("Newton iterate left the reliable radius {radius:.2}"),
            });
        }
        let eval = ev.lambda_prime(&z)?;
        last_residual = log10_abs(&eval.value);
        if last_residual < tol_log {
            return Ok(finish(z, &eval.value, &eval.derivative, step, &steps_log, tol_log));
        }
        if step == MAX_NEWTON_STEPS {
            break;
        }
        if eval.derivative.is_zero() {
            return Err(Error::DerivativeUnderflow(format!(
                "{:.6}{:+.6}i",
                z.real().to_f64(),
                z.imag().to_f64()
            )));
        }
        let delta = Complex::with_val(bits, &eval.value / &eval.derivative);
        steps_log.push(log10_abs(&delta));
        z -= delta;
    }
    Err(Error::NonConvergence {
        steps: MAX_NEWTON_STEPS,
        log10_residual: last_residual,
    })
}

fn finish(z: Complex, value: &Complex, derivative: &Complex, steps: usize, steps_log: &[f64], tol_log: f64) -> ComplexZero {
    let (mut re, mut im) = z.into_real_imag();
    if re.is_sign_negative() {
        re = -re;
        im = -im;
    }
    if im.is_sign_negative() {
        im = -im;
    }
    let n = steps_log.len();
    let convergence_order = (n >= 2 && steps_log[n - 2] < 0.0).then(|| steps_log[n - 1] / steps_log[n - 2]);
    let linear = n >= 4
        && steps_log[n - 3..]
            .windows(2)
            .all(|w| (w[1] - w[0] - 0.5f64.log10()).abs() < 0.1);
    let derivative_underflow = linear || derivative.log10_abs() < tol_log / 2.0;
    let prec = re.prec();
    ComplexZero {
        index: 0,
        re,
        im,
        residual: Float::with_val(prec, value.abs_ref()),
        newton_steps: steps,
        convergence_order,
        derivative_underflow,
    }
}

/// Re-evaluates `|λ(σ)|` with 30 more digits and checks it against `10·tol`.
pub fn certify_zero(zero: &ComplexZero, ev: &LambdaEvaluator, tol: &Float) -> Result<bool> {
    let elevated = ev.with_context(&ev.ctx().elevated(30));
    let v = elevated.lambda_at(&zero.value())?;
    Ok(v.value.log10_abs() < tol.log10_abs() + 1.0)
}
