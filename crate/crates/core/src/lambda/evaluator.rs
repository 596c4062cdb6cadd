use std::sync::{Arc, Mutex};

use rug::float::Constant;
use rug::{Complex, Float, Rational};

use super::alpha::AlphaSeries;
use super::nu::{nu_coeffs, NuSeries};
use super::series::{accumulate, Accumulated, STOP_MARGIN};
use crate::combinatorics::{beta_poly, chi_rows, stirling_triangle, BetaPolynomial};
use crate::error::{Error, Result};
use crate::mp::{digits_to_bits, PrecisionContext};
use crate::scalar::Field;
use crate::special::euler_gamma;

/// A value of `λ` with its estimated significant digits.
#[derive(Clone, Debug)]
pub struct LambdaValue<T> {
    pub value: T,
    pub significance: f64,
    /// Number of series terms summed.
    pub terms: usize,
}

/// `λ(s)` and `λ'(s)` from one evaluation point.
#[derive(Clone, Debug)]
pub struct LambdaWithDerivative {
    pub value: Complex,
    pub derivative: Complex,
    pub significance: f64,
    pub derivative_significance: f64,
}

type CoeffCache = Mutex<Option<(u32, Arc<Vec<Vec<Float>>>)>>;

/// Evaluates the entire extension `λ(s) = Σ_k β_k(s) α_k`.
///
/// The primary route sums `β_k(s) α_k` with each `β_k` evaluated by Horner
/// in `s²`, which makes `λ(-s) = λ(s)` and `λ(s̄) = conj λ(s)` hold bit for
/// bit. The power series `Σ ν_{2q} s^{2q}` is kept as a cross-check.
#[derive(Debug)]
pub struct LambdaEvaluator {
    alphas: AlphaSeries,
    betas: Vec<BetaPolynomial>,
    nus: NuSeries,
    ctx: PrecisionContext,
    target_digits: u32,
    /// `log10` of every β coefficient, for term-size estimates.
    coeff_log10: Vec<Vec<f64>>,
    cache: CoeffCache,
}

impl Clone for LambdaEvaluator {
    fn clone(&self) -> Self {
        Self {
            alphas: self.alphas.clone(),
            betas: self.betas.clone(),
            nus: self.nus.clone(),
            ctx: self.ctx,
            target_digits: self.target_digits,
            coeff_log10: self.coeff_log10.clone(),
            cache: Mutex::new(None),
        }
    }
}

impl LambdaEvaluator {
    /// Builds β polynomials and `ν_2..ν_{2K}` for the `K` available `α_k`.
    pub fn new(alphas: AlphaSeries, ctx: &PrecisionContext) -> Result<Self> {
        let k_max = alphas.k_max();
        let triangle = stirling_triangle(2 * k_max - 1);
        let chis = chi_rows(k_max, &triangle)?;
        let betas: Vec<BetaPolynomial> = chis.iter().map(|c| beta_poly(c.k(), c)).collect();
        let nus = nu_coeffs(&alphas, &chis, 2 * k_max)?;
        let coeff_log10 = betas
            .iter()
            .map(|b| b.coeffs().iter().map(|c| c.log10_abs()).collect())
            .collect();
        Ok(Self {
            alphas,
            betas,
            nus,
            ctx: *ctx,
            target_digits: ctx.working_digits(),
            coeff_log10,
            cache: Mutex::new(None),
        })
    }

    /// Digits requested from every sum; the default is the context's working digits.
    pub fn with_target_digits(mut self, digits: u32) -> Self {
        self.target_digits = digits;
        self
    }

    /// Same coefficients under another context.
    pub fn with_context(&self, ctx: &PrecisionContext) -> Self {
        let mut ev = self.clone();
        ev.ctx = *ctx;
        ev
    }

    pub fn alphas(&self) -> &AlphaSeries {
        &self.alphas
    }

    pub fn betas(&self) -> &[BetaPolynomial] {
        &self.betas
    }

    pub fn nus(&self) -> &NuSeries {
        &self.nus
    }

    pub fn ctx(&self) -> &PrecisionContext {
        &self.ctx
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    fn target(&self) -> f64 {
        f64::from(self.target_digits)
    }

    /// `log10 |β_k(s) α_k|` bound for `|s| = r`.
    fn term_log10(&self, k: usize, r: f64) -> f64 {
        let lr = r.log10();
        let exps: Vec<f64> = self.coeff_log10[k - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| c + (2 * i + 2) as f64 * lr)
            .collect();
        let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let beta = top + exps.iter().map(|e| 10f64.powf(e - top)).sum::<f64>().log10();
        beta + self.alphas.value(k).log10_abs()
    }

    /// Largest term of the β/α series at `|s| = r`, as a decimal exponent.
    pub fn max_term_log10(&self, r: f64) -> f64 {
        (1..=self.alphas.k_max())
            .map(|k| self.term_log10(k, r))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest `|s|` at which the last available term is still negligible.
    pub fn reliable_radius(&self) -> f64 {
        let k_max = self.alphas.k_max();
        let ok = |r: f64| self.term_log10(k_max, r) < self.max_term_log10(r) - self.target() - STOP_MARGIN;
        let (mut lo, mut hi) = (1e-3, 1e5);
        if !ok(lo) {
            return 0.0;
        }
        for _ in 0..60 {
            let mid = (lo * hi).sqrt();
            if ok(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Decimal digits used at `|s| = r`: the context's internal digits plus
    /// the exponent of the largest term, rounded up to whole 32-bit limbs.
    fn eval_digits(&self, r: f64) -> (u32, u32) {
        let lift = if r > 0.0 { self.max_term_log10(r).max(0.0).ceil() as u32 } else { 0 };
        let digits = self.ctx.total_digits() + lift;
        let bits = digits_to_bits(digits).div_ceil(32) * 32;
        (digits, bits)
    }

    fn coefficients(&self, bits: u32) -> Arc<Vec<Vec<Float>>> {
        let mut slot = self.cache.lock().expect("coefficient cache poisoned");
        if let Some((b, c)) = slot.as_ref() {
            if *b == bits {
                return Arc::clone(c);
            }
        }
        let coeffs = Arc::new(
            self.betas
                .iter()
                .map(|b| b.coeffs().iter().map(|c| Float::with_val(bits, c)).collect())
                .collect(),
        );
        *slot = Some((bits, Arc::clone(&coeffs)));
        coeffs
    }

    fn report(&self, z: Complex) -> Complex {
        Complex::with_val(self.ctx.working_bits(), z)
    }

    fn finish(&self, acc: Accumulated<Complex>) -> LambdaValue<Complex> {
        LambdaValue {
            value: self.report(acc.sum),
            significance: acc.significance,
            terms: acc.used,
        }
    }

    /// `λ(s)` by the β/α route.
    pub fn lambda_at(&self, s: &Complex) -> Result<LambdaValue<Complex>> {
        let r = radius(s);
        let (digits, bits) = self.eval_digits(r);
        let coeffs = self.coefficients(bits);
        let s = Complex::with_val(bits, s);
        let s2 = Complex::with_val(bits, s.square_ref());
        let acc = accumulate(
            self.alphas.k_max(),
            |k| {
                let mut p = Complex::new(bits);
                for c in coeffs[k - 1].iter().rev() {
                    p += c;
                    p *= &s2;
                }
                p * self.alphas.value(k)
            },
            |k| self.alphas.significance(k),
            self.target(),
            f64::from(digits),
            r,
        )?;
        Ok(self.finish(acc))
    }

    /// `λ(s)` and `λ'(s)`, both by the β/α route.
    pub fn lambda_prime(&self, s: &Complex) -> Result<LambdaWithDerivative> {
        let value = self.lambda_at(s)?;
        let r = radius(s);
        let (digits, bits) = self.eval_digits(r);
        let coeffs = self.coefficients(bits);
        let s = Complex::with_val(bits, s);
        let s2 = Complex::with_val(bits, s.square_ref());
        let two_s = Complex::with_val(bits, &s * 2u32);
        let acc = accumulate(
            self.alphas.k_max(),
            |k| {
                // β = s²P(s²), β' = 2s (P + s²P')
                let mut p = Complex::new(bits);
                let mut dp = Complex::new(bits);
                for c in coeffs[k - 1].iter().rev() {
                    dp *= &s2;
                    dp += &p;
                    p *= &s2;
                    p += c;
                }
                dp *= &s2;
                p += dp;
                p * &two_s * self.alphas.value(k)
            },
            |k| self.alphas.significance(k),
            self.target(),
            f64::from(digits),
            r,
        )?;
        Ok(LambdaWithDerivative {
            value: value.value,
            derivative: self.report(acc.sum),
            significance: value.significance,
            derivative_significance: acc.significance,
        })
    }

    /// `λ(s) = Σ_q ν_{2q} s^{2q}`, the cross-check route.
    pub fn lambda_series(&self, s: &Complex) -> Result<LambdaValue<Complex>> {
        let r = radius(s);
        let nus = self.nus.values();
        let lift = nus
            .iter()
            .enumerate()
            .map(|(i, v)| v.log10_abs() + (2 * i + 2) as f64 * r.log10())
            .fold(0.0f64, f64::max)
            .ceil() as u32;
        let digits = self.ctx.total_digits() + lift;
        let bits = digits_to_bits(digits);
        let s2 = Complex::with_val(bits, s.square_ref());
        let acc = accumulate(
            nus.len(),
            |i| {
                let power = Complex::with_val(bits, rug::ops::Pow::pow(&s2, i as u32));
                power * &nus[i - 1]
            },
            |i| self.nus.significance(2 * i),
            self.target(),
            f64::from(digits),
            r,
        )?;
        Ok(self.finish(acc))
    }

    /// `λ_n` with exact rational `β_{nk}`.
    pub fn lambda_int(&self, n: u64) -> Result<LambdaValue<Float>> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let r = n as f64;
        let (digits, bits) = self.eval_digits(r);
        let n_q = Rational::from(n);
        let acc = accumulate(
            self.alphas.k_max(),
            |k| Float::with_val(bits, &self.betas[k - 1].eval(&n_q)) * self.alphas.value(k),
            |k| self.alphas.significance(k),
            self.target(),
            f64::from(digits),
            r,
        )?;
        Ok(LambdaValue {
            value: self.ctx.report(&acc.sum),
            significance: acc.significance,
            terms: acc.used,
        })
    }
}

fn radius(s: &Complex) -> f64 {
    let (re, im) = (s.real().to_f64(), s.imag().to_f64());
    re.hypot(im)
}

/// `λ_1 = (2 + γ - ln 4π)/2` with Euler's constant computed at `ctx`.
pub fn lambda1_closed(ctx: &PrecisionContext) -> Result<Float> {
    let gamma = euler_gamma(ctx)?;
    let four_pi = Float::with_val(ctx.bits(), Constant::Pi) * 4u32;
    let v = (gamma + 2u32 - four_pi.ln()) / 2u32;
    Ok(ctx.report(&v))
}
