use rug::{Complex, Integer, Rational};

use super::SpecialTables;
use crate::error::{Error, Result};
use crate::mp::PrecisionContext;
use crate::scalar::Analytic;

/// Direct-sum cutoff and number of Bernoulli corrections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerMaclaurinParams {
    pub cutoff: usize,
    pub corrections: usize,
}

impl EulerMaclaurinParams {
    /// Extra direct-sum terms of the validation run.
    pub const VALIDATION_EXTRA_N: usize = 8;
    /// Extra corrections of the validation run.
    pub const VALIDATION_EXTRA_M: usize = 4;

    /// `N = M = ceil(0.7·digits + 0.5·|Im s|)`.
    pub fn for_digits(digits: u32, im_abs: f64) -> Self {
        let n = (0.7 * f64::from(digits) + 0.5 * im_abs.abs()).ceil().max(8.0) as usize;
        Self {
            cutoff: n,
            corrections: n,
        }
    }

    pub fn validation(&self) -> Self {
        Self {
            cutoff: self.cutoff + Self::VALIDATION_EXTRA_N,
            corrections: self.corrections + Self::VALIDATION_EXTRA_M,
        }
    }
}

/// `n^-s` for `n = 1..=n_max` (index 0 unused), multiplicative over a sieve.
fn inverse_powers<T: Analytic>(s: &T, n_max: usize) -> Vec<T> {
    let mut smallest = vec![0usize; n_max + 1];
    for p in 2..=n_max {
        if smallest[p] == 0 {
            for m in (p..=n_max).step_by(p) {
                if smallest[m] == 0 {
                    smallest[m] = p;
                }
            }
        }
    }
    let one = s.one_like();
    let mut out: Vec<T> = Vec::with_capacity(n_max + 1);
    out.push(s.zero_like());
    if n_max >= 1 {
        out.push(one.clone());
    }
    for n in 2..=n_max {
        let p = smallest[n];
        let value = if p == n {
            let ln_p = T::from_integer_like(&Integer::from(p), s).ln();
            (-(s.clone() * &ln_p)).exp()
        } else {
            out[p].clone() * &out[n / p]
        };
        out.push(value);
    }
    out
}

/// Euler–Maclaurin tail at cutoff `n` given the precomputed `n^-s`.
fn tail<T: Analytic>(s: &T, n: usize, n_pow: &T, corrections: usize, bernoulli: &[Rational]) -> T {
    let n_t = T::from_i64_like(n as i64, s);
    let one = s.one_like();
    let s_minus_1 = s.clone() - &one;
    let mut acc = n_pow.clone() * &n_t / &s_minus_1;
    acc = acc + &(n_pow.clone() / &T::from_i64_like(2, s));

    // t_m = s(s+1)…(s+2m-2) · n^(-s-2m+1)
    let n_sq = n_t.clone() * &n_t;
    let mut t = s.clone() * n_pow / &n_t;
    let mut factorial = Integer::from(2);
    for m in 1..=corrections {
        let coeff = Rational::from(&bernoulli[m] / &factorial);
        acc = acc + &(T::from_rational_like(&coeff, s) * &t);
        let two_m = (2 * m) as i64;
        let a = s.clone() + &T::from_i64_like(two_m - 1, s);
        let b = s.clone() + &T::from_i64_like(two_m, s);
        t = t * &a * &b / &n_sq;
        factorial *= (two_m + 1) as u64;
        factorial *= (two_m + 2) as u64;
    }
    acc
}

/// Validated `ζ(s)` at `digits` of internal precision.
///
/// Evaluates with `(N, M)` and `(N+8, M+4)`; the two must agree to
/// `check_digits` digits relative to `max(1, |ζ|)`.
pub fn zeta_em_with<T: Analytic>(
    s: &T,
    digits: u32,
    check_digits: u32,
    tables: &SpecialTables,
) -> Result<T> {
    let one = s.one_like();
    if (s.clone() - &one).is_zero() {
        return Err(Error::Pole("1".into()));
    }
    let params = EulerMaclaurinParams::for_digits(digits, s.im_f64());
    let check = params.validation();
    let bernoulli = tables.covering(check.corrections + 1);
    let powers = inverse_powers(s, check.cutoff);

    let mut head = s.zero_like();
    for p in &powers[1..params.cutoff] {
        head = head + p;
    }
    let primary = head.clone()
        + &tail(s, params.cutoff, &powers[params.cutoff], params.corrections, &bernoulli);

    for p in &powers[params.cutoff..check.cutoff] {
        head = head + p;
    }
    let secondary = head + &tail(s, check.cutoff, &powers[check.cutoff], check.corrections, &bernoulli);

    let scale = primary.log10_abs().max(0.0);
    let diff = (primary.clone() - &secondary).log10_abs() - scale;
    if diff > -f64::from(check_digits) {
        return Err(Error::ParameterValidation {
            s: format!("{:.6}{:+.6}i", s.re_f64(), s.im_f64()),
            log10_diff: diff,
        });
    }
    Ok(secondary)
}

/// `ζ(s)` at the context precision, rounded to working digits.
pub fn zeta_em(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let tables = SpecialTables::for_context(ctx, s.imag().to_f64());
    let s = ctx.complex(s);
    let z = zeta_em_with(&s, ctx.total_digits(), ctx.working_digits(), &tables)?;
    Ok(Complex::with_val(ctx.working_bits(), z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use crate::mp::make_context;
    use rug::float::Constant;
    use rug::ops::Pow;
    use rug::Float;

    fn ctx() -> PrecisionContext {
        make_context(60).unwrap()
    }

    #[test]
    fn zeta_two() {
        let c = ctx();
        let z = zeta_em(&c.complex(2), &c).unwrap();
        let pi = c.real(Constant::Pi);
        let expected = pi.clone() * &pi / 6u32;
        assert!((Float::with_val(c.bits(), z.real() - &expected)).abs() < c.epsilon());
        assert!(z.imag().is_zero());
    }

    #[test]
    fn zeta_zero_and_half() {
        let c = ctx();
        let z0 = zeta_em(&c.complex(0), &c).unwrap();
        assert!((Float::with_val(c.bits(), z0.real() + 0.5f64)).abs() < c.epsilon());
        let z = zeta_em(&c.complex(0.5), &c).unwrap();
        let expected = crate::mp::parse_real("-1.4603545088095868128894991525152980125", c.bits()).unwrap();
        assert!((Float::with_val(c.bits(), z.real() - &expected)).abs() < 1e-36);
    }

    #[test]
    fn pole_is_rejected() {
        let c = ctx();
        assert!(matches!(zeta_em(&c.complex(1), &c), Err(Error::Pole(_))));
    }

    #[test]
    fn works_for_machine_floats() {
        let tables = SpecialTables::new(15, 0.0);
        let z: f64 = zeta_em_with(&4.0f64, 15, 12, &tables).unwrap();
        assert!((z - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn dual_parameter_runs_agree_off_axis() {
        let c = ctx();
        let tables = SpecialTables::for_context(&c, 30.0);
        for (re, im) in [(0.5, 14.134725), (-1.5, 3.0), (2.5, -20.0), (0.9, 0.1)] {
            let s = c.complex((re, im));
            zeta_em_with(&s, c.total_digits(), c.working_digits(), &tables).unwrap();
        }
    }

    #[test]
    fn first_zeta_zero_is_small() {
        let c = ctx();
        let s = c.complex((
            0.5,
            crate::mp::parse_real("14.134725141734693790457251983562470270784257115699", c.bits()).unwrap(),
        ));
        let z = zeta_em(&s, &c).unwrap();
        assert!(z.log10_abs() < -45.0);
    }

    #[test]
    fn sieve_powers_match_direct_powers() {
        let s = Complex::with_val(200, (0.3, 5.0));
        let p = inverse_powers(&s, 60);
        for n in [6usize, 12, 49, 60] {
            let direct = Complex::with_val(200, n).pow(-s.clone());
            assert!((p[n].clone() - direct).log10_abs() < -55.0, "n = {n}");
        }
    }
}
