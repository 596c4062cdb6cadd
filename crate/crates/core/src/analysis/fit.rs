use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::zeros::ZeroTable;

/// The factor in `Im σ_k ≈ 16 ln Re σ_k`.
pub const LOG_LAW_FACTOR: u32 = 16;

/// Fewest zeros at or past `k_min` that [`fit_log_factor`] accepts.
pub const MIN_FIT_POINTS: usize = 50;

/// Least-squares `c` in `Im σ_k ≈ c ln Re σ_k` over zeros with index `>= k_min`.
pub fn fit_log_factor(table: &ZeroTable, k_min: usize) -> Result<Float> {
    let used: Vec<_> = table.zeros().iter().filter(|z| z.index >= k_min).collect();
    if used.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData(format!(
            "{} zeros with index >= {k_min}, at least {MIN_FIT_POINTS} needed",
            used.len()
        )));
    }
    let bits = used[0].re.prec().max(64);
    let mut num = Float::new(bits);
    let mut den = Float::new(bits);
    for z in used {
        let l = Float::with_val(bits, z.re.ln_ref());
        num += Float::with_val(bits, &l * &z.im);
        den += l.square();
    }
    Ok(num / den)
}

/// `(Re σ_k, exp(Im σ_k / 16))` per zero.
pub fn rescale_for_plot(table: &ZeroTable) -> Vec<(Float, Float)> {
    table
        .zeros()
        .iter()
        .map(|z| {
            let y = Float::with_val(z.im.prec(), &z.im / LOG_LAW_FACTOR).exp();
            (z.re.clone(), y)
        })
        .collect()
}

/// Adds to each element a point drawn uniformly from the disk of radius
/// `amplitude`, from a ChaCha8 stream seeded with `rng_seed`.
pub fn perturb_zeros(seq: &[Complex], amplitude: &Float, rng_seed: u64) -> Result<Vec<Complex>> {
    if amplitude.is_sign_negative() && !amplitude.is_zero() {
        return Err(Error::InvalidArgument("amplitude must be nonnegative".into()));
    }
    if amplitude.is_zero() {
        return Ok(seq.to_vec());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    Ok(seq
        .iter()
        .map(|z| {
            let bits = z.prec().0;
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            let r = Float::with_val(bits, amplitude * u.sqrt());
            let (sin, cos) = (2.0 * PI * v).sin_cos();
            let shift = Complex::with_val(bits, (Float::with_val(bits, &r * cos), r * sin));
            Complex::with_val(bits, z + shift)
        })
        .collect())
}
