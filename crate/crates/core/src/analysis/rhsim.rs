use rayon::prelude::*;
use rug::Float;

use crate::analysis::ZetaZeroList;
use crate::error::{Error, Result};
use crate::lambda::{contribution, power_bases, zero_bases, Base, Deviation};
use crate::mp::PrecisionContext;

/// Consecutive `n` handled by one worker.
pub const SCAN_BLOCK: u64 = 256;

fn advance(powers: &mut [Base], bases: &[Base]) {
    for (p, b) in powers.iter_mut().zip(bases) {
        match (p, b) {
            (Base::OnLine(zn), Base::OnLine(z)) => *zn *= z,
            (Base::Off(zn, wn), Base::Off(z, w)) => {
                *zn *= z;
                *wn *= w;
            }
            _ => unreachable!("bases and powers share their layout"),
        }
    }
}

/// The truncated zero sum for `n` in `first..=last`, rounded to working digits.
///
/// Each block of [`SCAN_BLOCK`] values starts from exact powers and
/// advances by multiplication, so values do not depend on the thread count.
pub fn lambda_sum_zeros_range(
    first: u64,
    last: u64,
    zeros: &ZetaZeroList,
    deviation: Option<&Deviation>,
    ctx: &PrecisionContext,
) -> Result<Vec<Float>> {
    if first == 0 || last < first {
        return Err(Error::InvalidArgument(format!("bad range {first}..={last}")));
    }
    let bits = ctx.bits();
    let bases = zero_bases(zeros, deviation, bits)?;
    let starts: Vec<u64> = (first..=last).step_by(SCAN_BLOCK as usize).collect();
    let blocks: Vec<Vec<Float>> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + SCAN_BLOCK - 1).min(last);
            let mut powers = power_bases(&bases, start, bits);
            let mut out = Vec::with_capacity((end - start + 1) as usize);
            for n in start..=end {
                if n > start {
                    advance(&mut powers, &bases);
                }
                let mut acc = Float::new(bits);
                for p in &powers {
                    acc += contribution(p, bits);
                }
                out.push(ctx.report(&acc));
            }
            out
        })
        .collect();
    Ok(blocks.into_iter().flatten().collect())
}

/// Smallest `n <= n_max` at which the zero sum with the `deviate_index`-th
/// zero moved to `Re ρ = 1/2 + δ` is negative.
pub fn rh_first_negative(
    gammas: &ZetaZeroList,
    deviate_index: usize,
    delta: &Float,
    n_max: u64,
    ctx: &PrecisionContext,
) -> Result<Option<u64>> {
    let deviation = Deviation {
        index: deviate_index,
        delta: delta.clone(),
    };
    let batch = SCAN_BLOCK * rayon::current_num_threads().max(1) as u64;
    let mut first = 1;
    while first <= n_max {
        let last = (first + batch - 1).min(n_max);
        let values = lambda_sum_zeros_range(first, last, gammas, Some(&deviation), ctx)?;
        if let Some(i) = values.iter().position(|v| v.is_sign_negative() && !v.is_zero()) {
            return Ok(Some(first + i as u64));
        }
        first = last + 1;
    }
    Ok(None)
}

