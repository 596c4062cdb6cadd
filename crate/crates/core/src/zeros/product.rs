use rug::{Complex, Float};

use super::table::ZeroTable;
use crate::error::{Error, Result};

/// `const·s²·Π_{k<=N} (1 + (s⁴ - 2s²(x_k² - y_k²)) / |σ_k|⁴)`.
///
/// Each factor is the product of the four linear factors for
/// `±σ_k, ±σ̄_k`, with `σ_k = x_k + i y_k`.
pub fn product_partial(s: &Complex, table: &ZeroTable, n: usize, constant: &Float) -> Result<Complex> {
    if n > table.len() {
        return Err(Error::InvalidArgument(format!(
            "{n} factors requested from a table of {}",
            table.len()
        )));
    }
    let bits = s.prec().0;
    let s2 = Complex::with_val(bits, s.square_ref());
    let s4 = Complex::with_val(bits, s2.square_ref());
    let mut acc = Complex::with_val(bits, &s2 * constant);
    for z in &table.zeros()[..n] {
        let x2 = Float::with_val(bits, z.re.square_ref());
        let y2 = Float::with_val(bits, z.im.square_ref());
        let modulus_sq = Float::with_val(bits, &x2 + &y2);
        let m4 = Float::with_val(bits, modulus_sq.square_ref());
        let diff = Float::with_val(bits, &x2 - &y2) * 2u32;
        let num = Complex::with_val(bits, &s4 - Complex::with_val(bits, &s2 * &diff));
        let factor = num / &m4 + 1u32;
        acc *= factor;
    }
    Ok(acc)
}
