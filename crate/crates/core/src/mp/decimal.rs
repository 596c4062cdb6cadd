//! Scientific-notation decimal strings: full mantissa, lowercase `e`.
//!
//! The mantissa carries enough digits that parsing at the same precision
//! reproduces the binary value exactly.

use rug::float::Round;
use rug::Float;

use crate::error::{Error, Result};

/// Formats `x` as `[-]d.ddd…e<exp>`.
pub fn format_real(x: &Float) -> String {
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf" } else { "inf" }.to_owned();
    }
    if x.is_zero() {
        return "0.0e0".to_owned();
    }
    let (negative, digits, exp) = x.to_sign_string_exp(10, None);
    let exp = exp.expect("finite nonzero values have an exponent") - 1;
    let (lead, rest) = digits.split_at(1);
    let rest = if rest.is_empty() { "0" } else { rest };
    format!("{}{lead}.{rest}e{exp}", if negative { "-" } else { "" })
}

/// Parses a decimal string at `bits` of precision, rounding to nearest.
pub fn parse_real(text: &str, bits: u32) -> Result<Float> {
    let parsed = Float::parse(text.trim())
        .map_err(|e| Error::parse(0, format!("`{text}` is not a decimal number: {e}")))?;
    Ok(Float::with_val_round(bits, parsed, Round::Nearest).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rug::ops::Pow;

    #[test]
    fn shape_of_output() {
        let x = parse_real("-0.0057750712", 64).unwrap();
        let s = format_real(&x);
        assert!(s.starts_with("-5.7750712"), "{s}");
        assert!(s.ends_with("e-3"), "{s}");
        assert_eq!(format_real(&Float::with_val(64, 1)), format!("1.{}e0", "0".repeat(20)));
        assert_eq!(format_real(&Float::new(64)), "0.0e0");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_real("1.2.3", 64).is_err());
        assert!(parse_real("abc", 64).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(m in any::<i64>(), e in -400i32..400, bits in 40u32..2000) {
            let x = Float::with_val(bits, m) * Float::with_val(bits, 10).pow(e) / 7u32;
            let back = parse_real(&format_real(&x), bits).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
