use std::f64::consts::LOG2_10;

use rug::float::Round;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::error::{Error, Result};

/// Smallest working precision any pipeline stage accepts.
pub const MIN_WORKING_DIGITS: u32 = 30;

const SLACK_BITS: u32 = 16;

/// Binary mantissa width for a decimal precision.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits) * LOG2_10).ceil() as u32 + SLACK_BITS
}

/// Decimal precision budget of a computation.
///
/// Values are computed with `working_digits + guard_digits` decimal digits
/// and reported at `working_digits`. Rounding is always to nearest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    working_digits: u32,
    guard_digits: u32,
}

/// Builds a context with `guard_digits = max(10, working_digits / 20)`.
pub fn make_context(working_digits: u32) -> Result<PrecisionContext> {
    PrecisionContext::new(working_digits)
}

impl PrecisionContext {
    pub fn new(working_digits: u32) -> Result<Self> {
        if working_digits < MIN_WORKING_DIGITS {
            return Err(Error::InsufficientPrecision(format!(
                "{working_digits} working digits requested, at least {MIN_WORKING_DIGITS} required"
            )));
        }
        Ok(Self {
            working_digits,
            guard_digits: (working_digits / 20).max(10),
        })
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn total_digits(&self) -> u32 {
        self.working_digits + self.guard_digits
    }

    /// Internal mantissa width.
    pub fn bits(&self) -> u32 {
        digits_to_bits(self.total_digits())
    }

    /// Mantissa width of reported values.
    pub fn working_bits(&self) -> u32 {
        digits_to_bits(self.working_digits)
    }

    /// Context with `extra` more working digits.
    pub fn elevated(&self, extra: u32) -> Self {
        Self::new(self.working_digits + extra).expect("elevating keeps the minimum")
    }

    pub fn real<T>(&self, value: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }

    pub fn complex<T>(&self, value: T) -> Complex
    where
        Complex: rug::Assign<T>,
    {
        Complex::with_val(self.bits(), value)
    }

    /// `10^-working_digits` at internal precision.
    pub fn epsilon(&self) -> Float {
        let ten = Float::with_val(self.bits(), 10);
        ten.pow(-i64::from(self.working_digits))
    }

    /// Rounds an internal value to the reported precision.
    pub fn report(&self, x: &Float) -> Float {
        Float::with_val_round(self.working_bits(), x, Round::Nearest).0
    }
}
