//! Scalar abstraction shared by the generic numerical kernels.
//!
//! Multiprecision types carry their own precision, so constructors take a
//! `like` argument whose precision the new value inherits. Machine floats
//! ignore it.

use std::f64::consts::{LOG10_2, PI};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{ToPrimitive, Zero};
use rug::{Float, Integer, Rational};

/// Exact or approximate field arithmetic.
pub trait Field:
    Clone
    + Send
    + Sync
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_integer_like(n: &Integer, like: &Self) -> Self;
    fn from_rational_like(q: &Rational, like: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// `log10 |x|` as a machine estimate; `-inf` for zero.
    fn log10_abs(&self) -> f64;

    fn zero_like(&self) -> Self {
        Self::from_i64_like(0, self)
    }

    fn one_like(&self) -> Self {
        Self::from_i64_like(1, self)
    }

    fn from_i64_like(n: i64, like: &Self) -> Self {
        Self::from_integer_like(&Integer::from(n), like)
    }
}

/// Real or complex scalars with elementary transcendental functions.
pub trait Analytic: Field {
    fn from_f64_like(x: f64, like: &Self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn pi_like(like: &Self) -> Self;
    fn re_f64(&self) -> f64;
    fn im_f64(&self) -> f64;
    /// Adds `2*pi*i*turns`. Real scalars only accept `turns == 0`.
    fn add_turns(self, turns: i64) -> Option<Self>;
    /// Precision in bits.
    fn precision_bits(&self) -> u32;

    fn arg_f64(&self) -> f64 {
        self.im_f64().atan2(self.re_f64())
    }
}

fn log10_float(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    if !x.is_finite() {
        return f64::INFINITY;
    }
    let (m, e) = x.to_f64_exp();
    m.abs().log10() + f64::from(e) * LOG10_2
}

fn log10_integer(n: &Integer) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (m, e) = n.to_f64_exp();
    m.abs().log10() + e as f64 * LOG10_2
}

fn log10_hypot(re: f64, im: f64) -> f64 {
    let hi = re.max(im);
    let lo = re.min(im);
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + 0.5 * (1.0 + 10f64.powf(2.0 * (lo - hi))).log10()
}

impl Field for Float {
    fn from_integer_like(n: &Integer, like: &Self) -> Self {
        Float::with_val(like.prec(), n)
    }
    fn from_rational_like(q: &Rational, like: &Self) -> Self {
        Float::with_val(like.prec(), q)
    }
    fn is_zero(&self) -> bool {
        Float::is_zero(self)
    }
    fn log10_abs(&self) -> f64 {
        log10_float(self)
    }
}

impl Analytic for Float {
    fn from_f64_like(x: f64, like: &Self) -> Self {
        Float::with_val(like.prec(), x)
    }
    fn ln(&self) -> Self {
        self.clone().ln()
    }
    fn exp(&self) -> Self {
        self.clone().exp()
    }
    fn sqrt(&self) -> Self {
        self.clone().sqrt()
    }
    fn pi_like(like: &Self) -> Self {
        Float::with_val(like.prec(), rug::float::Constant::Pi)
    }
    fn re_f64(&self) -> f64 {
        self.to_f64()
    }
    fn im_f64(&self) -> f64 {
        0.0
    }
    fn add_turns(self, turns: i64) -> Option<Self> {
        (turns == 0).then_some(self)
    }
    fn precision_bits(&self) -> u32 {
        self.prec()
    }
    fn arg_f64(&self) -> f64 {
        if self.is_sign_negative() {
            PI
        } else {
            0.0
        }
    }
}

impl Field for rug::Complex {
    fn from_integer_like(n: &Integer, like: &Self) -> Self {
        rug::Complex::with_val(like.prec(), n)
    }
    fn from_rational_like(q: &Rational, like: &Self) -> Self {
        rug::Complex::with_val(like.prec(), q)
    }
    fn is_zero(&self) -> bool {
        self.real().is_zero() && self.imag().is_zero()
    }
    fn log10_abs(&self) -> f64 {
        log10_hypot(log10_float(self.real()), log10_float(self.imag()))
    }
}

impl Analytic for rug::Complex {
    fn from_f64_like(x: f64, like: &Self) -> Self {
        rug::Complex::with_val(like.prec(), x)
    }
    fn ln(&self) -> Self {
        self.clone().ln()
    }
    fn exp(&self) -> Self {
        self.clone().exp()
    }
    fn sqrt(&self) -> Self {
        self.clone().sqrt()
    }
    fn pi_like(like: &Self) -> Self {
        let prec = like.prec();
        rug::Complex::with_val(prec, (Float::with_val(prec.0, rug::float::Constant::Pi), 0))
    }
    fn re_f64(&self) -> f64 {
        self.real().to_f64()
    }
    fn im_f64(&self) -> f64 {
        self.imag().to_f64()
    }
    fn add_turns(mut self, turns: i64) -> Option<Self> {
        if turns != 0 {
            let prec = self.imag().prec();
            let two_pi: Float = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
            *self.mut_imag() += two_pi * turns;
        }
        Some(self)
    }
    fn precision_bits(&self) -> u32 {
        self.prec().0
    }
}

impl Field for Rational {
    fn from_integer_like(n: &Integer, _like: &Self) -> Self {
        Rational::from(n)
    }
    fn from_rational_like(q: &Rational, _like: &Self) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        self.numer().is_zero()
    }
    fn log10_abs(&self) -> f64 {
        log10_integer(self.numer()) - log10_integer(self.denom())
    }
}

macro_rules! machine_float {
    ($t:ty, $bits:expr) => {
        impl Field for $t {
            fn from_integer_like(n: &Integer, _like: &Self) -> Self {
                n.to_f64() as $t
            }
            fn from_rational_like(q: &Rational, _like: &Self) -> Self {
                q.to_f64() as $t
            }
            fn is_zero(&self) -> bool {
                *self == 0.0
            }
            fn log10_abs(&self) -> f64 {
                f64::from(self.abs()).log10()
            }
        }

        impl Analytic for $t {
            fn from_f64_like(x: f64, _like: &Self) -> Self {
                x as $t
            }
            fn ln(&self) -> Self {
                num_traits::Float::ln(*self)
            }
            fn exp(&self) -> Self {
                num_traits::Float::exp(*self)
            }
            fn sqrt(&self) -> Self {
                num_traits::Float::sqrt(*self)
            }
            fn pi_like(_like: &Self) -> Self {
                <$t as num_traits::FloatConst>::PI()
            }
            fn re_f64(&self) -> f64 {
                f64::from(*self)
            }
            fn im_f64(&self) -> f64 {
                0.0
            }
            fn add_turns(self, turns: i64) -> Option<Self> {
                (turns == 0).then_some(self)
            }
            fn precision_bits(&self) -> u32 {
                $bits
            }
            fn arg_f64(&self) -> f64 {
                if num_traits::Float::is_sign_negative(*self) {
                    PI
                } else {
                    0.0
                }
            }
        }
    };
}

machine_float!(f32, 24);
machine_float!(f64, 53);

impl Field for Complex<f64> {
    fn from_integer_like(n: &Integer, _like: &Self) -> Self {
        Complex::new(n.to_f64(), 0.0)
    }
    fn from_rational_like(q: &Rational, _like: &Self) -> Self {
        Complex::new(q.to_f64(), 0.0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn log10_abs(&self) -> f64 {
        self.norm().log10()
    }
}

impl Analytic for Complex<f64> {
    fn from_f64_like(x: f64, _like: &Self) -> Self {
        Complex::new(x, 0.0)
    }
    fn ln(&self) -> Self {
        Complex::ln(*self)
    }
    fn exp(&self) -> Self {
        Complex::exp(*self)
    }
    fn sqrt(&self) -> Self {
        Complex::sqrt(*self)
    }
    fn pi_like(_like: &Self) -> Self {
        Complex::new(PI, 0.0)
    }
    fn re_f64(&self) -> f64 {
        self.re
    }
    fn im_f64(&self) -> f64 {
        self.im
    }
    fn add_turns(self, turns: i64) -> Option<Self> {
        Some(self + Complex::new(0.0, 2.0 * PI * turns.to_f64().unwrap_or(0.0)))
    }
    fn precision_bits(&self) -> u32 {
        53
    }
}

/// Decimal digits carried by a binary mantissa of `bits` bits.
pub fn bits_to_digits(bits: u32) -> f64 {
    f64::from(bits) * LOG10_2
}
