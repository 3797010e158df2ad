//! A software 16-bit float with an 8-bit significand (bfloat16 layout).
//!
//! Bit layout: 1 sign bit, 8 exponent bits (bias 127), 7 stored fraction
//! bits. The exponent range matches `f32`, so every value is exactly
//! representable as an `f32` by appending sixteen zero bits.
//!
//! All conversions into the type round to nearest, ties to even.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Default)]
pub struct SoftFloat16 {
    bits: u16,
}

const SIGN_MASK: u16 = 0x8000;
const EXP_MASK: u16 = 0x7F80;
const FRAC_MASK: u16 = 0x007F;
const CANONICAL_NAN: u16 = 0x7FC0;

/// Significand precision, including the implicit bit.
pub(crate) const DIGITS: u32 = 8;
const MIN_NORMAL_EXP: i32 = -126;

impl SoftFloat16 {
    pub const ZERO: SoftFloat16 = SoftFloat16 { bits: 0 };
    pub const INFINITY: SoftFloat16 = SoftFloat16 { bits: EXP_MASK };
    pub const NEG_INFINITY: SoftFloat16 = SoftFloat16 {
        bits: SIGN_MASK | EXP_MASK,
    };
    pub const NAN: SoftFloat16 = SoftFloat16 {
        bits: CANONICAL_NAN,
    };
    /// Largest finite value, (2^8 - 1) * 2^120.
    pub const MAX: SoftFloat16 = SoftFloat16 { bits: 0x7F7F };
    pub const MIN: SoftFloat16 = SoftFloat16 { bits: 0xFF7F };
    /// Smallest positive subnormal, 2^-133.
    pub const MIN_POSITIVE_SUBNORMAL: SoftFloat16 = SoftFloat16 { bits: 0x0001 };

    pub const fn from_bits(bits: u16) -> SoftFloat16 {
        SoftFloat16 { bits }
    }

    pub const fn to_bits(self) -> u16 {
        self.bits
    }

    pub fn is_nan(self) -> bool {
        self.bits & EXP_MASK == EXP_MASK && self.bits & FRAC_MASK != 0
    }

    pub fn is_infinite(self) -> bool {
        self.bits & !SIGN_MASK == EXP_MASK
    }

    pub fn is_finite(self) -> bool {
        self.bits & EXP_MASK != EXP_MASK
    }

    pub fn is_sign_negative(self) -> bool {
        self.bits & SIGN_MASK != 0
    }

    /// Exact widening.
    pub fn to_f32(self) -> f32 {
        f32::from_bits(u32::from(self.bits) << 16)
    }

    /// Exact widening.
    pub fn to_f64(self) -> f64 {
        f64::from(self.to_f32())
    }

    /// Correctly rounded narrowing from `f64`; overflow produces infinity.
    pub fn from_f64(x: f64) -> SoftFloat16 {
        let sign = if x.is_sign_negative() { SIGN_MASK } else { 0 };
        if x.is_nan() {
            return SoftFloat16 {
                bits: sign | CANONICAL_NAN,
            };
        }
        let a = x.abs();
        if a.is_infinite() {
            return SoftFloat16 {
                bits: sign | EXP_MASK,
            };
        }
        if a == 0.0 {
            return SoftFloat16 { bits: sign };
        }
        // Every f64 subnormal lies far below half the smallest subnormal here.
        if a < f64::MIN_POSITIVE {
            return SoftFloat16 { bits: sign };
        }
        let exp = ((a.to_bits() >> 52) as i32) - 1023;
        let quantum_exp = exp.max(MIN_NORMAL_EXP) - (DIGITS as i32 - 1);
        let quantum = pow2(quantum_exp);
        // Both products are exact: scaling by a power of two within range.
        let rounded = (a / quantum).round_ties_even() * quantum;
        if rounded >= pow2(128) {
            return SoftFloat16 {
                bits: sign | EXP_MASK,
            };
        }
        let narrowed = rounded as f32;
        debug_assert_eq!(f64::from(narrowed), rounded);
        SoftFloat16 {
            bits: sign | (narrowed.to_bits() >> 16) as u16,
        }
    }

    pub fn from_f32(x: f32) -> SoftFloat16 {
        SoftFloat16::from_f64(f64::from(x))
    }

    /// Correctly rounded conversion from any integer up to 128 bits.
    pub fn from_i128(v: i128) -> SoftFloat16 {
        let mag = v.unsigned_abs();
        if mag < (1u128 << 53) {
            // exact in f64, so only one rounding happens
            return SoftFloat16::from_f64(v as f64);
        }
        let width = 128 - mag.leading_zeros();
        let shift = width - DIGITS;
        let mut kept = mag >> shift;
        let rem = mag & ((1u128 << shift) - 1);
        let half = 1u128 << (shift - 1);
        if rem > half || (rem == half && kept & 1 == 1) {
            kept += 1;
        }
        // at most nine significant bits: exact in f64
        let magnitude = kept as f64 * pow2(shift as i32);
        SoftFloat16::from_f64(if v < 0 { -magnitude } else { magnitude })
    }
}

fn pow2(exp: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&exp) || exp == 128);
    f64::from_bits(((exp + 1023) as u64) << 52)
}

impl PartialEq for SoftFloat16 {
    fn eq(&self, other: &SoftFloat16) -> bool {
        self.to_f32() == other.to_f32()
    }
}

impl PartialOrd for SoftFloat16 {
    fn partial_cmp(&self, other: &SoftFloat16) -> Option<Ordering> {
        self.to_f32().partial_cmp(&other.to_f32())
    }
}

impl fmt::Debug for SoftFloat16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.to_f32(), f)
    }
}

impl fmt::Display for SoftFloat16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_f32(), f)
    }
}

impl FromStr for SoftFloat16 {
    type Err = std::num::ParseFloatError;

    fn from_str(s: &str) -> Result<SoftFloat16, Self::Err> {
        s.parse::<f64>().map(SoftFloat16::from_f64)
    }
}
