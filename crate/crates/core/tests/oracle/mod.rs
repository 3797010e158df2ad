//! Arbitrary-precision reference for representability and ordering.
//!
//! Every finite value of a supported type is a dyadic rational m * 2^e. The
//! decomposition below reads the IEEE bit patterns directly and never goes
//! through the library's own conversions.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use typext::narrowing::{convert_to, will_narrow, Num};
use typext::SoftFloat16;

/// `m * 2^e`, normalized so that `m` is odd or zero (then `e == 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub m: BigInt,
    pub e: i64,
}

impl Dyadic {
    pub fn new(m: BigInt, e: i64) -> Dyadic {
        if m.is_zero() {
            return Dyadic { m, e: 0 };
        }
        let tz = m.trailing_zeros().unwrap_or(0);
        Dyadic {
            m: m >> tz,
            e: e + tz as i64,
        }
    }

    pub fn int(v: i128) -> Dyadic {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Number of significant bits of `|m|`.
    pub fn width(&self) -> u64 {
        self.m.abs().bits()
    }

    pub fn cmp_exact(&self, other: &Dyadic) -> Ordering {
        let e = self.e.min(other.e);
        let a = &self.m << (self.e - e) as usize;
        let b = &other.m << (other.e - e) as usize;
        a.cmp(&b)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        if self.e < 0 {
            None
        } else {
            Some(&self.m << self.e as usize)
        }
    }
}

fn from_ieee(bits: u64, frac_bits: u32, exp_bits: u32) -> Option<Dyadic> {
    let frac = bits & ((1u64 << frac_bits) - 1);
    let exp = (bits >> frac_bits) & ((1u64 << exp_bits) - 1);
    let negative = (bits >> (frac_bits + exp_bits)) & 1 == 1;
    let bias = (1i64 << (exp_bits - 1)) - 1;
    if exp == (1u64 << exp_bits) - 1 {
        return None;
    }
    let (m, e) = if exp == 0 {
        (frac, 1 - bias - frac_bits as i64)
    } else {
        (
            frac | (1u64 << frac_bits),
            exp as i64 - bias - frac_bits as i64,
        )
    };
    let m = BigInt::from(m);
    Some(Dyadic::new(if negative { -m } else { m }, e))
}

/// Exact value of a finite number; `None` for NaN and infinities.
pub trait Exact: Copy {
    fn exact(self) -> Option<Dyadic>;
}

macro_rules! exact_int {
    ($($t:ty),*) => {$(
        impl Exact for $t {
            fn exact(self) -> Option<Dyadic> {
                Some(Dyadic::int(self as i128))
            }
        }
    )*};
}

exact_int!(i8, u8, i16, u16, i32, u32, i64, u64);

impl Exact for f64 {
    fn exact(self) -> Option<Dyadic> {
        from_ieee(self.to_bits(), 52, 11)
    }
}

impl Exact for f32 {
    fn exact(self) -> Option<Dyadic> {
        from_ieee(u64::from(self.to_bits()), 23, 8)
    }
}

impl Exact for SoftFloat16 {
    fn exact(self) -> Option<Dyadic> {
        from_ieee(u64::from(self.to_bits()), 7, 8)
    }
}

/// The set of values a destination type holds.
#[derive(Debug, Clone)]
pub enum Target {
    Int {
        min: BigInt,
        max: BigInt,
    },
    /// Binary float with `p` significand bits (hidden bit included) and
    /// normal exponents `emin..=emax`, with gradual underflow.
    Float {
        p: u64,
        emin: i64,
        emax: i64,
    },
}

fn int_target(min: i128, max: i128) -> Target {
    Target::Int {
        min: BigInt::from(min),
        max: BigInt::from(max),
    }
}

/// Destination description by the type name the library reports.
pub fn target(name: &str) -> Target {
    match name {
        "i8" => int_target(i8::MIN.into(), i8::MAX.into()),
        "u8" => int_target(0, u8::MAX.into()),
        "i16" => int_target(i16::MIN.into(), i16::MAX.into()),
        "u16" => int_target(0, u16::MAX.into()),
        "i32" => int_target(i32::MIN.into(), i32::MAX.into()),
        "u32" => int_target(0, u32::MAX.into()),
        "i64" => int_target(i64::MIN.into(), i64::MAX.into()),
        "u64" => int_target(0, u64::MAX.into()),
        "f32" => Target::Float {
            p: 24,
            emin: -126,
            emax: 127,
        },
        "f64" => Target::Float {
            p: 53,
            emin: -1022,
            emax: 1023,
        },
        "SoftFloat16" => Target::Float {
            p: 8,
            emin: -126,
            emax: 127,
        },
        other => panic!("no oracle target for {other}"),
    }
}

/// Whether `v` is exactly a value of `t`.
pub fn representable(v: &Dyadic, t: &Target) -> bool {
    if v.is_zero() {
        return true;
    }
    match t {
        Target::Int { min, max } => match v.to_integer() {
            Some(i) => *min <= i && i <= *max,
            None => false,
        },
        Target::Float { p, emin, emax } => {
            let l = v.width();
            let top = v.e + l as i64 - 1;
            // the lowest set bit must not fall below the smallest subnormal quantum
            let quantum = emin - *p as i64 + 1;
            l <= *p && v.e >= quantum && top <= *emax
        }
    }
}

/// Reference verdict for `will_narrow::<T, _>(v)`. `None` for non-finite
/// sources, which the reference does not cover.
pub fn narrows<S: Exact>(v: S, to: &str) -> Option<bool> {
    let d = v.exact()?;
    Some(!representable(&d, &target(to)))
}

pub fn pow2(k: u32) -> BigInt {
    BigInt::one() << k as usize
}

/// Reference verdict including non-finite sources: NaN and the infinities
/// carry over between float types and narrow into any integer type.
pub fn narrows_total<S: Exact>(v: S, to: &str) -> bool {
    match narrows(v, to) {
        Some(n) => n,
        None => matches!(target(to), Target::Int { .. }),
    }
}

fn agrees<S: Num + Exact, T: Num + Exact>(v: S) -> bool {
    let expected = narrows_total(v, T::NAME);
    if will_narrow::<T, S>(v) != expected {
        return false;
    }
    match convert_to::<T, S>(v) {
        Ok(t) => !expected && (v.exact().is_none() || t.exact() == v.exact()),
        Err(_) => expected,
    }
}

/// Target type names on which `will_narrow` or `convert_to` disagree with
/// the reference for `v`.
pub fn mismatches<S: Num + Exact>(v: S) -> Vec<&'static str> {
    let mut bad = Vec::new();
    macro_rules! each {
        ($($t:ty),*) => {$(
            if !agrees::<S, $t>(v) {
                bad.push(<$t as Num>::NAME);
            }
        )*};
    }
    each!(i8, u8, i16, u16, i32, u32, i64, u64, f32, f64, SoftFloat16);
    bad
}

/// Test inputs: boundary values and a mixed random distribution that puts
/// weight on small magnitudes and on the neighbourhood of powers of two.
pub trait Sample: Sized + Copy {
    fn boundaries() -> Vec<Self>;
    fn sample<R: rand::Rng>(rng: &mut R) -> Self;
}

macro_rules! sample_int {
    ($($t:ty),*) => {$(
        impl Sample for $t {
            fn boundaries() -> Vec<$t> {
                let mut out = vec![0, 1, <$t>::MIN, <$t>::MAX, <$t>::MIN.wrapping_add(1), <$t>::MAX - 1];
                if <$t>::MIN != 0 {
                    out.push((0 as $t).wrapping_sub(1));
                }
                for k in 0..<$t>::BITS - 1 {
                    let p = (1 as $t) << k;
                    out.extend([p, p - 1, p.wrapping_add(1)]);
                    if <$t>::MIN != 0 {
                        out.extend([p.wrapping_neg(), p.wrapping_neg().wrapping_sub(1), p.wrapping_neg().wrapping_add(1)]);
                    }
                }
                out
            }

            fn sample<R: rand::Rng>(rng: &mut R) -> $t {
                match rng.gen_range(0..4) {
                    0 => rng.gen(),
                    1 => rng.gen_range(-300i32..300) as $t,
                    2 => {
                        let k = rng.gen_range(0..<$t>::BITS);
                        let d: i8 = rng.gen_range(-2..=2);
                        ((1 as $t).wrapping_shl(k)).wrapping_add(d as $t)
                    }
                    _ => rng.gen::<$t>() >> rng.gen_range(0..<$t>::BITS),
                }
            }
        }
    )*};
}

sample_int!(i8, u8, i16, u16, i32, u32, i64, u64);

macro_rules! sample_float {
    ($($t:ty, $bits:ty, $p:expr);*) => {$(
        impl Sample for $t {
            fn boundaries() -> Vec<$t> {
                let mut out = vec![
                    0.0, -0.0, 1.0, -1.0, 0.5, -0.5, 7.8, 255.5, 1e-40, -1e-40,
                    <$t>::MIN, <$t>::MAX, <$t>::MIN_POSITIVE, <$t>::EPSILON,
                    <$t>::from_bits(1), <$t>::INFINITY, <$t>::NEG_INFINITY, <$t>::NAN,
                ];
                for k in 0..130 {
                    let p = (2.0 as $t).powi(k);
                    out.extend([p, -p, p + 1.0, p - 1.0, -p - 1.0, -p + 1.0, 1.0 / p]);
                }
                for k in [7, 8, 9, 15, 16, 23, 24, 25, 31, 32, 52, 53, 54, 63, 64] {
                    let p = (2.0 as $t).powi(k);
                    out.extend([p.next_up_compat(), p.next_down_compat(), -p.next_up_compat()]);
                }
                out
            }

            fn sample<R: rand::Rng>(rng: &mut R) -> $t {
                match rng.gen_range(0..4) {
                    0 => <$t>::from_bits(rng.gen::<$bits>()),
                    1 => rng.gen_range(-70000i64..70000) as $t,
                    2 => {
                        let k = rng.gen_range(0..70);
                        let d = rng.gen_range(-2i64..=2) as $t;
                        let p = (2.0 as $t).powi(k);
                        if rng.gen() { p + d } else { -p + d }
                    }
                    _ => (rng.gen_range(-1.0..1.0) as $t) * (2.0 as $t).powi(rng.gen_range(-30..$p + 10)),
                }
            }
        }
    )*};
}

trait NextCompat {
    fn next_up_compat(self) -> Self;
    fn next_down_compat(self) -> Self;
}

impl NextCompat for f64 {
    fn next_up_compat(self) -> f64 {
        f64::from_bits(self.to_bits() + 1)
    }
    fn next_down_compat(self) -> f64 {
        f64::from_bits(self.to_bits() - 1)
    }
}

impl NextCompat for f32 {
    fn next_up_compat(self) -> f32 {
        f32::from_bits(self.to_bits() + 1)
    }
    fn next_down_compat(self) -> f32 {
        f32::from_bits(self.to_bits() - 1)
    }
}

sample_float!(f64, u64, 53; f32, u32, 24);

impl Sample for SoftFloat16 {
    fn boundaries() -> Vec<SoftFloat16> {
        // the whole type is small enough to list
        (0..=u16::MAX).map(SoftFloat16::from_bits).collect()
    }

    fn sample<R: rand::Rng>(rng: &mut R) -> SoftFloat16 {
        SoftFloat16::from_bits(rng.gen())
    }
}
