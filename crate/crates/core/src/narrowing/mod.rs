//! Numeric classification and checked conversion.
//!
//! Whether a conversion from `S` to `T` *can* lose information is a property
//! of the two types alone and is decided at compile time by
//! [`can_narrow`]. Only when it can does [`will_narrow`] look at the value.
//! [`convert_to`] performs the conversion or reports a [`NarrowError`].
//!
//! ```
//! use typext::narrowing::{convert_to, will_narrow};
//!
//! assert!(will_narrow::<i32, _>(7.8f64));
//! assert!(convert_to::<u32, _>(-2i32).is_err());
//! assert_eq!(convert_to::<i32, _>(b'0'), Ok(48));
//! ```

mod softfloat;

use std::fmt;

pub use softfloat::SoftFloat16;

use crate::error::{NarrowError, OverflowKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumericKind {
    SignedInt,
    UnsignedInt,
    Float,
}

impl NumericKind {
    pub const fn is_integral(self) -> bool {
        !matches!(self, NumericKind::Float)
    }

    pub const fn is_signed_integral(self) -> bool {
        matches!(self, NumericKind::SignedInt)
    }

    const fn code(self) -> u8 {
        match self {
            NumericKind::SignedInt => 0,
            NumericKind::UnsignedInt => 1,
            NumericKind::Float => 2,
        }
    }
}

/// Compile-time description of a numeric type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NumericTraits {
    pub kind: NumericKind,
    /// Value bits for integers (sign bit excluded); significand precision
    /// including the implicit bit for floats.
    pub digits: u32,
    pub byte_size: u32,
}

impl NumericTraits {
    pub const fn new(kind: NumericKind, digits: u32, byte_size: u32) -> NumericTraits {
        NumericTraits {
            kind,
            digits,
            byte_size,
        }
    }

    /// Checks the structural invariants between kind, digits and size.
    pub const fn is_well_formed(&self) -> bool {
        let bits = 8 * self.byte_size;
        self.digits >= 1
            && self.byte_size >= 1
            && match self.kind {
                NumericKind::SignedInt => self.digits == bits - 1,
                NumericKind::UnsignedInt => self.digits == bits,
                NumericKind::Float => self.digits < bits,
            }
    }

    pub(crate) const fn const_eq(&self, other: &NumericTraits) -> bool {
        self.kind.code() == other.kind.code()
            && self.digits == other.digits
            && self.byte_size == other.byte_size
    }
}

/// Can some value of `src` lose information or change meaning when
/// converted to `dst`?
///
/// This is the type-level predicate: a fractional part may be dropped, the
/// destination may have fewer digits, two equally sized integers may
/// disagree on signedness, or a signed integer may be negative where only
/// unsigned values fit (whatever the destination's size).
pub const fn can_narrow_to(src: NumericTraits, dst: NumericTraits, same_type: bool) -> bool {
    if same_type {
        return false;
    }
    let both_integral = src.kind.is_integral() && dst.kind.is_integral();
    (matches!(src.kind, NumericKind::Float) && dst.kind.is_integral())
        || src.digits > dst.digits
        || (both_integral
            && src.kind.is_signed_integral() != dst.kind.is_signed_integral()
            && src.byte_size == dst.byte_size)
        || (matches!(src.kind, NumericKind::SignedInt)
            && matches!(dst.kind, NumericKind::UnsignedInt))
}

/// [`can_narrow_to`] for a pair of types. Usable in constant contexts.
pub const fn can_narrow<S: Num, T: Num>() -> bool {
    can_narrow_to(S::TRAITS, T::TRAITS, same_num_type::<S, T>())
}

/// Identity of two `Num` types by their registered name and traits.
pub const fn same_num_type<S: Num, T: Num>() -> bool {
    S::TRAITS.const_eq(&T::TRAITS) && str_eq(S::NAME, T::NAME)
}

const fn str_eq(a: &str, b: &str) -> bool {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    if a.len() != b.len() {
        return false;
    }
    let mut i = 0;
    while i < a.len() {
        if a[i] != b[i] {
            return false;
        }
        i += 1;
    }
    true
}

/// A numeric value widened to a carrier that holds every supported type
/// exactly: integers in `i128`, floats in `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WideValue {
    Int(i128),
    Float(f64),
}

impl WideValue {
    /// Mathematical equality of the two represented values. NaN is only
    /// equal to NaN, and only between floats.
    #[inline]
    pub fn same_value(self, other: WideValue) -> bool {
        match (self, other) {
            (WideValue::Int(a), WideValue::Int(b)) => a == b,
            (WideValue::Float(a), WideValue::Float(b)) => a == b || (a.is_nan() && b.is_nan()),
            (WideValue::Int(i), WideValue::Float(f)) | (WideValue::Float(f), WideValue::Int(i)) => {
                float_equals_int(f, i)
            }
        }
    }

    /// Exact ordering of the represented values; `None` when either is NaN.
    #[inline]
    pub fn exact_cmp(self, other: WideValue) -> Option<std::cmp::Ordering> {
        match (self, other) {
            (WideValue::Int(a), WideValue::Int(b)) => Some(a.cmp(&b)),
            (WideValue::Float(a), WideValue::Float(b)) => a.partial_cmp(&b),
            (WideValue::Int(i), WideValue::Float(f)) => cmp_float_int(f, i).map(|o| o.reverse()),
            (WideValue::Float(f), WideValue::Int(i)) => cmp_float_int(f, i),
        }
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        match self {
            WideValue::Int(i) => i < 0,
            WideValue::Float(f) => f < 0.0,
        }
    }
}

// 2^127 as f64; every i128 lies in [-2^127, 2^127).
const I128_BOUND: f64 = 170141183460469231731687303715884105728.0;

#[inline]
fn float_equals_int(f: f64, i: i128) -> bool {
    f.fract() == 0.0 && (-I128_BOUND..I128_BOUND).contains(&f) && f as i128 == i
}

#[inline]
fn cmp_float_int(f: f64, i: i128) -> Option<std::cmp::Ordering> {
    use std::cmp::Ordering;
    if f.is_nan() {
        return None;
    }
    if f >= I128_BOUND {
        return Some(Ordering::Greater);
    }
    if f < -I128_BOUND {
        return Some(Ordering::Less);
    }
    // floor(f) is exactly representable as i128 in this range
    let floor = f.floor();
    let fi = floor as i128;
    Some(match fi.cmp(&i) {
        Ordering::Equal if floor != f => Ordering::Greater,
        other => other,
    })
}

/// A numeric type that participates in checked conversion.
///
/// Implemented for the 8/16/32/64-bit integers, `f32`, `f64` and
/// [`SoftFloat16`]. Other types may implement it as long as their traits,
/// wide value and casting behave like a fixed-width binary number.
pub trait Num:
    Copy + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const NAME: &'static str;
    const TRAITS: NumericTraits;
    /// Lowest finite value.
    const MIN: Self;
    /// Largest finite value.
    const MAX: Self;
    const ZERO: Self;

    fn to_wide(self) -> WideValue;

    /// Unchecked host-style cast: integers wrap, floats round to nearest,
    /// floats into integers truncate and saturate.
    fn cast_from_wide(w: WideValue) -> Self;

    fn checked_add(self, rhs: Self) -> Result<Self, OverflowKind>;
    fn checked_sub(self, rhs: Self) -> Result<Self, OverflowKind>;
    fn checked_mul(self, rhs: Self) -> Result<Self, OverflowKind>;
    fn checked_div(self, rhs: Self) -> Result<Self, OverflowKind>;

    fn is_negative(self) -> bool {
        self.to_wide().is_negative()
    }
}

macro_rules! impl_num_int {
    ($($t:ty => $kind:ident),* $(,)?) => {$(
        impl Num for $t {
            const NAME: &'static str = stringify!($t);
            const TRAITS: NumericTraits =
                NumericTraits::new(NumericKind::$kind, <$t>::BITS - (<$t>::MIN != 0) as u32, std::mem::size_of::<$t>() as u32);
            const MIN: $t = <$t>::MIN;
            const MAX: $t = <$t>::MAX;
            const ZERO: $t = 0;

            #[inline]
            fn to_wide(self) -> WideValue {
                WideValue::Int(self as i128)
            }

            #[inline]
            fn cast_from_wide(w: WideValue) -> $t {
                match w {
                    WideValue::Int(i) => i as $t,
                    WideValue::Float(f) => f as $t,
                }
            }

            #[inline]
            fn checked_add(self, rhs: $t) -> Result<$t, OverflowKind> {
                <$t>::checked_add(self, rhs).ok_or(OverflowKind::Overflow)
            }

            #[inline]
            fn checked_sub(self, rhs: $t) -> Result<$t, OverflowKind> {
                <$t>::checked_sub(self, rhs).ok_or(OverflowKind::Overflow)
            }

            #[inline]
            fn checked_mul(self, rhs: $t) -> Result<$t, OverflowKind> {
                <$t>::checked_mul(self, rhs).ok_or(OverflowKind::Overflow)
            }

            #[inline]
            fn checked_div(self, rhs: $t) -> Result<$t, OverflowKind> {
                if rhs == 0 {
                    return Err(OverflowKind::DivideByZero);
                }
                <$t>::checked_div(self, rhs).ok_or(OverflowKind::Overflow)
            }

            #[inline]
            fn is_negative(self) -> bool {
                #[allow(unused_comparisons)]
                { self < 0 }
            }
        }
    )*};
}

impl_num_int!(
    i8 => SignedInt, u8 => UnsignedInt,
    i16 => SignedInt, u16 => UnsignedInt,
    i32 => SignedInt, u32 => UnsignedInt,
    i64 => SignedInt, u64 => UnsignedInt,
);

// Floating-point arithmetic follows IEEE 754: overflow yields infinity and
// is not reported as an error.
macro_rules! impl_num_float {
    ($($t:ident),*) => {$(
        impl Num for $t {
            const NAME: &'static str = stringify!($t);
            const TRAITS: NumericTraits =
                NumericTraits::new(NumericKind::Float, <$t>::MANTISSA_DIGITS, std::mem::size_of::<$t>() as u32);
            const MIN: $t = <$t>::MIN;
            const MAX: $t = <$t>::MAX;
            const ZERO: $t = 0.0;

            #[inline]
            fn to_wide(self) -> WideValue {
                WideValue::Float(self as f64)
            }

            #[inline]
            fn cast_from_wide(w: WideValue) -> $t {
                match w {
                    WideValue::Int(i) => i as $t,
                    WideValue::Float(f) => f as $t,
                }
            }

            #[inline]
            fn checked_add(self, rhs: $t) -> Result<$t, OverflowKind> {
                Ok(self + rhs)
            }

            #[inline]
            fn checked_sub(self, rhs: $t) -> Result<$t, OverflowKind> {
                Ok(self - rhs)
            }

            #[inline]
            fn checked_mul(self, rhs: $t) -> Result<$t, OverflowKind> {
                Ok(self * rhs)
            }

            #[inline]
            fn checked_div(self, rhs: $t) -> Result<$t, OverflowKind> {
                Ok(self / rhs)
            }
        }
    )*};
}

impl_num_float!(f32, f64);

impl Num for SoftFloat16 {
    const NAME: &'static str = "SoftFloat16";
    const TRAITS: NumericTraits = NumericTraits::new(NumericKind::Float, softfloat::DIGITS, 2);
    const MIN: SoftFloat16 = SoftFloat16::MIN;
    const MAX: SoftFloat16 = SoftFloat16::MAX;
    const ZERO: SoftFloat16 = SoftFloat16::ZERO;

    fn to_wide(self) -> WideValue {
        WideValue::Float(self.to_f64())
    }

    fn cast_from_wide(w: WideValue) -> SoftFloat16 {
        match w {
            WideValue::Int(i) => SoftFloat16::from_i128(i),
            WideValue::Float(f) => SoftFloat16::from_f64(f),
        }
    }

    // f64 carries more than twice the precision plus two bits, so rounding
    // the f64 result again gives the correctly rounded result.
    fn checked_add(self, rhs: SoftFloat16) -> Result<SoftFloat16, OverflowKind> {
        Ok(SoftFloat16::from_f64(self.to_f64() + rhs.to_f64()))
    }

    fn checked_sub(self, rhs: SoftFloat16) -> Result<SoftFloat16, OverflowKind> {
        Ok(SoftFloat16::from_f64(self.to_f64() - rhs.to_f64()))
    }

    fn checked_mul(self, rhs: SoftFloat16) -> Result<SoftFloat16, OverflowKind> {
        Ok(SoftFloat16::from_f64(self.to_f64() * rhs.to_f64()))
    }

    fn checked_div(self, rhs: SoftFloat16) -> Result<SoftFloat16, OverflowKind> {
        Ok(SoftFloat16::from_f64(self.to_f64() / rhs.to_f64()))
    }
}

/// Would converting `value` to `T` lose information or change its meaning?
///
/// When [`can_narrow`] is false for the pair this is the constant `false`
/// and the value is never inspected.
#[inline]
pub fn will_narrow<T: Num, S: Num>(value: S) -> bool {
    if !const { can_narrow::<S, T>() } {
        return false;
    }
    let wide = value.to_wide();
    if let (WideValue::Int(v), WideValue::Int(lo), WideValue::Int(hi)) =
        (wide, T::MIN.to_wide(), T::MAX.to_wide())
    {
        return v < lo || v > hi;
    }
    !T::cast_from_wide(wide).to_wide().same_value(wide)
}

/// Converts `value` to `T`, refusing any conversion that would narrow.
///
/// On success the result is mathematically equal to the input.
#[inline]
pub fn convert_to<T: Num, S: Num>(value: S) -> Result<T, NarrowError> {
    if will_narrow::<T, S>(value) {
        return Err(NarrowError {
            value: value.to_string(),
            from: S::NAME,
            to: T::NAME,
        });
    }
    Ok(T::cast_from_wide(value.to_wide()))
}

/// Explicit construction for non-numeric types, where no narrowing check
/// applies. Only lossless `From` conversions are accepted, so a pair the
/// compiler cannot prove lossless is rejected at build time.
///
/// ```
/// use typext::narrowing::convert_explicit;
///
/// let owned: String = convert_explicit("abc");
/// assert_eq!(owned, "abc");
/// ```
pub fn convert_explicit<T: From<U>, U>(value: U) -> T {
    T::from(value)
}

/// Element conversion used by converting constructors such as
/// [`Pair::convert_from`]: checked for numeric types, explicit otherwise.
pub trait ConvertTo<T> {
    fn convert(self) -> Result<T, NarrowError>;
}

impl<S: Num, T: Num> ConvertTo<T> for S {
    fn convert(self) -> Result<T, NarrowError> {
        convert_to::<T, S>(self)
    }
}

macro_rules! impl_explicit_convert {
    ($($src:ty => $dst:ty),* $(,)?) => {$(
        impl ConvertTo<$dst> for $src {
            fn convert(self) -> Result<$dst, NarrowError> {
                Ok(convert_explicit(self))
            }
        }
    )*};
}

impl_explicit_convert!(
    String => String,
    &str => String,
    Box<str> => String,
    char => String,
    bool => bool,
    char => char,
);

/// A two-element record whose converting constructor checks each element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Pair<T, U> {
    pub first: T,
    pub second: U,
}

impl<T, U> Pair<T, U> {
    pub fn new(first: T, second: U) -> Pair<T, U> {
        Pair { first, second }
    }

    pub fn convert_from<T2, U2>(other: Pair<T2, U2>) -> Result<Pair<T, U>, NarrowError>
    where
        T2: ConvertTo<T>,
        U2: ConvertTo<U>,
    {
        Ok(Pair {
            first: other.first.convert()?,
            second: other.second.convert()?,
        })
    }
}

/// Runtime identifier for the built-in numeric types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NumType {
    I8,
    U8,
    I16,
    U16,
    I32,
    U32,
    I64,
    U64,
    F32,
    F64,
    SoftFloat16,
}

impl NumType {
    pub const ALL: [NumType; 11] = [
        NumType::I8,
        NumType::U8,
        NumType::I16,
        NumType::U16,
        NumType::I32,
        NumType::U32,
        NumType::I64,
        NumType::U64,
        NumType::F32,
        NumType::F64,
        NumType::SoftFloat16,
    ];

    pub const fn traits(self) -> NumericTraits {
        match self {
            NumType::I8 => i8::TRAITS,
            NumType::U8 => u8::TRAITS,
            NumType::I16 => i16::TRAITS,
            NumType::U16 => u16::TRAITS,
            NumType::I32 => i32::TRAITS,
            NumType::U32 => u32::TRAITS,
            NumType::I64 => i64::TRAITS,
            NumType::U64 => u64::TRAITS,
            NumType::F32 => f32::TRAITS,
            NumType::F64 => f64::TRAITS,
            NumType::SoftFloat16 => SoftFloat16::TRAITS,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            NumType::I8 => i8::NAME,
            NumType::U8 => u8::NAME,
            NumType::I16 => i16::NAME,
            NumType::U16 => u16::NAME,
            NumType::I32 => i32::NAME,
            NumType::U32 => u32::NAME,
            NumType::I64 => i64::NAME,
            NumType::U64 => u64::NAME,
            NumType::F32 => f32::NAME,
            NumType::F64 => f64::NAME,
            NumType::SoftFloat16 => SoftFloat16::NAME,
        }
    }

    /// Traits uniquely identify the built-in types.
    pub fn from_traits(traits: NumericTraits) -> Option<NumType> {
        NumType::ALL.into_iter().find(|t| t.traits() == traits)
    }

    /// Accepts the Rust names plus `bf16` as an alias for `SoftFloat16`.
    pub fn parse(name: &str) -> Option<NumType> {
        match name {
            "bf16" | "softfloat16" => Some(NumType::SoftFloat16),
            _ => NumType::ALL.into_iter().find(|t| t.name() == name),
        }
    }

    pub fn can_narrow_to(self, dst: NumType) -> bool {
        can_narrow_to(self.traits(), dst.traits(), self == dst)
    }
}

impl fmt::Display for NumType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const fn traits_of<T: Num>() -> NumericTraits {
    T::TRAITS
}
