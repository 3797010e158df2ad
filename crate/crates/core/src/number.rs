//! `Number<T>`: a `T` that never suffers a narrowing conversion.
//!
//! Construction and assignment go through [`convert_to`]. Mixed-type
//! arithmetic converts both operands into their common type (checked) and
//! then computes with overflow detection. Comparisons are mathematically
//! correct across signedness, so `-1 < 2u32` holds.
//!
//! ```
//! use typext::number::Number;
//!
//! let mut ii = Number::<u32>::new(0).unwrap();
//! assert!(ii.assign(2).is_ok());
//! assert!(ii.assign(-2).is_err());
//! assert_eq!(ii.get(), 2);
//!
//! assert!(Number::from(-1i32) < Number::from(2u32));
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use crate::error::{ArithError, NarrowError, OverflowError, OverflowKind};
use crate::narrowing::{convert_to, Num, NumericKind, NumericTraits, SoftFloat16};

/// Common-type selection for a pair of numeric types.
///
/// A float beats an integer; within a kind the type with more digits wins;
/// for equal-size integers of opposite signedness the unsigned type is
/// chosen (its digit count is one larger). The rule is commutative.
pub const fn common_type(a: NumericTraits, b: NumericTraits) -> NumericTraits {
    let a_float = matches!(a.kind, NumericKind::Float);
    let b_float = matches!(b.kind, NumericKind::Float);
    if a_float != b_float {
        return if a_float { a } else { b };
    }
    if a.digits != b.digits {
        return if a.digits > b.digits { a } else { b };
    }
    if matches!(a.kind, NumericKind::UnsignedInt) {
        a
    } else {
        b
    }
}

/// The type in which mixed `Number` arithmetic executes.
pub trait CommonWith<Rhs: Num>: Num {
    type Output: Num;
}

pub type Common<A, B> = <A as CommonWith<B>>::Output;

macro_rules! common_row {
    ($a:ident: $($b:ident => $c:ident),*) => {
        $(impl CommonWith<$b> for $a {
            type Output = $c;
        })*
    };
}

macro_rules! common_table {
    ($($a:ident: [$($cells:tt)*];)*) => {
        $(common_row!($a: $($cells)*);)*
    };
}

// Frozen lattice; a unit test checks every cell against `common_type`.
common_table! {
    i8: [i8 => i8, u8 => u8, i16 => i16, u16 => u16, i32 => i32, u32 => u32, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    u8: [i8 => u8, u8 => u8, i16 => i16, u16 => u16, i32 => i32, u32 => u32, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    i16: [i8 => i16, u8 => i16, i16 => i16, u16 => u16, i32 => i32, u32 => u32, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    u16: [i8 => u16, u8 => u16, i16 => u16, u16 => u16, i32 => i32, u32 => u32, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    i32: [i8 => i32, u8 => i32, i16 => i32, u16 => i32, i32 => i32, u32 => u32, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    u32: [i8 => u32, u8 => u32, i16 => u32, u16 => u32, i32 => u32, u32 => u32, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    i64: [i8 => i64, u8 => i64, i16 => i64, u16 => i64, i32 => i64, u32 => i64, i64 => i64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    u64: [i8 => u64, u8 => u64, i16 => u64, u16 => u64, i32 => u64, u32 => u64, i64 => u64, u64 => u64, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
    f32: [i8 => f32, u8 => f32, i16 => f32, u16 => f32, i32 => f32, u32 => f32, i64 => f32, u64 => f32, f32 => f32, f64 => f64, SoftFloat16 => f32];
    f64: [i8 => f64, u8 => f64, i16 => f64, u16 => f64, i32 => f64, u32 => f64, i64 => f64, u64 => f64, f32 => f64, f64 => f64, SoftFloat16 => f64];
    SoftFloat16: [i8 => SoftFloat16, u8 => SoftFloat16, i16 => SoftFloat16, u16 => SoftFloat16, i32 => SoftFloat16, u32 => SoftFloat16, i64 => SoftFloat16, u64 => SoftFloat16, f32 => f32, f64 => f64, SoftFloat16 => SoftFloat16];
}

/// A numeric value whose every construction and assignment is checked.
#[derive(Clone, Copy)]
pub struct Number<T: Num> {
    val: T,
}

impl<T: Num> Number<T> {
    /// Checked construction from any numeric value.
    pub fn new<U: Num>(value: U) -> Result<Number<T>, NarrowError> {
        Ok(Number {
            val: convert_to::<T, U>(value)?,
        })
    }

    /// Checked assignment. On error `self` is left unchanged.
    pub fn assign<U: Num>(&mut self, value: U) -> Result<(), NarrowError> {
        self.val = convert_to::<T, U>(value)?;
        Ok(())
    }

    #[inline]
    pub fn get(self) -> T {
        self.val
    }

    /// Converts into a `Number` of another type.
    pub fn convert<U: Num>(self) -> Result<Number<U>, NarrowError> {
        Number::new(self.val)
    }

    pub fn checked_add<U: Num>(self, rhs: Number<U>) -> Result<Number<Common<T, U>>, ArithError>
    where
        T: CommonWith<U>,
    {
        arith(self, rhs, "add", Num::checked_add)
    }

    pub fn checked_sub<U: Num>(self, rhs: Number<U>) -> Result<Number<Common<T, U>>, ArithError>
    where
        T: CommonWith<U>,
    {
        arith(self, rhs, "sub", Num::checked_sub)
    }

    pub fn checked_mul<U: Num>(self, rhs: Number<U>) -> Result<Number<Common<T, U>>, ArithError>
    where
        T: CommonWith<U>,
    {
        arith(self, rhs, "mul", Num::checked_mul)
    }

    pub fn checked_div<U: Num>(self, rhs: Number<U>) -> Result<Number<Common<T, U>>, ArithError>
    where
        T: CommonWith<U>,
    {
        arith(self, rhs, "div", Num::checked_div)
    }
}

/// Wraps a value in a `Number` of its own type. Never fails.
pub fn deduce<T: Num>(value: T) -> Number<T> {
    Number { val: value }
}

impl<T: Num> From<T> for Number<T> {
    fn from(value: T) -> Number<T> {
        deduce(value)
    }
}

type CheckedOp<C> = fn(C, C) -> Result<C, OverflowKind>;

fn arith<A, B>(
    x: Number<A>,
    y: Number<B>,
    op: &'static str,
    f: CheckedOp<Common<A, B>>,
) -> Result<Number<Common<A, B>>, ArithError>
where
    A: CommonWith<B>,
    B: Num,
{
    let lhs = convert_to::<Common<A, B>, A>(x.val)?;
    let rhs = convert_to::<Common<A, B>, B>(y.val)?;
    match f(lhs, rhs) {
        Ok(val) => Ok(Number { val }),
        Err(kind) => Err(ArithError::Overflow(OverflowError {
            kind,
            op,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            ty: <Common<A, B> as Num>::NAME,
        })),
    }
}

macro_rules! impl_binop {
    ($($tr:ident $method:ident $checked:ident),*) => {$(
        impl<A, B> $tr<Number<B>> for Number<A>
        where
            A: CommonWith<B>,
            B: Num,
        {
            type Output = Result<Number<Common<A, B>>, ArithError>;

            fn $method(self, rhs: Number<B>) -> Self::Output {
                self.$checked(rhs)
            }
        }
    )*};
}

impl_binop!(Add add checked_add, Sub sub checked_sub, Mul mul checked_mul, Div div checked_div);

/// Mathematically correct comparison of two numeric values of possibly
/// different types. `None` only when a NaN is involved.
pub fn compare<A, B>(x: A, y: B) -> Option<Ordering>
where
    A: CommonWith<B>,
    B: Num,
{
    let (ka, kb) = (A::TRAITS.kind, B::TRAITS.kind);
    if ka == NumericKind::SignedInt && kb == NumericKind::UnsignedInt && x.is_negative() {
        return Some(Ordering::Less);
    }
    if ka == NumericKind::UnsignedInt && kb == NumericKind::SignedInt && y.is_negative() {
        return Some(Ordering::Greater);
    }
    if ka == NumericKind::Float || kb == NumericKind::Float {
        // a float common type may not hold the integer operand exactly
        return x.to_wide().exact_cmp(y.to_wide());
    }
    // Past the sign checks both operands fit the integer common type.
    let cx = <Common<A, B> as Num>::cast_from_wide(x.to_wide());
    let cy = <Common<A, B> as Num>::cast_from_wide(y.to_wide());
    debug_assert!(cx.to_wide() == x.to_wide() && cy.to_wide() == y.to_wide());
    cx.partial_cmp(&cy)
}

/// `x < y` with mathematically correct mixed-sign semantics.
pub fn compare_lt<A, B>(x: Number<A>, y: Number<B>) -> bool
where
    A: CommonWith<B>,
    B: Num,
{
    compare(x.val, y.val) == Some(Ordering::Less)
}

impl<A, B> PartialEq<Number<B>> for Number<A>
where
    A: CommonWith<B>,
    B: Num,
{
    fn eq(&self, other: &Number<B>) -> bool {
        compare(self.val, other.val) == Some(Ordering::Equal)
    }
}

impl<A, B> PartialOrd<Number<B>> for Number<A>
where
    A: CommonWith<B>,
    B: Num,
{
    fn partial_cmp(&self, other: &Number<B>) -> Option<Ordering> {
        compare(self.val, other.val)
    }
}

impl<A, B> PartialEq<B> for Number<A>
where
    A: CommonWith<B>,
    B: Num,
{
    fn eq(&self, other: &B) -> bool {
        *self == deduce(*other)
    }
}

impl<A, B> PartialOrd<B> for Number<A>
where
    A: CommonWith<B>,
    B: Num,
{
    fn partial_cmp(&self, other: &B) -> Option<Ordering> {
        compare(self.val, *other)
    }
}

impl<T: Num> fmt::Debug for Number<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Number").field(&self.val).finish()
    }
}

impl<T: Num> fmt::Display for Number<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.val, f)
    }
}

impl<T: Num> Default for Number<T> {
    fn default() -> Number<T> {
        Number { val: T::ZERO }
    }
}
