//! User-defined type-system extensions.
//!
//! * [`narrowing`]: compile-time narrowing classification and checked
//!   numeric conversion.
//! * [`number`]: `Number<T>`, a numeric wrapper with checked construction,
//!   checked mixed-type arithmetic and sign-correct comparison.
//! * [`span`]: a bounds-checked view over contiguous elements.
//! * [`rangealg`]: sorting dispatched on range capabilities, value
//!   constrained buffers, and `draw_all`.
//! * [`printfmt`]: concatenating print and a `{}` formatter that checks the
//!   argument count.
//! * [`reflectlayout`]: member layout descriptors for `#[repr(C)]` records.

// Lets the derive macro's `::typext::` paths resolve inside this crate.
extern crate self as typext;

pub mod error;
pub mod narrowing;
pub mod number;
pub mod printfmt;
pub mod rangealg;
pub mod reflectlayout;
pub mod span;

pub use error::{
    ArithError, FormatError, FormatErrorKind, NarrowError, OverflowError, OverflowKind, RangeError,
    SpanError,
};
pub use narrowing::{
    can_narrow, can_narrow_to, convert_explicit, convert_to, will_narrow, Num, NumType,
    NumericKind, NumericTraits, SoftFloat16,
};
pub use number::{common_type, compare_lt, deduce, Common, CommonWith, Number};
pub use rangealg::{SortDispatchReport, SortPath};
pub use reflectlayout::{layout_of, Layout, MemberDescriptor};
pub use span::{Span, Spanable};
