//! Error types. Each one signals a single kind of contract violation.

use thiserror::Error;

/// A numeric conversion would have lost information or changed the meaning
/// of a value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("narrowing conversion: {value} ({from}) cannot be represented as {to}")]
pub struct NarrowError {
    /// Source value rendered with its type's `Display`.
    pub value: String,
    pub from: &'static str,
    pub to: &'static str,
}

/// An index or count failed a span bounds check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("span range error: {bound} out of range for span of length {len}")]
pub struct RangeError {
    pub bound: u64,
    pub len: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormatErrorKind {
    ArgumentMissing,
    TooManyArguments,
}

impl FormatErrorKind {
    pub const fn message(self) -> &'static str {
        match self {
            FormatErrorKind::ArgumentMissing => "argument missing",
            FormatErrorKind::TooManyArguments => "too many arguments",
        }
    }
}

/// The placeholder count of a format string disagreed with the argument count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{} (at byte {position})", kind.message())]
pub struct FormatError {
    pub kind: FormatErrorKind,
    /// Byte offset into the format text: the offending `{` for a missing
    /// argument, the end of the text for surplus arguments.
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverflowKind {
    Overflow,
    DivideByZero,
}

/// An arithmetic result is not representable in the type it was computed in.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {op} of {lhs} and {rhs} in {ty}", match kind {
    OverflowKind::Overflow => "overflow",
    OverflowKind::DivideByZero => "divide-by-zero",
})]
pub struct OverflowError {
    pub kind: OverflowKind,
    pub op: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub ty: &'static str,
}

/// Failure of a checked arithmetic operation on `Number`s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error(transparent)]
    Narrow(#[from] NarrowError),
    #[error(transparent)]
    Overflow(#[from] OverflowError),
}

/// Failure of a span constructor or an indexing operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanError {
    #[error(transparent)]
    Narrow(#[from] NarrowError),
    #[error(transparent)]
    Range(#[from] RangeError),
}

impl SpanError {
    pub fn is_narrow(&self) -> bool {
        matches!(self, SpanError::Narrow(_))
    }

    pub fn is_range(&self) -> bool {
        matches!(self, SpanError::Range(_))
    }
}
