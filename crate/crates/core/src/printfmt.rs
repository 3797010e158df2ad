//! Checked variadic printing.
//!
//! [`format_render`] substitutes `{}` placeholders left to right and fails
//! when the number of placeholders and arguments disagree. A `{` followed by
//! any other character is copied through together with that character, and
//! there is no escape for a literal `{}`.
//!
//! ```
//! use typext::{format_checked, print_concat};
//! use typext::FormatErrorKind;
//!
//! assert_eq!(print_concat!("Hello ", "world", '!'), "Hello world!");
//! assert_eq!(format_checked!("{} + {} = {}", 1, 2, 3).unwrap(), "1 + 2 = 3");
//! assert_eq!(format_checked!("{}").unwrap_err().kind, FormatErrorKind::ArgumentMissing);
//! assert_eq!(format_checked!("x", 1).unwrap_err().kind, FormatErrorKind::TooManyArguments);
//! ```

use std::fmt::{Display, Write};

use crate::error::{FormatError, FormatErrorKind};

/// Anything with a text rendering.
pub type PrintableValue<'a> = &'a dyn Display;

/// Concatenates the renderings of `args` in order.
pub fn print_concat(args: &[PrintableValue<'_>]) -> String {
    let mut out = String::new();
    for a in args {
        write!(out, "{a}").expect("writing to a String cannot fail");
    }
    out
}

/// Renders `fmt`, replacing each `{}` with the next argument.
pub fn format_render(fmt: &str, args: &[PrintableValue<'_>]) -> Result<String, FormatError> {
    let mut out = String::with_capacity(fmt.len());
    let mut remaining = args.iter();
    let mut chars = fmt.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        if c != '{' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some((_, '}')) => match remaining.next() {
                Some(arg) => write!(out, "{arg}").expect("writing to a String cannot fail"),
                None => {
                    return Err(FormatError {
                        kind: FormatErrorKind::ArgumentMissing,
                        position: pos,
                    })
                }
            },
            Some((_, other)) => {
                out.push('{');
                out.push(other);
            }
            // a trailing '{' is copied and ends the text
            None => out.push('{'),
        }
    }
    if remaining.next().is_some() {
        return Err(FormatError {
            kind: FormatErrorKind::TooManyArguments,
            position: fmt.len(),
        });
    }
    Ok(out)
}

/// Counts the placeholders [`format_render`] would consume.
pub fn placeholder_count(fmt: &str) -> usize {
    let mut n = 0;
    let mut chars = fmt.chars();
    while let Some(c) = chars.next() {
        if c == '{' && chars.next() == Some('}') {
            n += 1;
        }
    }
    n
}

/// `print_concat` over heterogeneous arguments.
#[macro_export]
macro_rules! print_concat {
    ($($arg:expr),* $(,)?) => {
        $crate::printfmt::print_concat(&[$(&$arg as &dyn ::std::fmt::Display),*])
    };
}

/// `format_render` over heterogeneous arguments.
#[macro_export]
macro_rules! format_checked {
    ($fmt:expr $(, $arg:expr)* $(,)?) => {
        $crate::printfmt::format_render($fmt, &[$(&$arg as &dyn ::std::fmt::Display),*])
    };
}
