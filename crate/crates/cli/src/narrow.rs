use std::fmt::Write;
use std::str::FromStr;

use typext::narrowing::{can_narrow, convert_to, will_narrow, Num, NumType};

/// Calls `$body` with `$t` bound to the Rust type named by a `NumType`.
#[macro_export]
macro_rules! with_num_type {
    ($ty:expr, $t:ident => $body:expr) => {
        match $ty {
            ::typext::narrowing::NumType::I8 => {
                type $t = i8;
                $body
            }
            ::typext::narrowing::NumType::U8 => {
                type $t = u8;
                $body
            }
            ::typext::narrowing::NumType::I16 => {
                type $t = i16;
                $body
            }
            ::typext::narrowing::NumType::U16 => {
                type $t = u16;
                $body
            }
            ::typext::narrowing::NumType::I32 => {
                type $t = i32;
                $body
            }
            ::typext::narrowing::NumType::U32 => {
                type $t = u32;
                $body
            }
            ::typext::narrowing::NumType::I64 => {
                type $t = i64;
                $body
            }
            ::typext::narrowing::NumType::U64 => {
                type $t = u64;
                $body
            }
            ::typext::narrowing::NumType::F32 => {
                type $t = f32;
                $body
            }
            ::typext::narrowing::NumType::F64 => {
                type $t = f64;
                $body
            }
            ::typext::narrowing::NumType::SoftFloat16 => {
                type $t = ::typext::narrowing::SoftFloat16;
                $body
            }
        }
    };
}

/// Outcome of `narrow check`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub can_narrow: bool,
    pub will_narrow: bool,
    /// The converted value rendered, or `None` on a narrowing error.
    pub converted: Option<String>,
}

impl CheckReport {
    pub fn line(&self) -> String {
        format!(
            "can_narrow={} will_narrow={} convert={}",
            self.can_narrow,
            self.will_narrow,
            self.converted.as_deref().unwrap_or("ERROR")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UsageError {
    UnknownType(String),
    BadValue { value: String, ty: &'static str },
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::UnknownType(t) => write!(
                f,
                "unknown type {t:?}; expected one of {}",
                NumType::ALL.map(NumType::name).join(", ")
            ),
            UsageError::BadValue { value, ty } => write!(f, "cannot parse {value:?} as {ty}"),
        }
    }
}

impl std::error::Error for UsageError {}

pub fn parse_type(name: &str) -> Result<NumType, UsageError> {
    NumType::parse(name).ok_or_else(|| UsageError::UnknownType(name.to_string()))
}

fn report<S: Num, T: Num>(value: S) -> CheckReport {
    CheckReport {
        can_narrow: can_narrow::<S, T>(),
        will_narrow: will_narrow::<T, S>(value),
        converted: convert_to::<T, S>(value).ok().map(|v| v.to_string()),
    }
}

fn parse_value<S: Num + FromStr>(text: &str) -> Result<S, UsageError> {
    text.parse::<S>().map_err(|_| UsageError::BadValue {
        value: text.to_string(),
        ty: S::NAME,
    })
}

/// `narrow check <from> <to> <value>`.
pub fn check(from: &str, to: &str, value: &str) -> Result<CheckReport, UsageError> {
    let from = parse_type(from)?;
    let to = parse_type(to)?;
    with_num_type!(from, S => {
        let v: S = parse_value(value)?;
        Ok(with_num_type!(to, T => report::<S, T>(v)))
    })
}

/// `narrow table`: the full classification matrix, rows are sources.
pub fn table() -> String {
    let width = NumType::ALL
        .iter()
        .map(|t| t.name().len())
        .max()
        .unwrap_or(0)
        + 1;
    let mut out = String::new();
    write!(out, "{:width$}", "from\\to").unwrap();
    for to in NumType::ALL {
        write!(out, " {:>width$}", to.name()).unwrap();
    }
    out.push('\n');
    for from in NumType::ALL {
        write!(out, "{:width$}", from.name()).unwrap();
        for to in NumType::ALL {
            let cell = if from.can_narrow_to(to) { "Y" } else { "N" };
            write!(out, " {cell:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses a rendered table back into (from, to, can_narrow) cells.
pub fn parse_table(text: &str) -> Vec<(String, String, bool)> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines
        .next()
        .map(|h| h.split_whitespace().skip(1).collect())
        .unwrap_or_default();
    let mut cells = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let Some(from) = parts.next() else { continue };
        for (to, cell) in header.iter().zip(parts) {
            cells.push((from.to_string(), to.to_string(), cell == "Y"));
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_examples() {
        let r = check("i32", "u32", "-2").unwrap();
        assert_eq!(r.line(), "can_narrow=true will_narrow=true convert=ERROR");
        let r = check("i32", "i32", "7").unwrap();
        assert_eq!(r.line(), "can_narrow=false will_narrow=false convert=7");
        let r = check("f64", "i32", "7.8").unwrap();
        assert_eq!(r.converted, None);
        let r = check("f64", "i32", "7").unwrap();
        assert_eq!(r.converted.as_deref(), Some("7"));
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(
            check("i128", "i32", "1"),
            Err(UsageError::UnknownType(_))
        ));
        assert!(matches!(
            check("u8", "i32", "-1"),
            Err(UsageError::BadValue { .. })
        ));
        assert!(matches!(
            check("i32", "u8", "1.5"),
            Err(UsageError::BadValue { .. })
        ));
    }

    #[test]
    fn table_cells() {
        let cells = parse_table(&table());
        assert_eq!(cells.len(), 121);
        let get = |a: &str, b: &str| cells.iter().find(|c| c.0 == a && c.1 == b).unwrap().2;
        assert!(get("i32", "u32"));
        assert!(!get("i16", "i32"));
        for t in NumType::ALL {
            assert!(!get(t.name(), t.name()));
        }
    }
}
