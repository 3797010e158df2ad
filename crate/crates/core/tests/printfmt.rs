use std::fmt::Display;

use proptest::prelude::*;
use typext::printfmt::{format_render, placeholder_count, print_concat};
use typext::FormatErrorKind;

fn pieces() -> impl Strategy<Value = String> {
    prop::collection::vec(prop_oneof![Just("{}".to_string()), "[a-z {}é]{0,4}"], 0..8)
        .prop_map(|v| v.concat())
}

/// Character-level model: `{}` takes the next argument, `{` followed by
/// anything else copies both characters.
fn reference(fmt: &str, args: &[i32]) -> String {
    let mut out = String::new();
    let mut next = args.iter();
    let mut chars = fmt.chars();
    while let Some(c) = chars.next() {
        if c != '{' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('}') => out.push_str(&next.next().unwrap().to_string()),
            Some(other) => {
                out.push('{');
                out.push(other);
            }
            None => out.push('{'),
        }
    }
    out
}

proptest! {
    #[test]
    fn conservation(fmt in pieces(), n in 0usize..6) {
        let args: Vec<i32> = (0..n as i32).collect();
        let refs: Vec<&dyn Display> = args.iter().map(|a| a as &dyn Display).collect();
        let k = placeholder_count(&fmt);
        match format_render(&fmt, &refs) {
            Ok(text) => {
                prop_assert_eq!(k, n);
                prop_assert_eq!(text, reference(&fmt, &args));
            }
            Err(e) if k > n => prop_assert_eq!(e.kind, FormatErrorKind::ArgumentMissing),
            Err(e) => {
                prop_assert!(k < n);
                prop_assert_eq!(e.kind, FormatErrorKind::TooManyArguments);
            }
        }
    }

    #[test]
    fn literal_round_trip(fmt in "[^{]*") {
        prop_assert_eq!(format_render(&fmt, &[]).unwrap(), fmt);
    }

    #[test]
    fn concat_is_join(parts in prop::collection::vec(".{0,5}", 0..6)) {
        let refs: Vec<&dyn Display> = parts.iter().map(|p| p as &dyn Display).collect();
        prop_assert_eq!(print_concat(&refs), parts.concat());
    }
}

#[test]
fn error_positions() {
    let e = format_render("ab{}", &[]).unwrap_err();
    assert_eq!((e.kind, e.position), (FormatErrorKind::ArgumentMissing, 2));
    assert_eq!(e.to_string(), "argument missing (at byte 2)");
    let e = format_render("ab", &[&1]).unwrap_err();
    assert_eq!((e.kind, e.position), (FormatErrorKind::TooManyArguments, 2));
    assert_eq!(format_render("{", &[]).unwrap(), "{");
    // the second brace is copied through with the first, so no placeholder
    assert_eq!(format_render("{{}", &[]).unwrap(), "{{}");
    assert_eq!(placeholder_count("{{}{}"), 1);
}
