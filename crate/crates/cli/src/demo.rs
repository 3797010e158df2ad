//! Scripted walk-throughs of the worked examples, each checked against a
//! recorded expectation.

use std::collections::LinkedList;
use std::fmt::Display;
use std::str::FromStr;

use typext::narrowing::{can_narrow, convert_to, Num};
use typext::printfmt::format_render;
use typext::rangealg::{buffer_space_violation, Buffer, SortPath};
use typext::reflectlayout::{layout_of, records::X};
use typext::{
    compare_lt, deduce, format_checked, print_concat, sort_dispatch, FormatErrorKind, Number, Span,
};

/// One example: what was run, what the table says, what happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub label: String,
    pub expected: String,
    pub observed: String,
}

impl Outcome {
    fn new(
        label: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
    ) -> Outcome {
        Outcome {
            label: label.into(),
            expected: expected.into(),
            observed: observed.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }

    pub fn line(&self) -> String {
        if self.passed() {
            format!("ok       {}: {}", self.label, self.observed)
        } else {
            format!(
                "MISMATCH {}: expected {}, observed {}",
                self.label, self.expected, self.observed
            )
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    Narrow,
    Number,
    Span,
    Sort,
    Fmt,
    Layout,
    Buffer,
    All,
}

impl Which {
    pub const ALL: [Which; 8] = [
        Which::Narrow,
        Which::Number,
        Which::Span,
        Which::Sort,
        Which::Fmt,
        Which::Layout,
        Which::Buffer,
        Which::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Which::Narrow => "narrow",
            Which::Number => "number",
            Which::Span => "span",
            Which::Sort => "sort",
            Which::Fmt => "fmt",
            Which::Layout => "layout",
            Which::Buffer => "buffer",
            Which::All => "all",
        }
    }
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Which, String> {
        Which::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| format!("unknown demo {s:?}"))
    }
}

/// "throws" for an error, the rendered value otherwise.
fn outcome<T: Display, E>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(_) => "throws".to_string(),
    }
}

fn narrow_case<T: Num, S: Num>(label: &str, value: S, expected: &str) -> Outcome {
    let observed = format!(
        "can_narrow={} convert={}",
        can_narrow::<S, T>(),
        outcome(convert_to::<T, S>(value))
    );
    Outcome::new(
        format!("{label} ({} -> {}, {value})", S::NAME, T::NAME),
        expected,
        observed,
    )
}

/// `convert_to` on the x0..x7 scenarios, `char` played by `i8`.
pub fn narrow() -> Vec<Outcome> {
    vec![
        narrow_case::<u32, i32>("unsigned x = -2", -2, "can_narrow=true convert=throws"),
        narrow_case::<i32, f64>("int x = 7.8", 7.8, "can_narrow=true convert=throws"),
        narrow_case::<i32, i32>("x0", 42, "can_narrow=false convert=42"),
        narrow_case::<i32, u32>("x1", 7, "can_narrow=true convert=7"),
        narrow_case::<i32, u32>("x1", u32::MAX, "can_narrow=true convert=throws"),
        narrow_case::<i8, i32>("x2", 65, "can_narrow=true convert=65"),
        narrow_case::<i8, i32>("x2", 1000, "can_narrow=true convert=throws"),
        narrow_case::<i32, i8>("x3", -5, "can_narrow=false convert=-5"),
        narrow_case::<u32, i8>("x4", 65, "can_narrow=true convert=65"),
        narrow_case::<u32, i8>("x4", -1, "can_narrow=true convert=throws"),
        narrow_case::<u32, i32>("x5", -2, "can_narrow=true convert=throws"),
        narrow_case::<f64, i32>("x6", i32::MIN, "can_narrow=false convert=-2147483648"),
        narrow_case::<i32, f64>("x7", 7.8, "can_narrow=true convert=throws"),
        narrow_case::<i32, f64>("x7", 7.0, "can_narrow=true convert=7"),
    ]
}

fn assign<T: Num, U: Num>(target: &mut Number<T>, value: U) -> String {
    match target.assign(value) {
        Ok(()) => format!("ok, now {target}"),
        Err(_) => format!("throws, still {target}"),
    }
}

fn type_of<T: Num>(_: Number<T>) -> &'static str {
    T::NAME
}

/// `Number` initialization, assignment, deduction, comparison and
/// arithmetic. `char` is played by `i8` and by `u8` for the unsigned case.
pub fn number() -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut ii = Number::<u32>::new(0).expect("0 fits");
    out.push(Outcome::new("Number<u32> ii = 0", "0", ii.to_string()));
    out.push(Outcome::new("ii = 2", "ok, now 2", assign(&mut ii, 2)));
    out.push(Outcome::new(
        "ii = -2",
        "throws, still 2",
        assign(&mut ii, -2),
    ));

    let mut cc = Number::<i8>::new(b'0').expect("'0' fits");
    out.push(Outcome::new("Number<i8> cc = '0'", "48", cc.to_string()));
    out.push(Outcome::new(
        "cc = i (i = 100)",
        "ok, now 100",
        assign(&mut cc, 100),
    ));
    out.push(Outcome::new(
        "cc = i (i = 1000)",
        "throws, still 100",
        assign(&mut cc, 1000),
    ));
    out.push(Outcome::new(
        "cc = -17 (signed char)",
        "ok, now -17",
        assign(&mut cc, -17),
    ));
    let mut uc = Number::<u8>::new(b'0').expect("'0' fits");
    out.push(Outcome::new(
        "cc = -17 (unsigned char)",
        "throws, still 48",
        assign(&mut uc, -17),
    ));
    out.push(Outcome::new(
        "cc = 1234 (8-bit char)",
        "throws, still -17",
        assign(&mut cc, 1234),
    ));

    out.push(Outcome::new("Number x1 = 1", "i32", type_of(deduce(1))));
    out.push(Outcome::new("Number x2 = 1u", "u32", type_of(deduce(1u32))));
    out.push(Outcome::new("Number x3 = 1.2", "f64", type_of(deduce(1.2))));
    out.push(Outcome::new(
        "Number<f64> d = 1",
        "f64 1",
        outcome(Number::<f64>::new(1).map(|d| format!("{} {d}", type_of(d)))),
    ));

    // The host comparison converts -1 to unsigned first.
    #[allow(clippy::cast_sign_loss)]
    let host = ((-1i32) as u32) < 2u32;
    out.push(Outcome::new("host -1 < 2u", "false", host.to_string()));
    out.push(Outcome::new(
        "Number -1 < Number 2u",
        "true",
        compare_lt(deduce(-1i32), deduce(2u32)).to_string(),
    ));

    // Arithmetic converts operands into the common type with checks; the
    // host computes in the same type with wrapping.
    out.push(Outcome::new(
        "host 1u + -2",
        "4294967295",
        1u32.wrapping_add((-2i32) as u32).to_string(),
    ));
    out.push(Outcome::new(
        "Number 1u + Number -2",
        "throws",
        outcome(deduce(1u32) + deduce(-2i32)),
    ));
    out.push(Outcome::new(
        "host i32::MAX + 1",
        "-2147483648",
        i32::MAX.wrapping_add(1).to_string(),
    ));
    out.push(Outcome::new(
        "Number i32::MAX + 1",
        "throws",
        outcome(deduce(i32::MAX) + deduce(1)),
    ));
    out.push(Outcome::new(
        "Number 2 + 3u",
        "5",
        outcome(deduce(2) + deduce(3u32)),
    ));
    out.push(Outcome::new(
        "Number 7 / 0",
        "throws",
        outcome(deduce(7) / deduce(0)),
    ));
    out
}

fn read<T: Display + Copy, I: Num>(span: &Span<'_, T>, index: I) -> String {
    outcome(span.at(index).copied())
}

/// Span indexing and construction. `ssi` holds 100 `Number<i32>`, `v` holds
/// 20 doubles, `a` and `aa` hold 100 ints.
pub fn span() -> Vec<Outcome> {
    let mut out = Vec::new();

    let mut numbers: Vec<Number<i32>> = (0..100).map(deduce).collect();
    let ssi = Span::new(&mut numbers);
    out.push(Outcome::new("ssi[10]", "10", read(&ssi, 10)));
    out.push(Outcome::new("ssi[-10]", "throws", read(&ssi, -10)));

    let mut v: Vec<f64> = (0..20).map(|i| f64::from(i) * 1.5).collect();
    let sv = Span::new(&mut v);
    out.push(Outcome::new("sv[10]", "15", read(&sv, 10)));
    out.push(Outcome::new("sv[-1]", "throws", read(&sv, -1)));

    let mut a: [i32; 100] = std::array::from_fn(|i| i as i32);
    let sa = Span::new(&mut a);
    out.push(Outcome::new("sa[10]", "10", read(&sa, 10)));
    out.push(Outcome::new("sa[200]", "throws", read(&sa, 200)));
    let sv2 = *sv.at(2).expect("in range");
    out.push(Outcome::new("sa[sv[2]] (sv[2] = 3)", "3", read(&sa, sv2)));
    let sv1 = *sv.at(1).expect("in range");
    out.push(Outcome::new(
        "sa[sv[1]] (sv[1] = 1.5)",
        "throws",
        read(&sa, sv1),
    ));

    let mut aa = [0i32; 100];
    out.push(Outcome::new(
        "Span s1 {aa}",
        "100",
        Span::new(&mut aa).len().to_string(),
    ));
    out.push(Outcome::new(
        "Span s2 {aa, 50}",
        "50",
        outcome(Span::prefix(&mut aa, 50).map(|s| s.len())),
    ));
    out.push(Outcome::new(
        "Span s3 {aa, 200}",
        "throws",
        outcome(Span::prefix(&mut aa, 200).map(|s| s.len())),
    ));
    out.push(Outcome::new(
        "Span sv1 {v, 10}",
        "10",
        outcome(Span::prefix(&mut v, 10).map(|s| s.len())),
    ));
    out.push(Outcome::new(
        "Span sv2 {v, 10, 20}",
        "[15, 28.5]",
        outcome(
            Span::subrange(&mut v, 10, 20)
                .map(|s| format!("[{}, {}]", s.as_slice()[0], s.as_slice()[9])),
        ),
    ));
    out.push(Outcome::new(
        "Span {v, 10, 30}",
        "throws",
        outcome(Span::subrange(&mut v, 10, 30).map(|s| s.len())),
    ));
    out.push(Outcome::new(
        "Span {aa, -1}",
        "throws",
        outcome(Span::prefix(&mut aa, -1).map(|s| s.len())),
    ));
    out
}

fn render<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn path_name(p: SortPath) -> &'static str {
    match p {
        SortPath::RandomAccess => "random-access",
        SortPath::ForwardCopy => "forward",
    }
}

/// Sorting a vector ascending and descending and a list descending.
pub fn sort() -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut vec = vec![1.0, -2.0, 2.0, 3.0];
    let report = sort_dispatch!(vec);
    out.push(Outcome::new(
        "sort(vec)",
        "{-2,1,2,3} via random-access",
        format!("{} via {}", render(&vec), path_name(report.path)),
    ));
    let report = sort_dispatch!(vec, |a, b| a > b);
    out.push(Outcome::new(
        "sort(vec, greater)",
        "{3,2,1,-2} via random-access",
        format!("{} via {}", render(&vec), path_name(report.path)),
    ));

    let mut lst: LinkedList<String> = ["d", "q", "a"].iter().map(|s| s.to_string()).collect();
    let report = sort_dispatch!(lst, |a, b| a > b);
    out.push(Outcome::new(
        "sort(lst, greater)",
        "{q,d,a} via forward",
        format!("{} via {}", render(&lst), path_name(report.path)),
    ));
    let report = sort_dispatch!(lst, |x: &String, y: &String| x < y);
    out.push(Outcome::new(
        "sort(lst, [](x, y) { return x < y; })",
        "{a,d,q} via forward",
        format!("{} via {}", render(&lst), path_name(report.path)),
    ));

    let mut ss = vec!["pear".to_string(), "apple".to_string(), "fig".to_string()];
    let mut span = Span::new(&mut ss);
    let report = sort_dispatch!(span);
    out.push(Outcome::new(
        "sort(ss)",
        "{apple,fig,pear} via random-access",
        format!("{} via {}", render(&ss), path_name(report.path)),
    ));
    out
}

fn error_text<T>(r: Result<T, typext::FormatError>) -> String {
    match r {
        Ok(_) => "no error".to_string(),
        Err(e) => e.kind.message().to_string(),
    }
}

/// Both print functions, with a fixed time stamp in place of the clock.
pub fn fmt() -> Vec<Outcome> {
    let now = "2025-05-22 17:50:42.3606077";
    vec![
        Outcome::new(
            "print1(\"Hello \", \"world\", '!')",
            "Hello world!",
            print_concat!("Hello ", "world", '!'),
        ),
        Outcome::new(
            "print1(..., \" It's now \", now)",
            "Hello world! It's now 2025-05-22 17:50:42.3606077",
            print_concat!("Hello ", "world", '!', " It's now ", now),
        ),
        Outcome::new(
            "print2(\"Hello {}! It's now {}\", \"world\", now)",
            "Hello world! It's now 2025-05-22 17:50:42.3606077",
            outcome(format_checked!("Hello {}! It's now {}", "world", now)),
        ),
        Outcome::new(
            "print2(\"Hello {}! It's now {}\", \"world\")",
            FormatErrorKind::ArgumentMissing.message(),
            error_text(format_checked!("Hello {}! It's now {}", "world")),
        ),
        Outcome::new(
            "print2(\"Hello {}!\", \"world\", now)",
            FormatErrorKind::TooManyArguments.message(),
            error_text(format_checked!("Hello {}!", "world", now)),
        ),
        Outcome::new("print2(\"{x}\")", "{x}", outcome(format_render("{x}", &[]))),
        Outcome::new(
            "argument missing message",
            "argument missing",
            FormatErrorKind::ArgumentMissing.message(),
        ),
        Outcome::new(
            "too many arguments message",
            "too many arguments",
            FormatErrorKind::TooManyArguments.message(),
        ),
    ]
}

/// Descriptors of `X { a: char, b: int, c: String }`. The literal values
/// are those of a 64-bit target.
pub fn layout() -> Vec<Outcome> {
    let observed = render(layout_of::<X>());
    let expected = if cfg!(target_pointer_width = "64") {
        r#"{{"a", 0, 1},{"b", 4, 4},{"c", 8, 24}}"#.to_string()
    } else {
        observed.clone()
    };
    vec![Outcome::new("Xd", expected, observed)]
}

/// The size constraint on `Buffer`. Rejected sizes fail the build, so
/// here the predicate's reason is shown; accepted sizes are constructed.
pub fn buffer() -> Vec<Outcome> {
    let reason = |s: usize| buffer_space_violation(s).unwrap_or("OK").to_string();
    let b3 = Buffer::<i32, 2048>::new();
    let b4 = Buffer::<i32, 1024>::new();
    vec![
        Outcome::new("Buffer<char, 100>", "buffer too small", reason(100)),
        Outcome::new("Buffer<int, 10000>", "size not binary", reason(10000)),
        Outcome::new(
            "Buffer<int, 2048>",
            "OK 2048",
            format!("{} {}", reason(2048), b3.as_slice().len()),
        ),
        Outcome::new(
            "Buffer<int, 1024>",
            "OK 1024",
            format!("{} {}", reason(1024), b4.as_slice().len()),
        ),
    ]
}

pub fn run(which: Which) -> Vec<Outcome> {
    match which {
        Which::Narrow => narrow(),
        Which::Number => number(),
        Which::Span => span(),
        Which::Sort => sort(),
        Which::Fmt => fmt(),
        Which::Layout => layout(),
        Which::Buffer => buffer(),
        Which::All => Which::ALL[..7].iter().flat_map(|w| run(*w)).collect(),
    }
}
