use std::process::{Command, Output};

fn typext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typext"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn narrow_check_exit_codes() {
    let o = typext(&["narrow", "check", "i32", "u32", "-2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o).trim(),
        "can_narrow=true will_narrow=true convert=ERROR"
    );

    let o = typext(&["narrow", "check", "i32", "i32", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "can_narrow=false will_narrow=false convert=7"
    );

    let o = typext(&["narrow", "check", "f64", "i32", "7.8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("convert=ERROR"));

    assert_eq!(
        typext(&["narrow", "check", "int", "u32", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        typext(&["narrow", "check", "u8", "u32", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(typext(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn narrow_table_is_deterministic() {
    let a = typext(&["narrow", "table"]);
    let b = typext(&["narrow", "table"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 12);
}

#[test]
fn bench_csv() {
    let o = typext(&["bench", "raw-arith", "--iters", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("scenario,iters,ns_per_op,baseline_ns_per_op")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[..2], ["raw-arith", "1000"]);
    assert!(row[3].parse::<f64>().unwrap() >= 0.0);
    assert_eq!(
        typext(&["bench", "raw-arith", "--iters", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(typext(&["bench", "nope"]).status.code(), Some(2));
}

#[test]
fn demos_pass() {
    for which in [
        "narrow", "number", "span", "sort", "fmt", "layout", "buffer", "all",
    ] {
        let o = typext(&["demo", which]);
        assert_eq!(o.status.code(), Some(0), "{which}: {}", stdout(&o));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
    let sort = stdout(&typext(&["demo", "sort"]));
    assert!(sort.contains("{-2,1,2,3}"));
    let fmt = stdout(&typext(&["demo", "fmt"]));
    assert!(fmt.contains("Hello world!"));
}

#[test]
fn layout_command() {
    let o = typext(&["layout", "Padded"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("Padded size="));
    assert_eq!(typext(&["layout", "Missing"]).status.code(), Some(2));
}
