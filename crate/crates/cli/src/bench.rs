//! Timing of checked operations against raw baselines.
//!
//! Each scenario times a checked kernel and a raw kernel over the same
//! inputs. Both loops run `ROUNDS` times, interleaved, and the fastest
//! round of each is reported, which keeps scheduler noise out of the ratio.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use typext::narrowing::convert_to;
use typext::number::Number;

pub const CSV_HEADER: &str = "scenario,iters,ns_per_op,baseline_ns_per_op";

const ROUNDS: usize = 5;
const INPUTS: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// `convert_to::<i32>` on an `i32` vs plain assignment.
    ConvertSame,
    /// `convert_to::<u8>` on in-range `i32`s vs an `as` cast.
    ConvertNarrowable,
    /// Checked `Number<i32> + Number<i32>` vs wrapping `i32` addition.
    NumberArith,
    /// Host mixed-sign `i32 + u32` (operand cast to `u32`) vs `u32` addition.
    RawArith,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::ConvertSame,
        Scenario::ConvertNarrowable,
        Scenario::NumberArith,
        Scenario::RawArith,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::ConvertSame => "convert-same",
            Scenario::ConvertNarrowable => "convert-narrowable",
            Scenario::NumberArith => "number-arith",
            Scenario::RawArith => "raw-arith",
        }
    }
}

impl FromStr for Scenario {
    type Err = String;

    fn from_str(s: &str) -> Result<Scenario, String> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| format!("unknown scenario {s:?}"))
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub scenario: Scenario,
    pub iters: u64,
    pub ns_per_op: f64,
    pub baseline_ns_per_op: f64,
}

impl BenchRecord {
    pub fn ratio(&self) -> f64 {
        self.ns_per_op / self.baseline_ns_per_op
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{:.4},{:.4}",
            self.scenario, self.iters, self.ns_per_op, self.baseline_ns_per_op
        )
    }
}

fn inputs() -> Vec<i32> {
    // values in 0..=255 so the narrowable conversion always succeeds
    (0..INPUTS as i32).map(|i| (i * 37 + 11) % 256).collect()
}

#[inline(never)]
fn time_loop(iters: u64, data: &[i32], kernel: impl Fn(i32, i32) -> i32) -> f64 {
    let mask = data.len() - 1;
    let start = Instant::now();
    let mut acc = 0i32;
    for i in 0..iters as usize {
        let x = black_box(data[i & mask]);
        acc = kernel(acc, x);
    }
    black_box(acc);
    start.elapsed().as_nanos() as f64 / iters as f64
}

#[inline(always)]
fn checked_same(acc: i32, x: i32) -> i32 {
    acc ^ convert_to::<i32, i32>(x).unwrap_or(0)
}

#[inline(always)]
fn raw_same(acc: i32, x: i32) -> i32 {
    let y: i32 = x;
    acc ^ y
}

#[inline(always)]
fn checked_narrowable(acc: i32, x: i32) -> i32 {
    acc ^ i32::from(convert_to::<u8, i32>(x).unwrap_or(0))
}

#[inline(always)]
fn raw_narrowable(acc: i32, x: i32) -> i32 {
    acc ^ i32::from(x as u8)
}

#[inline(always)]
fn checked_number_add(acc: i32, x: i32) -> i32 {
    let sum = Number::from(x & 0xFFFF) + Number::from(acc & 0xFFFF);
    sum.map(Number::get).unwrap_or(0)
}

#[inline(always)]
fn raw_add(acc: i32, x: i32) -> i32 {
    (x & 0xFFFF).wrapping_add(acc & 0xFFFF)
}

#[inline(always)]
fn host_mixed_add(acc: i32, x: i32) -> i32 {
    ((acc & 0xFFFF) as u32).wrapping_add(x as u32) as i32
}

#[inline(always)]
fn raw_unsigned_add(acc: i32, x: i32) -> i32 {
    ((acc & 0xFFFF) as u32).wrapping_add(x as u32) as i32
}

/// Runs one scenario. `iters` must be positive.
pub fn run(scenario: Scenario, iters: u64) -> BenchRecord {
    assert!(iters > 0, "iters must be positive");
    let data = inputs();
    let (mut best, mut best_base) = (f64::INFINITY, f64::INFINITY);
    for _ in 0..ROUNDS {
        let (op, base) = match scenario {
            Scenario::ConvertSame => (
                time_loop(iters, &data, checked_same),
                time_loop(iters, &data, raw_same),
            ),
            Scenario::ConvertNarrowable => (
                time_loop(iters, &data, checked_narrowable),
                time_loop(iters, &data, raw_narrowable),
            ),
            Scenario::NumberArith => (
                time_loop(iters, &data, checked_number_add),
                time_loop(iters, &data, raw_add),
            ),
            Scenario::RawArith => (
                time_loop(iters, &data, host_mixed_add),
                time_loop(iters, &data, raw_unsigned_add),
            ),
        };
        best = best.min(op);
        best_base = best_base.min(base);
    }
    BenchRecord {
        scenario,
        iters,
        ns_per_op: best,
        baseline_ns_per_op: best_base,
    }
}

/// Header plus one row.
pub fn csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
