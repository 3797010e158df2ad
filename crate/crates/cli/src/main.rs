use std::process::ExitCode;

use clap::{Parser, Subcommand};

use typext_cli::bench::{self, Scenario};
use typext_cli::demo::{self, Which};
use typext_cli::{layout, narrow};

const CONTRACT_VIOLATION: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "typext",
    version,
    about = "Checked conversions, spans, sorting, formatting and layouts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Narrowing classification and checked conversion.
    Narrow {
        #[command(subcommand)]
        action: NarrowAction,
    },
    /// Time a checked path against its raw baseline, as CSV.
    Bench {
        /// convert-same, convert-narrowable, number-arith or raw-arith
        scenario: Scenario,
        #[arg(long, default_value_t = 10_000_000)]
        iters: u64,
    },
    /// Replay worked examples against their expectations.
    Demo {
        /// narrow, number, span, sort, fmt, layout, buffer or all
        which: Which,
    },
    /// Print the member descriptors of a registered record.
    Layout { name: String },
}

#[derive(Subcommand)]
enum NarrowAction {
    /// Classify and convert one value.
    Check {
        from: String,
        to: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Print the classification matrix.
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Narrow {
            action: NarrowAction::Check { from, to, value },
        } => match narrow::check(&from, &to, &value) {
            Ok(report) => {
                println!("{}", report.line());
                if report.converted.is_some() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(CONTRACT_VIOLATION)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(USAGE)
            }
        },
        Command::Narrow {
            action: NarrowAction::Table,
        } => {
            print!("{}", narrow::table());
            ExitCode::SUCCESS
        }
        Command::Bench { scenario, iters } => {
            if iters == 0 {
                eprintln!("error: --iters must be positive");
                return ExitCode::from(USAGE);
            }
            print!("{}", bench::csv(&[bench::run(scenario, iters)]));
            ExitCode::SUCCESS
        }
        Command::Demo { which } => {
            let outcomes = demo::run(which);
            for o in &outcomes {
                println!("{}", o.line());
            }
            if outcomes.iter().all(|o| o.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(CONTRACT_VIOLATION)
            }
        }
        Command::Layout { name } => match layout::render(&name) {
            Some(text) => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            None => {
                eprintln!(
                    "error: no registered record {name:?}; known: {}",
                    layout::registered_names().join(", ")
                );
                ExitCode::from(USAGE)
            }
        },
    }
}
