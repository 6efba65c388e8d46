//! Command-line front end: parse or generate an arrangement, run the full
//! pipeline, and print a JSON or text report.
//!
//! Exit codes: 0 success, 2 input error, 3 verification failure,
//! 4 internal consistency failure.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use num::BigInt;
use serde::Deserialize;

use arrangements::builtins;
use arrangements::lattice::Arrangement;
use arrangements::report::{render_text, run_report, ReportOptions};
use arrangements::Rat;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "arrangements",
    about = "Invariants of rational hyperplane arrangements in projective space",
    after_help = "Input is either a JSON document {\"n\": 2, \"forms\": [[\"1\",\"0\",\"0\"], ...]} \
                  with one row of rational strings per hyperplane, or a builtin generator:\n  \
                  boolean N | generic D N | pencil D N | counterexample"
)]
struct Cli {
    /// Path to a JSON arrangement document ("-" reads stdin)
    #[arg(long, conflicts_with = "builtin")]
    input: Option<PathBuf>,

    /// Builtin generator name: boolean, generic, pencil, counterexample
    #[arg(long)]
    builtin: Option<String>,

    /// Integer parameters for the builtin generator
    #[arg(long, num_args = 0.., value_name = "N", requires = "builtin")]
    params: Vec<u64>,

    /// Cone the arrangement: view it in P^{n+K} by appending K coordinates
    #[arg(long, value_name = "K")]
    cone: Option<usize>,

    /// Verify point counts over F_p at these primes
    #[arg(long = "verify-count", num_args = 1.., value_name = "P")]
    verify_count: Vec<u64>,

    /// Maximum number of points an enumeration may visit
    /// (default 10^7, or the ARRANGEMENTS_BUDGET environment variable)
    #[arg(long, value_name = "N")]
    budget: Option<u64>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Deserialize)]
struct InputDoc {
    n: usize,
    forms: Vec<Vec<String>>,
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer '{num_str}'"))?;
    let denom: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| format!("invalid integer '{d}'"))?,
        None => BigInt::from(1),
    };
    if denom == BigInt::from(0) {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(Rat::new(numer, denom))
}

fn parse_input(text: &str) -> Result<Arrangement, String> {
    let doc: InputDoc = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let mut rows = Vec::with_capacity(doc.forms.len());
    for (i, row) in doc.forms.iter().enumerate() {
        let mut parsed = Vec::with_capacity(row.len());
        for (j, entry) in row.iter().enumerate() {
            parsed.push(
                parse_rational(entry).map_err(|e| format!("row {i}, column {j}: {e}"))?,
            );
        }
        rows.push(parsed);
    }
    Arrangement::new(doc.n, rows).map_err(|e| e.to_string())
}

fn load_arrangement(cli: &Cli) -> Result<Arrangement, String> {
    let arr = match (&cli.input, &cli.builtin) {
        (Some(path), None) => {
            let text = if path.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| format!("reading stdin: {e}"))?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| format!("reading {}: {e}", path.display()))?
            };
            parse_input(&text)?
        }
        (None, Some(name)) => builtins::by_name(name, &cli.params).map_err(|e| e.to_string())?,
        (None, None) => return Err("provide --input PATH or --builtin NAME".to_string()),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    Ok(match cli.cone {
        Some(k) => arr.cone(k),
        None => arr,
    })
}

fn budget_from_env() -> Option<u64> {
    std::env::var("ARRANGEMENTS_BUDGET").ok()?.parse().ok()
}

fn run(cli: &Cli) -> ExitCode {
    let arr = match load_arrangement(cli) {
        Ok(arr) => arr,
        Err(msg) => {
            eprintln!("input error: {msg}");
            return ExitCode::from(2);
        }
    };
    let opts = ReportOptions {
        verify_primes: cli.verify_count.clone(),
        budget: cli.budget.or_else(budget_from_env),
    };
    let report = match run_report(&arr, &opts) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(4);
        }
    };
    match cli.format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Format::Text => {
            let mut text = render_text(&report);
            if report.verification_failed() {
                let _ = writeln!(text, "VERIFICATION FAILED");
            }
            print!("{text}");
        }
    }
    if report.verification_failed() {
        eprintln!("point-count verification failed");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // a panic in the pipeline means an internal invariant was violated
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("internal consistency failure");
            ExitCode::from(4)
        }
    }
}
