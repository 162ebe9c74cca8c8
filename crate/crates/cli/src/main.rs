use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use minabc_cli::{dot_text, edges_text, exit, fmt_sig, OutputRecord, SIG_F64, SIG_HP};
use minabc_family::materialize;
use minabc_oracle::{brute_min_abc, OracleError};
use minabc_solver::{solve_with, SolveError, SolveOptions};
use minabc_verifier::{
    check_monotonicity, scan_transform, surrogate_dominance, surrogate_monotonicity, PropReport, ScanReport,
    TransformId,
};

/// Seed used by `verify props` and `verify all`.
const PROPS_SEED: u64 = 20_240_601;
const MONOTONICITY_SAMPLES: u64 = 100_000;
const SURROGATE_SAMPLES: u64 = 10_000;

/// Minimal-ABC trees: solver, exporter, verifier and brute-force oracle.
///
/// Exit codes: 0 ok, 1 verification violations, 2 usage error,
/// 3 infeasible order.
#[derive(Parser)]
#[command(name = "minabc", version)]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve order n and print the parameters of the minimal tree.
    Solve {
        n: u64,
        /// Also print the fixed-point value to 32 significant digits.
        #[arg(long)]
        hp: bool,
        /// Search the whole constraint box without degree-threshold pruning.
        #[arg(long)]
        no_prune: bool,
        /// Print one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Write the minimal tree of order n as an edge list or DOT graph.
    Export {
        n: u64,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run negativity scans and property checks.
    Verify {
        /// `all`, `props` or a transformation T2..T15.
        scope: String,
        /// Print every row, not only failing ones.
        #[arg(long)]
        verbose: bool,
        /// Print JSON reports.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively search all free trees of order n (4..=20).
    Brute { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 || rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("error: invalid thread count {t}");
            return code(exit::USAGE);
        }
    }
    code(match cli.cmd {
        Cmd::Solve { n, hp, no_prune, json } => cmd_solve(n, hp, !no_prune, json),
        Cmd::Export { n, format, out } => cmd_export(n, format, out),
        Cmd::Verify { scope, verbose, json } => cmd_verify(&scope, verbose, json),
        Cmd::Brute { n } => cmd_brute(n),
    })
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn solve_error(e: &SolveError) -> i32 {
    eprintln!("error: {e}");
    match e {
        SolveError::Infeasible(_) => exit::INFEASIBLE,
        _ => exit::USAGE,
    }
}

fn cmd_solve(n: u64, hp: bool, prune: bool, json: bool) -> i32 {
    let r = match solve_with(n, SolveOptions { prune }) {
        Ok(r) => r,
        Err(e) => return solve_error(&e),
    };
    let rec = OutputRecord::from_result(&r, hp);
    if json {
        emit(&format!("{}\n", serde_json::to_string(&rec).expect("record serializes")));
    } else {
        emit(&rec.to_text());
        if !r.ties.is_empty() {
            emit(&format!("ties        {} parameter sets with equal value; smallest key shown\n", r.ties.len()));
        }
    }
    exit::OK
}

fn cmd_export(n: u64, format: Format, out: Option<PathBuf>) -> i32 {
    let r = match solve_with(n, SolveOptions::default()) {
        Ok(r) => r,
        Err(e) => return solve_error(&e),
    };
    let tree = match materialize(&r.best) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return exit::USAGE;
        }
    };
    let text = match format {
        Format::Edges => edges_text(&tree),
        Format::Dot => dot_text(&tree),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return exit::USAGE;
            }
        }
        None => emit(&text),
    }
    exit::OK
}

fn cmd_verify(scope: &str, verbose: bool, json: bool) -> i32 {
    let (ids, props): (Vec<TransformId>, bool) = match scope.to_ascii_lowercase().as_str() {
        "all" => (TransformId::ALL.to_vec(), true),
        "props" => (Vec::new(), true),
        s => match s.parse::<TransformId>() {
            Ok(id) => (vec![id], false),
            Err(e) => {
                eprintln!("error: {e}; expected all, props or T2..T15");
                return exit::USAGE;
            }
        },
    };
    let scans: Vec<ScanReport> = ids.iter().map(|&id| scan_transform(id)).collect();
    let mut prop_reports: Vec<PropReport> = Vec::new();
    if props {
        prop_reports.push(check_monotonicity(MONOTONICITY_SAMPLES, PROPS_SEED));
        for id in TransformId::ALL {
            prop_reports.push(surrogate_dominance(id, SURROGATE_SAMPLES, PROPS_SEED));
            prop_reports.push(surrogate_monotonicity(id, SURROGATE_SAMPLES, PROPS_SEED));
        }
    }
    if json {
        let v = serde_json::json!({ "scans": scans, "properties": prop_reports });
        emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("reports serialize")));
    } else {
        for r in &scans {
            emit(&r.to_text(verbose));
        }
        for r in &prop_reports {
            emit(&r.to_text());
        }
    }
    let ok = scans.iter().all(ScanReport::pass) && prop_reports.iter().all(PropReport::pass);
    if !json {
        emit(&format!("{}\n", if ok { "verify: PASS" } else { "verify: FAIL" }));
    }
    if ok {
        exit::OK
    } else {
        exit::VIOLATIONS
    }
}

fn cmd_brute(n: usize) -> i32 {
    let r = match brute_min_abc(n) {
        Ok(r) => r,
        Err(e @ (OracleError::CapExceeded(_) | OracleError::TooSmall(_))) => {
            eprintln!("error: {e}; brute accepts 4..=20");
            return exit::USAGE;
        }
    };
    emit(&format!("searched {} trees of order {n}\n", r.trees_searched));
    emit(&format!("ABC      {}\n", fmt_sig(r.abc, SIG_F64)));
    emit(&format!("ABC (hp) {}\n", r.abc_hp.to_decimal(SIG_HP)));
    if r.argmins.len() > 1 {
        emit(&format!("minimizers {} (first shown)\n", r.argmins.len()));
    }
    emit(&edges_text(&r.best));
    exit::OK
}
