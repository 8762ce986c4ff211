//! Thin command-line front end over the batch driver.
//!
//! Exit codes: 0 on success, 2 on invalid input (argument, file, or
//! precondition failures), 3 when the two routes disagree or a value fails
//! integrality. A sweep exits 0 once it runs; per-level failures are
//! flagged inside the corresponding report.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use verlinde::report::{render, render_single, run, sweep, Backend, JobConfig, Method, OutputFormat};

#[derive(Parser)]
#[command(
    name = "verlinde",
    version,
    about = "Section counts for twisted moduli of flat unitary connections, \
             by exact alcove sums cross-checked against iterated residues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one count, or a sweep of counts over several levels
    Compute(ComputeArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Group rank parameter n (at least 2)
    #[arg(long)]
    n: usize,
    /// Twist degree d, coprime to n
    #[arg(long)]
    d: i64,
    /// Genus of the surface
    #[arg(long)]
    g: u32,
    /// Level (divisible by n); required unless --sweep is given
    #[arg(long)]
    k: Option<i64>,
    /// JSON file holding an array of integer weight vectors, one per marked point
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Computational route: sum, residue, or both
    #[arg(long, default_value = "both")]
    method: String,
    /// Arithmetic backend: exact or float
    #[arg(long, default_value = "exact")]
    backend: String,
    /// Output format: json or csv
    #[arg(long = "out", default_value = "json")]
    out: String,
    /// Comma-separated levels to sweep, one report each
    #[arg(long, value_delimiter = ',')]
    sweep: Option<Vec<i64>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(args) => compute(args),
    };
    ExitCode::from(code)
}

fn compute(args: ComputeArgs) -> u8 {
    let method: Method = match args.method.parse() {
        Ok(m) => m,
        Err(e) => return invalid(&e.to_string()),
    };
    let backend: Backend = match args.backend.parse() {
        Ok(b) => b,
        Err(e) => return invalid(&e.to_string()),
    };
    let output: OutputFormat = match args.out.parse() {
        Ok(o) => o,
        Err(e) => return invalid(&e.to_string()),
    };
    let weights: Vec<Vec<i64>> = match &args.weights {
        None => Vec::new(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    return invalid(&format!(
                        "invalid input: cannot read weight file {}: {e}",
                        path.display()
                    ))
                }
            };
            match serde_json::from_str(&text) {
                Ok(w) => w,
                Err(e) => {
                    return invalid(&format!(
                        "invalid input: weight file {} must be a JSON array of \
                         integer arrays: {e}",
                        path.display()
                    ))
                }
            }
        }
    };
    let k = match (args.k, &args.sweep) {
        (Some(k), _) => k,
        // placeholder; every sweep entry substitutes its own level
        (None, Some(_)) => 0,
        (None, None) => {
            return invalid("invalid input: either --k or --sweep is required")
        }
    };

    let config = JobConfig {
        n: args.n,
        d: args.d,
        g: args.g,
        k,
        weights,
        method,
        backend,
        sweep: args.sweep,
        output,
    };

    if config.sweep.is_some() {
        let reports = sweep(&config);
        println!("{}", render(&reports, output));
        0
    } else {
        let report = run(&config);
        println!("{}", render_single(&report, output));
        report.exit_code() as u8
    }
}

fn invalid(message: &str) -> u8 {
    eprintln!("{message}");
    2
}
