//! Scenario runner CLI.
//!
//! `daniell run <scenario>` executes the requested verification suites and
//! reports one line per check; `daniell generate <kind>` emits deterministic
//! scenario files. Exit codes: 0 all checks passed, 1 at least one check
//! failed, 2 configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use daniell_core::rat::parse_rat;
use daniell_core::report::{render_table, write_jsonl};
use daniell_core::runner::run_scenario;
use daniell_core::scenario::{generate_scenario, parse_scenario, GenerateKind, Suite};

#[derive(Parser)]
#[command(name = "daniell", about = "Exact product-integral verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the suites of a scenario file.
    Run {
        /// Scenario JSON path.
        scenario: PathBuf,
        /// Write the structured JSONL report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Restrict to these suites (repeatable); default is the scenario's
        /// own list.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Override the scenario seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the evaluation tolerance, as an exact "p/q" string.
        #[arg(long)]
        tolerance: Option<String>,
        /// Override the Cauchy iteration budget.
        #[arg(long)]
        max_steps: Option<u32>,
    },
    /// Emit a deterministic scenario file.
    Generate {
        /// One of: random-steps, random-finite, paper-demos.
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        size: u32,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run {
            scenario,
            out,
            suites,
            seed,
            tolerance,
            max_steps,
        } => run(scenario, out, suites, seed, tolerance, max_steps),
        Command::Generate {
            kind,
            seed,
            size,
            out,
        } => generate(kind, seed, size, out),
    }
}

fn config_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(
    path: PathBuf,
    out: Option<PathBuf>,
    suites: Vec<String>,
    seed: Option<u64>,
    tolerance: Option<String>,
    max_steps: Option<u32>,
) -> ExitCode {
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => return config_error(format!("{}: {e}", path.display())),
    };
    let mut sc = match parse_scenario(&text) {
        Ok(sc) => sc,
        Err(e) => return config_error(format!("{}: {e}", path.display())),
    };
    if let Some(seed) = seed {
        sc.seed = seed;
    }
    if let Some(tol) = tolerance {
        match parse_rat(&tol) {
            Ok(t) if t > daniell_core::rat::zero() => sc.params.tolerance = t,
            Ok(_) => return config_error("--tolerance must be positive"),
            Err(e) => return config_error(format!("--tolerance: {e}")),
        }
    }
    if let Some(ms) = max_steps {
        sc.params.max_steps = ms;
    }
    if !suites.is_empty() {
        let mut selected = Vec::new();
        for s in &suites {
            match s.parse::<Suite>() {
                Ok(suite) => {
                    if !selected.contains(&suite) {
                        selected.push(suite);
                    }
                }
                Err(e) => return config_error(format!("--suite: {e}")),
            }
        }
        sc.suites.retain(|s| selected.contains(s));
    }

    let records = run_scenario(&sc);
    print!("{}", render_table(&records));
    if let Some(out) = out {
        if let Err(e) = write_jsonl(&out, &records) {
            return config_error(format!("{}: {e}", out.display()));
        }
    }
    if records.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn generate(kind: String, seed: u64, size: u32, out: Option<PathBuf>) -> ExitCode {
    let kind: GenerateKind = match kind.parse() {
        Ok(k) => k,
        Err(e) => return config_error(e),
    };
    let file = generate_scenario(kind, seed, size);
    let text = match serde_json::to_string_pretty(&file) {
        Ok(t) => t,
        Err(e) => return config_error(e),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text + "\n") {
                return config_error(format!("{}: {e}", path.display()));
            }
        }
        None => println!("{text}"),
    }
    ExitCode::SUCCESS
}
