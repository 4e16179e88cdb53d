use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use drgq_cli::{analyze, catalog_command, search_q_command, verify, AnalyzeArgs, CliError, CommandOutput, Target, VerifyArgs};
use drgq_core::search::{parse_q_grid, parse_q_range};
use drgq_exact::{parse_rational, Rational};

/// Exact q-distance and generalized distance spectra of distance-regular graphs.
#[derive(Parser)]
#[command(name = "drgq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, classical types and q-distance spectra of one graph.
    #[command(group(ArgGroup::new("target").required(true).args(["array", "classical", "family"])))]
    Analyze {
        /// Intersection array "b_0,...,b_{D-1};c_1,...,c_D".
        #[arg(long)]
        array: Option<String>,
        /// Classical parameters "D,b,alpha,beta".
        #[arg(long)]
        classical: Option<String>,
        /// Family descriptor such as "johnson:6,3".
        #[arg(long)]
        family: Option<String>,
        /// Rational q (repeatable), e.g. --q -1/2.
        #[arg(long = "q", value_parser = rational_arg, allow_hyphen_values = true)]
        qs: Vec<Rational>,
        #[arg(long)]
        json: bool,
        /// Characteristic polynomial method for explicit spectra.
        #[arg(long)]
        charpoly: Option<String>,
    },
    /// Cross-check analytic results against explicit graphs.
    #[command(group(ArgGroup::new("target").required(true).args(["family", "all"])))]
    Verify {
        #[arg(long)]
        family: Option<String>,
        /// Every catalog entry.
        #[arg(long)]
        all: bool,
        /// Comma-separated rationals; defaults to the built-in grid.
        #[arg(long, allow_hyphen_values = true)]
        q_grid: Option<String>,
        /// Comma-separated check names; defaults to all.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long)]
        charpoly: Option<String>,
    },
    /// List the built-in catalog.
    Catalog {
        #[arg(long)]
        json: bool,
        /// "classical" keeps entries with classical parameters.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Find q with exactly one positive q-distance eigenvalue.
    #[command(name = "search-q", group(ArgGroup::new("qs").required(true).args(["q_grid", "q_range"])))]
    SearchQ {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        q_grid: Option<String>,
        /// "start:end:step", inclusive.
        #[arg(long, allow_hyphen_values = true)]
        q_range: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn usage(e: drgq_core::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn run(cli: Cli) -> Result<CommandOutput, CliError> {
    match cli.command {
        Command::Analyze {
            array,
            classical,
            family,
            qs,
            json,
            charpoly,
        } => {
            let target = match (array, classical, family) {
                (Some(a), _, _) => Target::Array(a),
                (_, Some(c), _) => Target::Classical(c),
                (_, _, Some(f)) => Target::Family(f),
                _ => unreachable!("clap enforces one target"),
            };
            analyze(&AnalyzeArgs {
                target,
                qs,
                json,
                charpoly,
            })
        }
        Command::Verify {
            family,
            all,
            q_grid,
            checks,
            charpoly,
        } => {
            let grid = q_grid.as_deref().map(parse_q_grid).transpose().map_err(usage)?;
            verify(&VerifyArgs {
                family: if all { None } else { family },
                grid,
                checks,
                charpoly,
            })
        }
        Command::Catalog { json, filter } => {
            let classical_only = match filter.as_deref() {
                None => false,
                Some("classical") => true,
                Some(other) => return Err(CliError::Usage(format!("unknown filter {other:?} (known: classical)"))),
            };
            catalog_command(json, classical_only)
        }
        Command::SearchQ {
            family,
            q_grid,
            q_range,
            json,
        } => {
            let qs = match (q_grid, q_range) {
                (Some(g), _) => parse_q_grid(&g),
                (_, Some(r)) => parse_q_range(&r),
                _ => unreachable!("clap enforces one of the q options"),
            }
            .map_err(usage)?;
            search_q_command(&family, &qs, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
