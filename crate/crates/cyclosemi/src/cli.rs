//! Command-line surface. Exit codes: 0 success (and verified), 1 a
//! conjecture counterexample was found, 2 usage error, 3 arithmetic error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use cyclosemi_core::enumeration::{CensusReport, ConjectureSet};
use cyclosemi_core::{polynomials, NumericalSemigroup};

use crate::checkpoint::{read_checkpoint, CheckpointWriter};
use crate::parallel::{default_jobs, run_census};
use crate::report;

#[derive(Parser)]
#[command(
    name = "cyclosemi",
    version,
    about = "Exact computation with numerical semigroups and cyclotomic polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the numerical semigroup generated by the given integers
    Analyze {
        /// Generators: positive integers with gcd 1
        #[arg(required = true)]
        generators: Vec<u64>,
        /// JSON output (the default)
        #[arg(long)]
        json: bool,
        /// Human-readable output instead of JSON
        #[arg(long, conflicts_with = "json")]
        pretty: bool,
        /// Exponent-sequence truncation bound for non-cyclotomic inputs
        #[arg(long, value_name = "N")]
        exp_bound: Option<u64>,
    },
    /// Census of cyclotomic numerical semigroups up to a Frobenius bound
    Census {
        #[arg(long, value_name = "F", value_parser = clap::value_parser!(u64).range(1..))]
        frobenius_max: u64,
        /// Write census rows as CSV here (summary JSON lands next to it)
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// JSON-lines checkpoint, one line per completed Frobenius value
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,
        /// Worker threads (default: CYCLOSEMI_JOBS or all cores)
        #[arg(long, env = "CYCLOSEMI_JOBS", value_name = "N")]
        jobs: Option<usize>,
        /// Skip Frobenius values already present in the checkpoint
        #[arg(long, requires = "checkpoint")]
        resume: bool,
    },
    /// Verify the census conjectures and report counterexamples
    Verify {
        /// Which conjecture: 1, length, msg, maximalsD, or all
        #[arg(long, value_parser = parse_conjecture)]
        conjecture: ConjectureChoice,
        #[arg(long, value_name = "F", value_parser = clap::value_parser!(u64).range(1..))]
        frobenius_max: u64,
    },
    /// Print polynomial coefficients as a JSON array (index = exponent)
    #[command(group = ArgGroup::new("which").required(true))]
    Poly {
        /// The n-th cyclotomic polynomial
        #[arg(long, group = "which", value_name = "N")]
        cyclotomic: Option<u64>,
        /// The semigroup polynomial of these generators
        #[arg(long, group = "which", num_args = 1.., value_name = "GEN")]
        semigroup_poly: Option<Vec<u64>>,
    },
}

#[derive(Clone, Copy, Debug)]
enum ConjectureChoice {
    CompleteIntersection,
    Length,
    Msg,
    MaximalsD,
    All,
}

fn parse_conjecture(value: &str) -> Result<ConjectureChoice, String> {
    match value {
        "1" => Ok(ConjectureChoice::CompleteIntersection),
        "length" => Ok(ConjectureChoice::Length),
        "msg" => Ok(ConjectureChoice::Msg),
        "maximalsD" => Ok(ConjectureChoice::MaximalsD),
        "all" => Ok(ConjectureChoice::All),
        _ => Err(format!("unknown conjecture '{value}' (expected 1, length, msg, maximalsD or all)")),
    }
}

impl ConjectureChoice {
    fn to_set(self) -> ConjectureSet {
        match self {
            ConjectureChoice::CompleteIntersection => {
                ConjectureSet { complete_intersection: true, ..ConjectureSet::none() }
            }
            ConjectureChoice::Length => {
                ConjectureSet { length_inequality: true, ..ConjectureSet::none() }
            }
            ConjectureChoice::Msg => {
                ConjectureSet { minimal_generators: true, ..ConjectureSet::none() }
            }
            ConjectureChoice::MaximalsD => {
                ConjectureSet { positive_support: true, ..ConjectureSet::none() }
            }
            ConjectureChoice::All => ConjectureSet::all(),
        }
    }
}

enum CliError {
    Core(cyclosemi_core::Error),
    Io(std::io::Error),
}

impl From<cyclosemi_core::Error> for CliError {
    fn from(e: cyclosemi_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(e) if report::is_arithmetic_error(e) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

/// Parses arguments and dispatches; usage errors exit with code 2 through
/// clap, everything else is mapped here.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Analyze { generators, json: _, pretty, exp_bound } => {
            let analysis = report::analyze(&generators, exp_bound)?;
            if pretty {
                print!("{}", analysis.pretty());
            } else {
                println!("{}", serde_json::to_string_pretty(&analysis).expect("report is serializable"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { frobenius_max, out, checkpoint, jobs, resume } => {
            let jobs = jobs.unwrap_or_else(default_jobs);
            let precomputed = match (&checkpoint, resume) {
                (Some(path), true) => read_checkpoint(path)?
                    .into_iter()
                    .filter(|s| s.frobenius <= frobenius_max)
                    .collect(),
                _ => Vec::new(),
            };
            let mut writer = match &checkpoint {
                Some(path) => {
                    let done: std::collections::BTreeSet<u64> =
                        precomputed.iter().map(|s| s.frobenius).collect();
                    let pending: Vec<u64> = (1..=frobenius_max)
                        .step_by(2)
                        .filter(|f| !done.contains(f))
                        .collect();
                    Some(CheckpointWriter::create(path, resume, pending)?)
                }
                None => None,
            };
            let mut write_error = None;
            let report = run_census(
                frobenius_max,
                jobs,
                ConjectureSet::none(),
                precomputed,
                |slice| {
                    if let Some(w) = writer.as_mut()
                        && let Err(e) = w.submit(slice) {
                            write_error = write_error.take().or(Some(e));
                        }
                },
            )?;
            if let Some(e) = write_error {
                return Err(e.into());
            }
            emit_census(&report, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { conjecture, frobenius_max } => {
            let set = conjecture.to_set();
            let report =
                run_census(frobenius_max, default_jobs(), set, Vec::new(), |_| {})?;
            print!("{}", report::verification_lines(&report));
            let failed = report.conjectures.iter().any(|c| !c.verified());
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Poly { cyclotomic, semigroup_poly } => {
            let coeffs = match (cyclotomic, semigroup_poly) {
                (Some(n), None) => polynomials::cyclotomic(n)?.coeffs().to_vec(),
                (None, Some(gens)) => {
                    let s = NumericalSemigroup::from_generators(&gens)?;
                    cyclosemi_core::cyclotomy::semigroup_polynomial(&s).coeffs().to_vec()
                }
                _ => unreachable!("clap enforces exactly one source"),
            };
            println!("{}", report::poly_json(&coeffs));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_census(report: &CensusReport, out: Option<&std::path::Path>) -> Result<(), CliError> {
    print!("{}", report::census_histogram(report));
    let summary = report::CensusSummary::new(report);
    match out {
        Some(path) => {
            std::fs::write(path, report::census_csv(report))?;
            let summary_path = path.with_extension("summary.json");
            std::fs::write(
                &summary_path,
                serde_json::to_string_pretty(&summary).expect("summary is serializable"),
            )?;
            println!("rows:    {}", path.display());
            println!("summary: {}", summary_path.display());
        }
        None => {
            println!("{}", serde_json::to_string(&summary).expect("summary is serializable"));
        }
    }
    Ok(())
}
