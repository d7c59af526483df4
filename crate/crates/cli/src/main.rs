mod commands;
mod range;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use starcut::oracles::SearchBudget;
use starcut::{Family, Mode};

use crate::commands::Outcome;
use crate::range::IntRange;

/// Exit codes shared by every subcommand.
pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "starcut",
    version,
    about = "Star structure cuts of hypercubes and folded hypercubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print f(r), g(r) and the guaranteed dimensions as TSV.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=1 << 20))]
        max_r: u64,
    },
    /// Build the standard cut, write it as a witness and verify it.
    Construct(ConstructArgs),
    /// Compute the minimum cut size exactly, or check a witness file.
    Solve(SolveArgs),
    /// Run the counting-lemma checkers.
    Lemmas(LemmaArgs),
    /// Survey cells of the conjectured formula.
    Conjecture(ConjectureArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(short = 'f', long = "family")]
    family: Family,
    #[arg(short = 'n', long = "n")]
    n: u32,
    #[arg(short = 'r', long = "r")]
    r: usize,
    /// Witness output path.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Enumeration nodes per phase.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_COMPONENTS)]
    budget_components: u64,
    /// Wall-clock limit per solve.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_WALL_LIMIT.as_secs())]
    budget_seconds: u64,
    /// Branches per cover search.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_COVER_BRANCHES)]
    budget_cover_branches: u64,
    /// Skip components larger than this (makes the result inconclusive if used).
    #[arg(long)]
    max_component_size: Option<usize>,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget {
            max_components: self.budget_components,
            max_component_size: self.max_component_size.unwrap_or(usize::MAX),
            max_cover_branches: self.budget_cover_branches,
            wall_limit: Duration::from_secs(self.budget_seconds),
            workers: SearchBudget::workers_from_env(),
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(
        short = 'f',
        long = "family",
        required_unless_present = "check_witness"
    )]
    family: Option<Family>,
    #[arg(short = 'n', long = "n", required_unless_present = "check_witness")]
    n: Option<u32>,
    #[arg(short = 'r', long = "r", required_unless_present = "check_witness")]
    r: Option<usize>,
    #[arg(long, default_value = "structure")]
    mode: Mode,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Certificate output path.
    #[arg(long)]
    cert: Option<PathBuf>,
    /// Verify a witness file instead of solving.
    #[arg(long, conflicts_with_all = ["family", "n", "r", "cert"])]
    check_witness: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum LemmaSelector {
    CommonNeighbors,
    StarBounds,
    All,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    #[arg(long, value_enum, default_value = "all")]
    id: LemmaSelector,
    #[arg(short = 'f', long = "family")]
    family: Family,
    /// Dimensions, e.g. `3..5`.
    #[arg(short = 'n', long = "n")]
    n: IntRange,
    /// Star sizes for the star-bounds checker; defaults to 2..degree.
    #[arg(short = 'r', long = "r")]
    r: Option<IntRange>,
    /// Largest component size for the star-bounds checker.
    #[arg(long, default_value_t = 4)]
    kmax: usize,
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    #[arg(short = 'f', long = "family")]
    family: Family,
    #[arg(short = 'n', long = "n")]
    n: IntRange,
    #[arg(short = 'r', long = "r")]
    r: IntRange,
    /// Restrict to one mode; both are surveyed by default.
    #[arg(long)]
    mode: Option<Mode>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write a witness file for every solved cell into this directory.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
}

/// One JSON line on standard error per invocation.
#[derive(Serialize)]
struct RunRecord<'a> {
    command: &'a [String],
    outcome: &'static str,
    exit_code: u8,
    elapsed_ms: u128,
    artifacts: Vec<String>,
}

fn outcome_name(code: u8) -> &'static str {
    match code {
        EXIT_OK => "success",
        EXIT_FAILURE => "failure",
        EXIT_USAGE => "usage",
        _ => "inconclusive",
    }
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Tables { max_r } => commands::tables(max_r),
        Command::Construct(a) => commands::construct(a.family, a.n, a.r, a.out.as_deref()),
        Command::Solve(a) => match a.check_witness {
            Some(path) => commands::check_witness(&path, a.mode),
            None => commands::solve(
                a.family.expect("required by clap"),
                a.n.expect("required by clap"),
                a.r.expect("required by clap"),
                a.mode,
                a.budget.budget(),
                a.cert.as_deref(),
            ),
        },
        Command::Lemmas(a) => commands::lemmas(
            a.id != LemmaSelector::StarBounds,
            a.id != LemmaSelector::CommonNeighbors,
            a.family,
            a.n,
            a.r,
            a.kmax,
        ),
        Command::Conjecture(a) => {
            let modes: Vec<Mode> = match a.mode {
                Some(m) => vec![m],
                None => Mode::BOTH.to_vec(),
            };
            commands::conjecture(
                a.family,
                a.n,
                a.r,
                &modes,
                a.budget.budget(),
                a.witness_dir.as_deref(),
            )
        }
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let argv: Vec<String> = std::env::args().collect();
    let outcome = match Cli::try_parse_from(&argv) {
        Ok(cli) => dispatch(cli),
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            Outcome {
                code,
                ..Outcome::default()
            }
        }
    };

    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    if let Some(msg) = &outcome.error {
        eprintln!("error: {msg}");
    }
    let record = RunRecord {
        command: &argv,
        outcome: outcome_name(outcome.code),
        exit_code: outcome.code,
        elapsed_ms: start.elapsed().as_millis(),
        artifacts: outcome
            .artifacts
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
    };
    eprintln!(
        "{}",
        serde_json::to_string(&record).expect("record serializes")
    );
    ExitCode::from(outcome.code)
}
