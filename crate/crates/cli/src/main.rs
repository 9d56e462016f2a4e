use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use matchdist_core::distance::{matching_distance, matching_distance_table};
use matchdist_core::experiment::{experiment_counts, experiment_csv};
use matchdist_core::formats::{
    crit_to_json, match_result_json, parse_input_file, parse_module_file, switch_points_csv,
    switch_points_json,
};
use matchdist_core::persistence::{critical_points, lub_closure};
use matchdist_core::switch::{all_switch_points, theoretical_bound};
use matchdist_core::{CritSet, RectModule, SwitchPoint};

mod verify;

#[derive(Parser)]
#[command(name = "matchdist", version, about = "Exact matching distance between rectangle-decomposable bipersistence modules")]
struct Cli {
    /// Worker threads; outputs do not depend on this.
    #[arg(long, global = true, env = "MATCHDIST_THREADS")]
    threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Critical values of a module as a critset-v1 file.
    Critvals {
        module: PathBuf,
        /// Close the set under least upper bounds.
        #[arg(long)]
        closed: bool,
    },
    /// Switch points of a pair of modules or critical-value files.
    SwitchPoints {
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        n: PathBuf,
        /// Every emitted point in algorithm order, with repeats.
        #[arg(long, conflicts_with = "dedup")]
        raw: bool,
        /// Distinct points in canonical order (default).
        #[arg(long)]
        dedup: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Matching distance and a witness line.
    MatchingDistance {
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        n: PathBuf,
        /// Include the value of every candidate line.
        #[arg(long)]
        per_line: bool,
    },
    /// Run a randomized audit against the brute-force oracles.
    Verify {
        suite: verify::Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    Experiment {
        #[command(subcommand)]
        command: ExperimentCommand,
    },
    /// Worst-case switch-point count for n critical values.
    Bound {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Switch-point counts on seeded random module pairs, as CSV.
    Counts {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rectangle corners are drawn from [0, coord-max].
        #[arg(long, default_value_t = 10)]
        coord_max: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

pub enum Failure {
    /// Unreadable or invalid input (exit 2).
    Input(anyhow::Error),
    /// A verified property did not hold (exit 3).
    Invariant(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn read(path: &Path) -> anyhow::Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_module(path: &Path) -> anyhow::Result<RectModule> {
    parse_module_file(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_crit(path: &Path) -> anyhow::Result<std::collections::BTreeSet<matchdist_core::Point>> {
    let file = parse_input_file(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    Ok(file.critical_points())
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Critvals { module, closed } => {
            let points = critical_points(&load_module(&module)?);
            crit_to_json(&if closed { lub_closure(&points) } else { points }) + "\n"
        }
        Command::SwitchPoints { m, n, raw, dedup: _, format } => {
            let crit = CritSet::from_sources(&load_crit(&m)?, &load_crit(&n)?);
            let run = all_switch_points(&crit);
            let points: Vec<SwitchPoint> =
                if raw { run.raw().cloned().collect() } else { run.unique().into_iter().collect() };
            match format {
                Format::Csv => switch_points_csv(&points),
                Format::Json => switch_points_json(&points) + "\n",
            }
        }
        Command::MatchingDistance { m, n, per_line } => {
            let (m, n) = (load_module(&m)?, load_module(&n)?);
            let result = if per_line { matching_distance_table(&m, &n) } else { matching_distance(&m, &n) };
            match_result_json(&result) + "\n"
        }
        Command::Verify { suite, seed, trials } => {
            let report = verify::run(suite, seed, trials);
            if report.failures > 0 {
                return Err(Failure::Invariant(report.summary));
            }
            report.summary + "\n"
        }
        Command::Experiment { command: ExperimentCommand::Counts { sizes, runs, seed, coord_max } } => {
            let rows = experiment_counts(&sizes, runs, seed, coord_max).map_err(|e| anyhow!(e))?;
            experiment_csv(&rows)
        }
        Command::Bound { n } => format!("{}\n", theoretical_bound(n)),
    })
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(cli.command).and_then(|text| emit(&text, cli.out.as_deref()).map_err(Failure::Input));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(3)
        }
    }
}
