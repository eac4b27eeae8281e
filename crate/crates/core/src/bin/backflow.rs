use std::path::PathBuf;
use std::process::ExitCode;

use backflow::runner::{
    emit, run_experiment, run_property_suite, BoundVariant, ExperimentConfig, ModelKind, Overrides,
};
use backflow::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(version, about = "Information backflow bounds for open quantum systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    Tight,
    General,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a model and tabulate quantifiers against their backflow bounds.
    Figure {
        /// JSON configuration file; flags below override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// spin_star or jc
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long)]
        horizon: Option<f64>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Defaults to $BACKFLOW_OUTPUT_DIR/figure_<model>.<format>.
        #[arg(long)]
        output: Option<PathBuf>,
        /// csv or json
        #[arg(long)]
        format: Option<String>,
        #[arg(long, value_enum)]
        bound: Option<Bound>,
    },
    /// Run the randomized property suite.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
    },
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_CONFIG: u8 = 2;

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(EXIT_CONFIG)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Figure {
            config,
            model,
            mu,
            horizon,
            grid,
            seed,
            output,
            format,
            bound,
        } => {
            let base = match &config {
                Some(path) => match ExperimentConfig::from_file(path) {
                    Ok(c) => c,
                    Err(e) => return fail(e),
                },
                None => {
                    let kind = model.as_deref().and_then(ModelKind::parse).unwrap_or(ModelKind::SpinStar);
                    ExperimentConfig::for_model(kind)
                }
            };
            let overrides = Overrides {
                model,
                mu,
                horizon,
                grid,
                seed,
                output,
                format,
                bound: bound.map(|b| match b {
                    Bound::Tight => BoundVariant::Tight,
                    Bound::General => BoundVariant::General,
                }),
            };
            let config = match overrides.apply(base) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let table = match run_experiment(&config) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            let path = config.resolved_output();
            if let Err(e) = emit(&table, config.format, &path) {
                return fail(e);
            }
            println!("wrote {} rows to {}", table.rows.len(), path.display());
            for (q, r) in &table.summary.revivals {
                println!("  revivals {q:<22} {r:.6e}");
            }
            for (id, s) in &table.summary.min_slack {
                println!("  min slack {id:<40} {s:.6e}");
            }
            if table.summary.all_satisfied {
                ExitCode::SUCCESS
            } else {
                eprintln!("{} bound violations", table.summary.violations);
                ExitCode::from(EXIT_VIOLATION)
            }
        }
        Command::Check { seed, trials, json } => {
            let report = match run_property_suite(seed, trials) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if json {
                match serde_json::to_string_pretty(&report) {
                    Ok(s) => println!("{s}"),
                    Err(e) => return fail(Error::Serialization(e.to_string())),
                }
            } else {
                for (family, s) in report.families() {
                    println!("{family:<45} {:>8}/{:<8} worst slack {:.3e}", s.passed, s.checks, s.worst_slack);
                }
                println!("{} checks, {} violations", report.checks(), report.violations());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            }
        }
    }
}
