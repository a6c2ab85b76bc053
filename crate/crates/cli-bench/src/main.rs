use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cli_bench::commands::{cmd_bench, cmd_estimate_p, cmd_sample, BenchConfig, SampleConfig};
use cli_bench::verify::cmd_verify;
use grover_sampler::{Backend, EstimateMethod, DEFAULT_MAX_RETRIES};

/// Grover-backed spatial discretization toolkit: sample uniform feasible
/// points on an obstacle grid, verify the reversible-arithmetic operators,
/// and benchmark quantum vs classical oracle-query counts.
#[derive(Parser)]
#[command(name = "qdisc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum BackendArg {
    #[default]
    Quantum,
    Classical,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Quantum => Backend::Quantum,
            BackendArg::Classical => Backend::Classical,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum MethodArg {
    #[default]
    Exact,
    MonteCarlo,
}

#[derive(Subcommand)]
enum Command {
    /// Sample feasible points and emit points/stats CSVs plus a scene SVG
    Sample {
        /// Scene document (JSON)
        #[arg(long)]
        scene: PathBuf,
        /// Number of feasible points to collect
        #[arg(long)]
        points: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        backend: BackendArg,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        /// Per-point retry budget before reporting amplification failure
        #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
        max_retries: u64,
    },
    /// Exhaustively verify every circuit operator and the resource ledger
    Verify {
        /// Coordinate width in bits (sweeps all 4^bits inputs; max 4)
        #[arg(long, default_value_t = 3)]
        bits: u32,
    },
    /// Compare quantum vs classical oracle-query counts over a scene list
    Bench {
        /// Text file listing scene paths (one per line, relative to it)
        #[arg(long)]
        scene_list: PathBuf,
        /// Feasible points per run (M)
        #[arg(long)]
        points: u64,
        /// Number of seeds to average over
        #[arg(long, default_value_t = 30)]
        seeds: u64,
        /// Base seed; run i uses base + i
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Estimate the feasible fraction of a scene
    EstimateP {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        /// Sample count for the monte-carlo method
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<(), cli_bench::CliError> {
    match cli.command {
        Command::Sample {
            scene,
            points,
            seed,
            backend,
            out,
            max_retries,
        } => {
            let (artifact, run) = cmd_sample(&SampleConfig {
                scene,
                points,
                seed,
                backend: backend.into(),
                out_dir: out,
                max_retries,
            })?;
            println!(
                "sampled {} points ({} backend) with {} oracle calls, {} retries",
                run.stats.accepted_points, run.backend, run.stats.oracle_calls, run.stats.retries
            );
            println!("wrote {}", artifact.manifest.parent().unwrap_or(std::path::Path::new(".")).display());
            Ok(())
        }
        Command::Verify { bits } => {
            let report = cmd_verify(bits)?;
            print!("{}", report.render());
            if report.passed() {
                Ok(())
            } else {
                let detail = report
                    .failure
                    .as_ref()
                    .map(|f| format!("{} at {}", f.operator, f.input))
                    .unwrap_or_else(|| "resource ledger mismatch".into());
                Err(cli_bench::CliError::Verification(detail))
            }
        }
        Command::Bench {
            scene_list,
            points,
            seeds,
            seed,
            out,
        } => {
            let artifact = cmd_bench(&BenchConfig {
                scene_list,
                points,
                seed_count: seeds,
                base_seed: seed,
                out_dir: out,
            })?;
            println!("wrote {}", artifact.manifest.parent().unwrap_or(std::path::Path::new(".")).display());
            Ok(())
        }
        Command::EstimateP {
            scene,
            method,
            samples,
            seed,
        } => {
            let method = match method {
                MethodArg::Exact => EstimateMethod::Exact,
                MethodArg::MonteCarlo => EstimateMethod::MonteCarlo { samples, seed },
            };
            let est = cmd_estimate_p(&scene, method)?;
            match est.feasible_count {
                Some(count) => println!("p = {} ({} feasible cells, exact)", est.p, count),
                None => println!("p = {} (std error {})", est.p, est.std_error),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
