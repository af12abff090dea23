use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use toeplitz_fnf::cli::{self, exit, BenchConfig, BenchPolicy, ComputeOptions, OutputFormat};
use toeplitz_fnf::BlockOrder;

#[derive(Debug, Parser)]
#[command(name = "fnf", version, about = "Frobenius normal form of symmetric Toeplitz matrices")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Canonical,
    Discovered,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the normal form of the matrix given by its first row.
    Compute {
        #[arg(long, value_enum, default_value = "canonical")]
        order: Order,
        /// Include the reduction trace.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Entries with absolute value at most EPS are treated as zero.
        #[arg(long, value_name = "EPS", default_value_t = 0.0)]
        tolerance: f64,
        /// Input file, or `-` for standard input.
        input: String,
    },
    /// Check the result against the brute-force graph oracle.
    Verify {
        #[arg(long, value_name = "N", default_value_t = cli::DEFAULT_VERIFY_BUDGET)]
        budget: usize,
        input: String,
    },
    /// Time the pipeline across matrix orders.
    Bench {
        /// Comma-separated orders, ascending.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value = "uniform-k")]
        policy: BenchPolicy,
        #[arg(long, env = "FNF_SEED", default_value_t = cli::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Also time the oracle up to this order.
        #[arg(long, default_value_t = cli::DEFAULT_VERIFY_BUDGET)]
        oracle_budget: usize,
    },
}

fn run(args: Args) -> i32 {
    match args.command {
        Command::Compute { order, trace, format, tolerance, input } => {
            let row = match cli::read_source(&input).and_then(|t| cli::parse_input(&t, tolerance)) {
                Ok(row) => row,
                Err(e) => {
                    eprintln!("error: {e}");
                    return exit::INPUT_ERROR;
                }
            };
            let opts = ComputeOptions {
                order: match order {
                    Order::Canonical => BlockOrder::Canonical,
                    Order::Discovered => BlockOrder::Discovered,
                },
                trace,
                format: match format {
                    Format::Json => OutputFormat::Json,
                    Format::Text => OutputFormat::Text,
                },
            };
            match cli::cmd_compute(&row, &opts) {
                Ok(out) => {
                    print!("{out}");
                    exit::SUCCESS
                }
                Err(e) => {
                    eprintln!("internal error: {e}");
                    exit::INTERNAL_ERROR
                }
            }
        }
        Command::Verify { budget, input } => {
            let row = match cli::read_source(&input).and_then(|t| cli::parse_input(&t, 0.0)) {
                Ok(row) => row,
                Err(e) => {
                    eprintln!("error: {e}");
                    return exit::INPUT_ERROR;
                }
            };
            match cli::cmd_verify(&row, budget) {
                Ok(report) => {
                    print!("{}", report.to_text());
                    if report.passed() {
                        exit::SUCCESS
                    } else {
                        exit::VERIFY_FAILED
                    }
                }
                Err(e @ cli::VerifyError::BudgetExceeded { .. }) => {
                    eprintln!("error: {e}");
                    exit::INPUT_ERROR
                }
                Err(e) => {
                    eprintln!("internal error: {e}");
                    exit::INTERNAL_ERROR
                }
            }
        }
        Command::Bench { sizes, policy, seed, reps, oracle_budget } => {
            if sizes.windows(2).any(|w| w[0] > w[1]) || sizes.contains(&0) {
                eprintln!("error: --sizes must be positive and ascending");
                return exit::INPUT_ERROR;
            }
            let config = BenchConfig { sizes, policy, seed, reps, oracle_budget };
            match cli::run_bench(&config) {
                Ok(report) => {
                    print!("{}", report.to_text());
                    exit::SUCCESS
                }
                Err(e) => {
                    eprintln!("internal error: {e}");
                    exit::INTERNAL_ERROR
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let code = run(Args::parse());
    ExitCode::from(code as u8)
}
