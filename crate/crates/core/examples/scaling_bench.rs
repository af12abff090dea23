//! Times the pipeline on random offset sets and fits the growth exponent.
//!
//! Run with `cargo run --release --example scaling_bench`.

use toeplitz_fnf::cli::{run_bench, BenchConfig, BenchPolicy};

fn main() -> toeplitz_fnf::Result<()> {
    let config = BenchConfig {
        sizes: vec![10_000, 100_000, 1_000_000, 4_000_000],
        policy: BenchPolicy::PaperLike,
        seed: 42,
        reps: 3,
        oracle_budget: 20_000,
    };
    let report = run_bench(&config)?;
    print!("{}", report.to_text());
    Ok(())
}
