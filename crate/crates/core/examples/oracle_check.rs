//! Compares the linear-time pipeline with union-find on the explicit graph
//! over a batch of random weighted rows.
//!
//! Run with `cargo run --release --example oracle_check -- 2000`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toeplitz_fnf::oracle::{build_row_graph, components_oracle, partition_from_labels};
use toeplitz_fnf::{compute_fnf, BlockOrder, FirstRow};

fn main() -> toeplitz_fnf::Result<()> {
    let trials: usize = std::env::args().nth(1).map_or(1000, |s| s.parse().expect("trial count"));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut blocks = 0;
    for _ in 0..trials {
        let n = rng.gen_range(1..=300);
        let mut a = vec![0i64; n];
        for _ in 0..rng.gen_range(0..6) {
            a[rng.gen_range(0..n)] = rng.gen_range(-9..=9);
        }
        let row = FirstRow::new(a)?;
        let fnf = compute_fnf(&row, BlockOrder::Canonical)?;
        let expected = components_oracle(&build_row_graph(&row));
        assert_eq!(partition_from_labels(fnf.cis.as_slice()), expected, "row {:?}", row.entries());
        blocks += fnf.block_count();
    }
    println!("{trials} rows agree with the oracle ({blocks} blocks in total)");
    Ok(())
}
