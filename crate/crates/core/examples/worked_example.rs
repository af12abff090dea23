//! Full pipeline on a 31-vertex 0/1 row with nonzero diagonals 12, 18, 24, 29.
//!
//! Run with `cargo run --example worked_example`.

use toeplitz_fnf::{compute_fnf, BlockOrder, FirstRow};

fn main() -> toeplitz_fnf::Result<()> {
    let mut a = vec![0u8; 31];
    for s in [12, 18, 24, 29] {
        a[s] = 1;
    }
    let row = FirstRow::new(a)?;
    let fnf = compute_fnf(&row, BlockOrder::Canonical)?;

    println!("reduction orders: {:?}", fnf.trace.orders());
    for step in &fnf.trace.steps {
        println!(
            "  {:?}: {} -> {} (d = {}, split off {})",
            step.kind, step.n_before, step.n_after, step.d, step.c
        );
    }
    println!("component index sequence: {:?}", fnf.cis.as_slice());
    for (k, block) in fnf.blocks.iter().enumerate() {
        let ones: Vec<usize> = (1..block.size()).filter(|&i| block.first_row[i] != 0).collect();
        println!(
            "block {} of order {}: nonzero diagonals {:?}, vertices {:?}",
            k + 1,
            block.size(),
            ones,
            block.vertices
        );
    }
    println!("permutation: {:?}", fnf.permutation);
    Ok(())
}
