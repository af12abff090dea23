//! A weighted row split into blocks, then checked by conjugating the dense
//! matrix with the permutation.
//!
//! Run with `cargo run --example weighted_row`.

use toeplitz_fnf::oracle::{conjugate, dense_matrix, direct_sum};
use toeplitz_fnf::{compute_fnf, BlockOrder, FirstRow};

fn print_matrix(m: &[Vec<f64>]) {
    for r in m {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>4}")).collect();
        println!("  {}", cells.join(""));
    }
}

fn main() -> toeplitz_fnf::Result<()> {
    let row = FirstRow::new(vec![0.0, 0.0, 3.0, 0.0, 8.0, 0.0, 9.0])?;
    println!("original:");
    print_matrix(&dense_matrix(&row));

    let fnf = compute_fnf(&row, BlockOrder::Canonical)?;
    for block in &fnf.blocks {
        println!("block {:?} on vertices {:?}", block.first_row, block.vertices);
    }
    println!("permutation: {:?}", fnf.permutation);

    let permuted = conjugate(&dense_matrix(&row), &fnf.permutation);
    println!("permuted:");
    print_matrix(&permuted);
    assert_eq!(permuted, direct_sum(&fnf.block_rows(), 0.0));
    println!("permuted matrix equals the direct sum of the blocks");
    Ok(())
}
