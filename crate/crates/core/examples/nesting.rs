//! Looks for each block inside the larger ones as a principal submatrix.
//!
//! Run with `cargo run --example nesting`.

use toeplitz_fnf::oracle::{nesting_check, principal_submatrix_witness, DEFAULT_NESTING_CAP};
use toeplitz_fnf::{compute_fnf, BlockOrder, FirstRow};

fn main() -> toeplitz_fnf::Result<()> {
    let rows: [Vec<u8>; 3] = [
        vec![0, 0, 1, 0, 1, 0, 1],
        vec![0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1],
        {
            let mut a = vec![0; 31];
            for s in [12, 18, 24, 29] {
                a[s] = 1;
            }
            a
        },
    ];
    for a in rows {
        let row = FirstRow::new(a)?;
        let fnf = compute_fnf(&row, BlockOrder::Canonical)?;
        let blocks = fnf.block_rows();
        println!("order {} -> block sizes {:?}", row.order(), fnf.block_sizes());
        println!("  brute force: {:?}", nesting_check(&blocks, DEFAULT_NESTING_CAP));
        for pair in blocks.windows(2) {
            match principal_submatrix_witness(pair[0], pair[1]) {
                Some(rows) => println!("  {:?} sits in the previous block at rows {:?}", pair[1], rows),
                None => println!("  {:?} is not a principal submatrix of the previous block", pair[1]),
            }
        }
    }
    Ok(())
}
