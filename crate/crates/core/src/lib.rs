//! Linear-time Frobenius normal form of symmetric Toeplitz matrices.
//!
//! The normal form of a symmetric matrix is a direct sum of irreducible
//! blocks, one per connected component of its weighted graph. For a symmetric
//! Toeplitz matrix `T[a_0, ..., a_{n-1}]` that graph joins `u` and `v` whenever
//! `a_{|u - v|} != 0`, and every component is again a weighted Toeplitz graph,
//! so each block is itself symmetric Toeplitz.
//!
//! The pipeline works on the first row alone:
//!
//! 1. [`offsets_from_row`] extracts the nonzero off-diagonal offsets.
//! 2. [`reduce`] shrinks the offset set with isolated-vertex removal and
//!    residue-class contraction, counting components on the way.
//! 3. [`recover_cis`] replays the reduction backwards into a component label
//!    for every vertex.
//! 4. [`extract_blocks`] reads each block's first row off the original row.
//!
//! All four steps are `O(n)`. [`compute_fnf`] runs them in sequence.
//!
//! ```
//! use toeplitz_fnf::{compute_fnf, BlockOrder, FirstRow};
//!
//! let row = FirstRow::new(vec![0.0, 0.0, 3.0, 0.0, 8.0, 0.0, 9.0]).unwrap();
//! let fnf = compute_fnf(&row, BlockOrder::Canonical).unwrap();
//! assert_eq!(fnf.block_count(), 2);
//! assert_eq!(fnf.blocks[0].first_row, vec![0.0, 3.0, 8.0, 9.0]);
//! assert_eq!(fnf.blocks[1].vertices, vec![2, 4, 6]);
//! ```
//!
//! The [`oracle`] module holds brute-force graph implementations used to
//! verify the fast path, and [`cli`] backs the `fnf` binary.

pub mod cli;
pub mod error;
pub mod fnf;
pub mod oracle;
pub mod recovery;
pub mod reduction;
pub mod toeplitz;

pub use error::{FnfError, Result};
pub use fnf::{compute_fnf, extract_blocks, permutation_from_cis, BlockOrder, FnfBlock, FnfResult};
pub use recovery::{recover_cis, ComponentIndexSequence};
pub use reduction::{alpha_reduce, beta_reduce, da, reduce, ReductionKind, ReductionStep, ReductionTrace};
pub use toeplitz::{offsets_from_row, toeplitz_entry, FirstRow, OffsetSet, Scalar};
