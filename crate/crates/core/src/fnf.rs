//! Frobenius normal form assembly.
//!
//! Every component of a weighted Toeplitz graph is itself a weighted Toeplitz
//! graph once its vertices `v_1 < ... < v_k` are relabeled `1..=k`, so each
//! diagonal block is fully described by the first row
//! `[a_0, a_{v_2 - v_1}, ..., a_{v_k - v_1}]`.

use crate::error::{FnfError, Result};
use crate::recovery::{recover_cis, ComponentIndexSequence};
use crate::reduction::{reduce, ReductionTrace};
use crate::toeplitz::{offsets_from_row, FirstRow, Scalar};

/// Order in which diagonal blocks are emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockOrder {
    /// Decreasing size, ties broken by least vertex label.
    #[default]
    Canonical,
    /// Component index order as produced by recovery.
    Discovered,
}

/// One irreducible diagonal block.
#[derive(Debug, Clone, PartialEq)]
pub struct FnfBlock<T> {
    /// First row of the symmetric Toeplitz block.
    pub first_row: Vec<T>,
    /// Original vertex labels of the component, increasing.
    pub vertices: Vec<usize>,
}

impl<T> FnfBlock<T> {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Frobenius normal form of a symmetric Toeplitz matrix.
///
/// `permutation[p - 1]` is the original vertex placed at position `p`, so
/// entry `(p, q)` of the permuted matrix is `a_{|perm[p] - perm[q]|}`. The
/// CIS is relabeled so that `cis.get(v) == k` iff `v` belongs to `blocks[k - 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FnfResult<T> {
    pub n: usize,
    pub cis: ComponentIndexSequence,
    pub blocks: Vec<FnfBlock<T>>,
    pub permutation: Vec<usize>,
    pub trace: ReductionTrace,
}

impl<T> FnfResult<T> {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(FnfBlock::size).collect()
    }

    pub fn block_rows(&self) -> Vec<&[T]> {
        self.blocks.iter().map(|b| b.first_row.as_slice()).collect()
    }
}

/// Class sizes indexed by `rho - 1`.
fn class_sizes(cis: &ComponentIndexSequence) -> Vec<usize> {
    let mut sizes = vec![0usize; cis.count()];
    for &l in cis.as_slice() {
        sizes[l - 1] += 1;
    }
    sizes
}

/// Blocks of the normal form in component index order.
///
/// One pass over the vertices: the first vertex seen in a class is its anchor
/// `m`, and vertex `v` contributes `a_{v - m}` to that block's first row.
pub fn extract_blocks<T: Scalar>(
    cis: &ComponentIndexSequence,
    row: &FirstRow<T>,
) -> Result<Vec<FnfBlock<T>>> {
    if cis.order() != row.order() {
        return Err(FnfError::LengthMismatch { expected: row.order(), found: cis.order() });
    }
    let sizes = class_sizes(cis);
    let mut blocks: Vec<FnfBlock<T>> = sizes
        .iter()
        .map(|&k| FnfBlock { first_row: Vec::with_capacity(k), vertices: Vec::with_capacity(k) })
        .collect();
    let a = row.entries();
    for (idx, &l) in cis.as_slice().iter().enumerate() {
        let v = idx + 1;
        let block = &mut blocks[l - 1];
        let anchor = block.vertices.first().copied().unwrap_or(v);
        block.first_row.push(a[v - anchor]);
        block.vertices.push(v);
    }
    Ok(blocks)
}

/// Class indices (`rho - 1`) in emission order. Runs in `O(n + c)`.
fn class_order(cis: &ComponentIndexSequence, order: BlockOrder) -> Vec<usize> {
    match order {
        BlockOrder::Discovered => (0..cis.count()).collect(),
        BlockOrder::Canonical => {
            let sizes = class_sizes(cis);
            // Classes in order of first appearance, i.e. by anchor.
            let mut by_anchor = Vec::with_capacity(cis.count());
            let mut seen = vec![false; cis.count()];
            for &l in cis.as_slice() {
                if !seen[l - 1] {
                    seen[l - 1] = true;
                    by_anchor.push(l - 1);
                }
            }
            // Stable bucket sort by decreasing size.
            let max = sizes.iter().copied().max().unwrap_or(0);
            let mut start = vec![0usize; max + 2];
            for &s in &sizes {
                start[max - s + 1] += 1;
            }
            for k in 1..start.len() {
                start[k] += start[k - 1];
            }
            let mut out = vec![0usize; cis.count()];
            for k in by_anchor {
                let slot = &mut start[max - sizes[k]];
                out[*slot] = k;
                *slot += 1;
            }
            out
        }
    }
}

/// Permutation listing each block's vertices in increasing order, blocks in
/// the order chosen by `order`.
pub fn permutation_from_cis(cis: &ComponentIndexSequence, order: BlockOrder) -> Vec<usize> {
    let classes = class_order(cis, order);
    let sizes = class_sizes(cis);
    let mut offset = vec![0usize; cis.count()];
    let mut acc = 0;
    for &k in &classes {
        offset[k] = acc;
        acc += sizes[k];
    }
    let mut perm = vec![0usize; cis.order()];
    for (idx, &l) in cis.as_slice().iter().enumerate() {
        perm[offset[l - 1]] = idx + 1;
        offset[l - 1] += 1;
    }
    perm
}

/// Full pipeline: offsets, reduction, label recovery, block extraction and
/// ordering. Linear in `n`.
pub fn compute_fnf<T: Scalar>(row: &FirstRow<T>, order: BlockOrder) -> Result<FnfResult<T>> {
    let offsets = offsets_from_row(row);
    let trace = reduce(&offsets);
    let cis = recover_cis(&trace)?;
    let mut blocks: Vec<Option<FnfBlock<T>>> =
        extract_blocks(&cis, row)?.into_iter().map(Some).collect();

    let classes = class_order(&cis, order);
    let mut relabel = vec![0usize; cis.count()];
    for (pos, &k) in classes.iter().enumerate() {
        relabel[k] = pos + 1;
    }
    let labels = cis.into_labels().into_iter().map(|l| relabel[l - 1]).collect();
    let cis = ComponentIndexSequence::from_raw(labels, relabel.len());

    let blocks: Vec<FnfBlock<T>> = classes
        .iter()
        .map(|&k| blocks[k].take().expect("each class emitted once"))
        .collect();
    let permutation = blocks.iter().flat_map(|b| b.vertices.iter().copied()).collect();
    Ok(FnfResult { n: row.order(), cis, blocks, permutation, trace })
}
