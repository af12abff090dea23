//! Rebuilding component labels by replaying a reduction trace backwards.

use crate::error::{FnfError, Result};
use crate::reduction::{ReductionKind, ReductionTrace};

/// Component index sequence: `rho(v)` in `[1, c]` for every vertex `v` in
/// `[1, n]`, with `rho(u) == rho(v)` iff `u` and `v` share a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentIndexSequence {
    labels: Vec<usize>,
    count: usize,
}

impl ComponentIndexSequence {
    /// Validates that `labels` is a surjection onto `[1, count]`.
    pub fn new(labels: Vec<usize>, count: usize) -> Result<Self> {
        let mut seen = vec![false; count + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l > count {
                return Err(FnfError::InvalidCis(format!(
                    "vertex {} has index {l} outside [1, {count}]",
                    v + 1
                )));
            }
            seen[l] = true;
        }
        if let Some(missing) = seen.iter().skip(1).position(|&s| !s) {
            return Err(FnfError::InvalidCis(format!("index {} is never used", missing + 1)));
        }
        Ok(Self { labels, count })
    }

    pub(crate) fn from_raw(labels: Vec<usize>, count: usize) -> Self {
        Self { labels, count }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of components `c`.
    pub fn count(&self) -> usize {
        self.count
    }

    /// `rho(v)` for 1-based `v`.
    pub fn get(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    /// `rho` as a slice indexed by `v - 1`.
    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }

    /// Vertices of each class in increasing order, indexed by `rho - 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            classes[l - 1].push(v + 1);
        }
        classes
    }
}

/// Replays `trace` from the edgeless terminal instance back to the original
/// order.
///
/// Terminal vertices are their own components. Undoing an alpha step splits
/// the labels in half, moves the back half right by the number of removed
/// vertices and gives each removed vertex a fresh index. Undoing a beta step
/// extends the labels periodically with period `d`. A single buffer of length
/// `n` is rewritten in place, so the replay costs `O(sum of orders) = O(n)`.
pub fn recover_cis(trace: &ReductionTrace) -> Result<ComponentIndexSequence> {
    trace.validate()?;
    let mut rho = vec![0usize; trace.n];
    for (p, slot) in rho[..trace.n_final].iter_mut().enumerate() {
        *slot = p + 1;
    }
    let mut next_fresh = trace.n_final;
    for step in trace.steps.iter().rev() {
        let (outer, inner) = (step.n_before, step.n_after);
        match step.kind {
            ReductionKind::Alpha => {
                let removed = outer - inner;
                assert!(inner % 2 == 0, "alpha step leaves odd order {inner}");
                let half = inner / 2;
                rho.copy_within(half..inner, half + removed);
                for (p, slot) in rho[half..half + removed].iter_mut().enumerate() {
                    *slot = next_fresh + p + 1;
                }
                next_fresh += removed;
            }
            ReductionKind::Beta => {
                let d = step.d;
                for p in inner..outer {
                    rho[p] = rho[p - d];
                }
            }
        }
    }
    debug_assert_eq!(next_fresh, trace.c_total);
    Ok(ComponentIndexSequence::from_raw(rho, trace.c_total))
}
