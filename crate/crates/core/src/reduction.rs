//! Component counting by repeated shrinking of the offset set.
//!
//! Two reductions are applied until the offset set is empty:
//!
//! * **alpha** (`2 min S > n`): the middle vertices `n - s0 + 1 ..= s0` are
//!   isolated. Dropping them and shifting every offset down by
//!   `m = 2 s0 - n` leaves an isomorphic graph with `m` fewer components.
//! * **beta** (`2 min S <= n`): the graph is `d`-reachable for `d = da(S)`, so
//!   its components are unions of residue classes mod `d`. It is replaced by
//!   an order `d + (n mod d)` instance whose residue quotient is identical,
//!   which keeps the component count.
//!
//! Each beta step shrinks the order by a factor below 2/3 and an alpha step
//! is always followed by a beta step, so the loop does `O(n)` total work.

use crate::error::{FnfError, Result};
use crate::toeplitz::OffsetSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Alpha,
    Beta,
}

/// One iteration of [`reduce`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub n_before: usize,
    pub n_after: usize,
    /// `min S` for alpha steps, the reachability divisor for beta steps.
    pub d: usize,
    /// Components split off by this step; zero for beta steps.
    pub c: usize,
}

/// Intermediate data of [`reduce`], sufficient to rebuild the components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub n: usize,
    pub steps: Vec<ReductionStep>,
    /// Order of the terminal, edgeless instance.
    pub n_final: usize,
    /// Number of components of the original graph.
    pub c_total: usize,
}

impl ReductionTrace {
    /// Orders `n_1, ..., n_t` visited by the reduction.
    pub fn orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.steps.iter().map(|s| s.n_before).collect();
        orders.push(self.n_final);
        orders
    }

    /// Checks the chaining and per-step invariants. Used by recovery on
    /// externally supplied traces.
    pub fn validate(&self) -> Result<()> {
        let mut expected = self.n;
        let mut lost = 0usize;
        let mut prev_alpha = false;
        for (k, step) in self.steps.iter().enumerate() {
            let bad = |what: &str| Err(FnfError::Contract(format!("trace step {k}: {what}")));
            if step.n_before != expected {
                return bad("order does not chain");
            }
            match step.kind {
                ReductionKind::Alpha => {
                    if prev_alpha {
                        return bad("two consecutive alpha steps");
                    }
                    if step.c == 0
                        || 2 * step.d != step.n_before + step.c
                        || step.n_after + step.c != step.n_before
                        || step.n_after % 2 != 0
                    {
                        return bad("inconsistent alpha step");
                    }
                }
                ReductionKind::Beta => {
                    let r = step.n_before % step.d.max(1);
                    if step.c != 0
                        || step.d == 0
                        || step.n_before / step.d < 2
                        || step.n_after != step.d + r
                    {
                        return bad("inconsistent beta step");
                    }
                }
            }
            prev_alpha = step.kind == ReductionKind::Alpha;
            lost += step.c;
            expected = step.n_after;
        }
        if expected != self.n_final {
            return Err(FnfError::Contract("terminal order does not chain".into()));
        }
        if lost + self.n_final != self.c_total {
            return Err(FnfError::Contract("component total does not add up".into()));
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reachability divisor of a graph with `2 min S <= n`.
///
/// Starting from `d = min S`, offsets are consumed in increasing order while
/// the next one is at most `n - d`, replacing `d` by `gcd(d, s)` each time.
/// The graph is `d`-reachable for the returned `d`, and every offset not
/// consumed exceeds `n - d`.
pub fn da(set: &OffsetSet) -> Result<usize> {
    let n = set.order();
    let offsets = set.as_slice();
    let (&first, rest) = offsets
        .split_first()
        .ok_or_else(|| FnfError::Contract("da needs a nonempty offset set".into()))?;
    if 2 * first > n {
        return Err(FnfError::Contract(format!("da needs 2 min S <= n, got min {first}, n {n}")));
    }
    let mut d = first;
    for &s in rest {
        if s > n - d {
            break;
        }
        d = gcd(d, s);
    }
    Ok(d)
}

/// Result of an alpha step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaReduction {
    pub reduced: OffsetSet,
    /// Number of isolated vertices removed.
    pub removed: usize,
}

/// Removes the `2 min S - n` isolated middle vertices.
pub fn alpha_reduce(set: &OffsetSet) -> Result<AlphaReduction> {
    let n = set.order();
    let s0 = set
        .min()
        .ok_or_else(|| FnfError::Contract("alpha reduction needs a nonempty offset set".into()))?;
    if 2 * s0 <= n {
        return Err(FnfError::Contract(format!(
            "alpha reduction needs 2 min S > n, got min {s0}, n {n}"
        )));
    }
    let m = 2 * s0 - n;
    let n_after = n - m;
    // min S <= n - 1 forces m <= n - 2.
    assert!(n_after >= 2, "alpha reduction left order {n_after}");
    let offsets = set.iter().map(|s| s - m).collect();
    Ok(AlphaReduction { reduced: OffsetSet::from_raw(n_after, offsets), removed: m })
}

/// Replaces a `d`-reachable instance by one of order `d + (n mod d)` with the
/// same quotient modulo `d`.
///
/// Offsets `s > n - d` survive, shifted down by `(q - 1) d` where
/// `q = n / d`; when `d` does not divide `n`, `d` itself is added.
pub fn beta_reduce(set: &OffsetSet, d: usize) -> Result<OffsetSet> {
    let n = set.order();
    let s0 = set
        .min()
        .ok_or_else(|| FnfError::Contract("beta reduction needs a nonempty offset set".into()))?;
    if 2 * s0 > n {
        return Err(FnfError::Contract(format!(
            "beta reduction needs 2 min S <= n, got min {s0}, n {n}"
        )));
    }
    let expected = da(set)?;
    if d != expected {
        return Err(FnfError::Contract(format!(
            "beta reduction divisor {d} differs from da = {expected}"
        )));
    }
    Ok(beta_reduce_with(set, d))
}

fn beta_reduce_with(set: &OffsetSet, d: usize) -> OffsetSet {
    let n = set.order();
    let q = n / d;
    let r = n - q * d;
    debug_assert!(q >= 2);
    let shift = (q - 1) * d;
    let offsets = set.as_slice();
    let first_survivor = offsets.partition_point(|&s| s <= n - d);
    let survivors = offsets[first_survivor..].iter().map(|&s| s - shift);
    if r == 0 {
        return OffsetSet::from_raw(d, survivors.collect());
    }
    // Shifted survivors lie in (r, d + r), as does d.
    let mut reduced = Vec::with_capacity(offsets.len() - first_survivor + 1);
    let mut inserted = false;
    for s in survivors {
        if !inserted && s >= d {
            inserted = true;
            if s != d {
                reduced.push(d);
            }
        }
        reduced.push(s);
    }
    if !inserted {
        reduced.push(d);
    }
    OffsetSet::from_raw(d + r, reduced)
}

/// Runs alpha and beta steps until no offsets remain.
///
/// The number of components of the original graph (equivalently the number
/// of diagonal blocks of its Frobenius normal form) is `trace.c_total`.
pub fn reduce(set: &OffsetSet) -> ReductionTrace {
    let n = set.order();
    let mut steps = Vec::new();
    let mut current = set.clone();
    while let Some(s0) = current.min() {
        let n_before = current.order();
        if 2 * s0 > n_before {
            let m = 2 * s0 - n_before;
            let offsets = current.iter().map(|s| s - m).collect();
            current = OffsetSet::from_raw(n_before - m, offsets);
            steps.push(ReductionStep {
                kind: ReductionKind::Alpha,
                n_before,
                n_after: n_before - m,
                d: s0,
                c: m,
            });
        } else {
            let d = da(&current).expect("beta branch satisfies da preconditions");
            current = beta_reduce_with(&current, d);
            steps.push(ReductionStep {
                kind: ReductionKind::Beta,
                n_before,
                n_after: current.order(),
                d,
                c: 0,
            });
        }
    }
    let n_final = current.order();
    let c_total = steps.iter().map(|s| s.c).sum::<usize>() + n_final;
    ReductionTrace { n, steps, n_final, c_total }
}
