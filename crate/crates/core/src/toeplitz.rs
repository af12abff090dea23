//! Symmetric Toeplitz data model.
//!
//! A symmetric Toeplitz matrix of order `n` is stored as its first row
//! `[a_0, ..., a_{n-1}]`; entry `(i, j)` is `a_{|i - j|}`. Connectivity only
//! depends on which off-diagonal entries are nonzero, so the fast path works on
//! the [`OffsetSet`] extracted from the row and never materializes the matrix.

use std::fmt::Debug;

use crate::error::{FnfError, Result};

/// A matrix entry type with an exact zero test.
pub trait Scalar: Copy + PartialEq + Debug {
    fn is_zero(&self) -> bool;
}

macro_rules! impl_scalar_int {
    ($($t:ty),*) => {
        $(impl Scalar for $t {
            #[inline]
            fn is_zero(&self) -> bool {
                *self == 0
            }
        })*
    };
}

impl_scalar_int!(i8, i16, i32, i64, u8, u16, u32, u64, usize);

impl Scalar for f64 {
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for f32 {
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for bool {
    #[inline]
    fn is_zero(&self) -> bool {
        !*self
    }
}

/// First row of a symmetric Toeplitz matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstRow<T> {
    entries: Vec<T>,
}

impl<T: Scalar> FirstRow<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(FnfError::EmptyRow);
        }
        Ok(Self { entries })
    }

    /// Matrix order.
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    /// Value on the `k`-th diagonal, `0 <= k < n`.
    #[inline]
    pub fn diagonal(&self, k: usize) -> T {
        self.entries[k]
    }

    /// Entry `(i, j)` of the matrix, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Result<T> {
        toeplitz_entry(self, i, j)
    }

    pub fn offsets(&self) -> OffsetSet {
        offsets_from_row(self)
    }
}

impl FirstRow<f64> {
    /// Snaps entries with `|a| <= tolerance` to exact zero.
    pub fn with_zero_tolerance(mut self, tolerance: f64) -> Self {
        if tolerance > 0.0 {
            for a in &mut self.entries {
                if a.abs() <= tolerance {
                    *a = 0.0;
                }
            }
        }
        self
    }
}

/// Boolean first row with `a_0 = 0` and `a_i = 1` exactly for `i` in `set`.
pub fn boolean_row(set: &OffsetSet) -> FirstRow<u8> {
    let mut entries = vec![0u8; set.order()];
    for &s in set.as_slice() {
        entries[s] = 1;
    }
    FirstRow { entries }
}

/// Strictly increasing set of positive diagonal offsets over a given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OffsetSet {
    n: usize,
    offsets: Vec<usize>,
}

impl OffsetSet {
    /// Validates that `offsets` is strictly increasing within `[1, n - 1]`.
    pub fn new(n: usize, offsets: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(FnfError::InvalidOffsets {
                n,
                reason: "order must be positive".into(),
            });
        }
        if let Some(w) = offsets.windows(2).find(|w| w[0] >= w[1]) {
            return Err(FnfError::InvalidOffsets {
                n,
                reason: format!("not strictly increasing at {} >= {}", w[0], w[1]),
            });
        }
        if let Some(&s) = offsets.iter().find(|&&s| s == 0 || s >= n) {
            return Err(FnfError::InvalidOffsets {
                n,
                reason: format!("offset {s} outside [1, {}]", n - 1),
            });
        }
        Ok(Self { n, offsets })
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(n: usize, mut offsets: Vec<usize>) -> Result<Self> {
        offsets.sort_unstable();
        offsets.dedup();
        Self::new(n, offsets)
    }

    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        Self { n, offsets: Vec::new() }
    }

    pub(crate) fn from_raw(n: usize, offsets: Vec<usize>) -> Self {
        debug_assert!(offsets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(offsets.iter().all(|&s| s >= 1 && s < n));
        Self { n, offsets }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.offsets.first().copied()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.offsets.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.iter().copied()
    }
}

/// `{i in [1, n-1] : a_i != 0}` in increasing order. `a_0` never contributes.
pub fn offsets_from_row<T: Scalar>(row: &FirstRow<T>) -> OffsetSet {
    let offsets = row
        .entries
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, _)| i)
        .collect();
    OffsetSet::from_raw(row.order(), offsets)
}

/// Entry `t_{i,j} = a_{|i-j|}` for 1-based `i, j`.
pub fn toeplitz_entry<T: Scalar>(row: &FirstRow<T>, i: usize, j: usize) -> Result<T> {
    let n = row.order();
    if i == 0 || j == 0 || i > n || j > n {
        return Err(FnfError::IndexOutOfRange { i, j, n });
    }
    Ok(row.entries[i.abs_diff(j)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn offsets_of_weighted_example() {
        let row = FirstRow::new(vec![0.0, 0.0, 3.0, 0.0, 8.0, 0.0, 9.0]).unwrap();
        assert_eq!(offsets_from_row(&row).as_slice(), &[2, 4, 6]);
    }

    #[test]
    fn offsets_of_zero_row_are_empty() {
        let row = FirstRow::new(vec![0i32; 5]).unwrap();
        assert!(offsets_from_row(&row).is_empty());
    }

    #[test]
    fn diagonal_is_not_an_offset() {
        let row = FirstRow::new(vec![5, 0, 0, 1]).unwrap();
        assert_eq!(offsets_from_row(&row).as_slice(), &[3]);
    }

    #[test]
    fn entry_lookup() {
        let row = FirstRow::new(vec![0.0, 0.0, 3.0, 0.0, 8.0, 0.0, 9.0]).unwrap();
        assert_eq!(toeplitz_entry(&row, 1, 5).unwrap(), 8.0);
        for k in 1..=7 {
            assert_eq!(toeplitz_entry(&row, k, k).unwrap(), 0.0);
        }
        let row = FirstRow::new(vec![1, 2]).unwrap();
        assert_eq!(toeplitz_entry(&row, 2, 1).unwrap(), 2);
    }

    #[test]
    fn entry_out_of_range() {
        let row = FirstRow::new(vec![1, 2]).unwrap();
        assert_eq!(
            toeplitz_entry(&row, 0, 1),
            Err(FnfError::IndexOutOfRange { i: 0, j: 1, n: 2 })
        );
        assert!(toeplitz_entry(&row, 1, 3).is_err());
    }

    #[test]
    fn empty_row_rejected() {
        assert_eq!(FirstRow::<f64>::new(vec![]), Err(FnfError::EmptyRow));
    }

    #[test]
    fn order_one_is_legal() {
        let row = FirstRow::new(vec![7.0]).unwrap();
        assert!(row.offsets().is_empty());
        assert_eq!(row.offsets().order(), 1);
    }

    #[test]
    fn offset_set_validation() {
        assert!(OffsetSet::new(5, vec![1, 4]).is_ok());
        assert!(OffsetSet::new(5, vec![0, 4]).is_err());
        assert!(OffsetSet::new(5, vec![5]).is_err());
        assert!(OffsetSet::new(5, vec![3, 2]).is_err());
        assert!(OffsetSet::new(5, vec![2, 2]).is_err());
        assert!(OffsetSet::new(0, vec![]).is_err());
        assert_eq!(
            OffsetSet::from_unsorted(6, vec![4, 2, 4]).unwrap().as_slice(),
            &[2, 4]
        );
    }

    #[test]
    fn tolerance_snaps_small_entries() {
        let row = FirstRow::new(vec![1.0, 1e-12, -1e-13, 0.5])
            .unwrap()
            .with_zero_tolerance(1e-9);
        assert_eq!(row.offsets().as_slice(), &[3]);
        assert_eq!(row.diagonal(0), 1.0);
    }

    fn offset_set() -> impl Strategy<Value = OffsetSet> {
        (1usize..64).prop_flat_map(|n| {
            proptest::collection::btree_set(1..n.max(2), 0..n)
                .prop_map(move |s| {
                    OffsetSet::new(n, s.into_iter().filter(|&x| x < n).collect()).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn boolean_row_round_trip(set in offset_set()) {
            prop_assert_eq!(offsets_from_row(&boolean_row(&set)), set);
        }

        #[test]
        fn entries_are_symmetric_and_diagonal_constant(
            entries in proptest::collection::vec(-3i32..4, 1..24),
            i in 1usize..24,
            j in 1usize..24,
        ) {
            let n = entries.len();
            let row = FirstRow::new(entries).unwrap();
            let (i, j) = (1 + (i - 1) % n, 1 + (j - 1) % n);
            prop_assert_eq!(row.entry(i, j).unwrap(), row.entry(j, i).unwrap());
            if i < n && j < n {
                prop_assert_eq!(row.entry(i, j).unwrap(), row.entry(i + 1, j + 1).unwrap());
            }
        }
    }
}
