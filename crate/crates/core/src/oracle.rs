//! Brute-force reference implementations on the explicit graph.
//!
//! Everything here materializes edges and runs in `O(n * |S|)` or worse. It
//! exists to cross-check the linear-time path and never calls into it.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{FnfError, Result};
use crate::toeplitz::{FirstRow, OffsetSet, Scalar};

/// Set partition of `[1, n]`: every class sorted, classes sorted by least
/// element. Two partitions are equal iff they are the same set partition.
pub type Partition = Vec<Vec<usize>>;

/// Graph on vertices `1..=n` with an explicit edge list.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplicitGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl ExplicitGraph {
    /// Builds a graph from arbitrary edges. Loops are dropped and each pair is
    /// stored once as `(min, max)`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .inspect(|&(u, v)| assert!(u >= 1 && v >= 1 && u <= n && v <= n))
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Self { n, edges: set.into_iter().collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

/// Edges `{u, v}` with `|u - v|` in `set`.
pub fn build_graph(set: &OffsetSet) -> ExplicitGraph {
    let n = set.order();
    let mut edges = Vec::new();
    for s in set.iter() {
        for u in 1..=n - s {
            edges.push((u, u + s));
        }
    }
    edges.sort_unstable();
    ExplicitGraph { n, edges }
}

/// Builds the structural graph of a row: `a_0` and zero entries give no edges.
pub fn build_row_graph<T: Scalar>(row: &FirstRow<T>) -> ExplicitGraph {
    let n = row.order();
    let mut edges = Vec::new();
    for s in 1..n {
        if !row.diagonal(s).is_zero() {
            for u in 1..=n - s {
                edges.push((u, u + s));
            }
        }
    }
    edges.sort_unstable();
    ExplicitGraph { n, edges }
}

/// Disjoint sets with path compression and union by size. 0-based.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Canonical partition from any labeling `labels[v - 1]` of the vertices.
pub fn partition_from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Partition {
    let mut index = std::collections::HashMap::new();
    let mut classes: Partition = Vec::new();
    for (v, &l) in labels.iter().enumerate() {
        let k = *index.entry(l).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(v + 1);
    }
    classes
}

/// Component partition via union-find.
pub fn components_oracle(g: &ExplicitGraph) -> Partition {
    let mut uf = UnionFind::new(g.n);
    for &(u, v) in &g.edges {
        uf.union(u - 1, v - 1);
    }
    let roots: Vec<usize> = (0..g.n).map(|v| uf.find(v)).collect();
    partition_from_labels(&roots)
}

/// Component partition via breadth-first search. Independent cross-check of
/// [`components_oracle`].
pub fn components_bfs(g: &ExplicitGraph) -> Partition {
    let adj = g.adjacency();
    let mut label = vec![usize::MAX; g.n + 1];
    let mut queue = VecDeque::new();
    let mut next = 0;
    for start in 1..=g.n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if label[w] == usize::MAX {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    partition_from_labels(&label[1..])
}

pub fn component_count(g: &ExplicitGraph) -> usize {
    components_oracle(g).len()
}

pub fn is_connected(g: &ExplicitGraph) -> bool {
    component_count(g) <= 1
}

/// True iff every pair `(v, v + d)` lies in one component.
pub fn is_d_reachable(g: &ExplicitGraph, d: usize) -> bool {
    assert!(d >= 1, "d must be positive");
    let mut uf = UnionFind::new(g.n);
    for &(u, v) in &g.edges {
        uf.union(u - 1, v - 1);
    }
    (0..g.n.saturating_sub(d)).all(|v| uf.same(v, v + d))
}

/// Quotient of a graph by residue classes modulo `d`.
///
/// Vertex `i` in `1..=d` stands for `[i]_d`; `d` itself represents the class of
/// multiples of `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    d: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl QuotientGraph {
    pub fn modulus(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn as_graph(&self) -> ExplicitGraph {
        ExplicitGraph::from_edges(self.d, self.edges.iter().copied())
    }
}

/// Residue representative of `v` in `1..=d`.
fn residue(v: usize, d: usize) -> usize {
    (v - 1) % d + 1
}

/// Contracts each residue class mod `d` to a single vertex. Edges within a
/// class become loops and are dropped.
pub fn contract(g: &ExplicitGraph, d: usize) -> QuotientGraph {
    assert!(d >= 1, "d must be positive");
    let edges = g
        .edges
        .iter()
        .map(|&(u, v)| (residue(u, d), residue(v, d)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    QuotientGraph { d, edges }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Checks that the graph with offsets `{s, n - s}` splits into the cycles
/// `{i, i + d, ..., i + (n/d - 1) d}` for `i` in `[d]`, `d = gcd(n, s)`.
///
/// Each class must induce a connected 2-regular subgraph. Classes of two
/// vertices are a single edge, which is the degenerate cycle; one-vertex
/// classes cannot occur since `s != n - s`.
pub fn cycle_structure_check(n: usize, s: usize) -> Result<bool> {
    if s == 0 || s >= n || 2 * s == n {
        return Err(FnfError::Contract(format!(
            "cycle check needs 0 < s < n and s != n - s, got n = {n}, s = {s}"
        )));
    }
    let set = OffsetSet::from_unsorted(n, vec![s, n - s])?;
    let g = build_graph(&set);
    let d = gcd(n, s);
    let expected: Partition = (1..=d).map(|i| (i..=n).step_by(d).collect()).collect();
    if components_oracle(&g) != expected {
        return Ok(false);
    }
    let mut degree = vec![0usize; n + 1];
    for &(u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    let k = n / d;
    let want = if k <= 2 { k - 1 } else { 2 };
    Ok(degree[1..].iter().all(|&deg| deg == want))
}

/// Outcome of a nesting check between consecutive FNF blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NestingVerdict {
    /// Every later block is a principal submatrix of every earlier one.
    Holds,
    /// Block `inner` is not a principal submatrix of block `outer`.
    Fails { outer: usize, inner: usize },
    /// Some block exceeds the brute-force size cap; nothing was decided.
    NotChecked { largest: usize, cap: usize },
}

pub const DEFAULT_NESTING_CAP: usize = 12;

/// Row indices (1-based) of `outer` that carve out `inner` as a principal
/// submatrix, both matrices given by their symmetric Toeplitz first rows.
pub fn principal_submatrix_witness<T: Scalar>(outer: &[T], inner: &[T]) -> Option<Vec<usize>> {
    fn extend<T: Scalar>(outer: &[T], inner: &[T], chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == inner.len() {
            return true;
        }
        let start = chosen.last().map_or(0, |&c| c + 1);
        let remaining = inner.len() - k;
        for cand in start..=outer.len() - remaining {
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(a, &c)| outer[cand - c] == inner[k - a]);
            if fits {
                chosen.push(cand);
                if extend(outer, inner, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if inner.len() > outer.len() || (!inner.is_empty() && outer[0] != inner[0]) {
        return None;
    }
    let mut chosen = Vec::with_capacity(inner.len());
    extend(outer, inner, &mut chosen).then(|| chosen.into_iter().map(|c| c + 1).collect())
}

/// Verifies a given witness without searching.
pub fn check_principal_witness<T: Scalar>(outer: &[T], inner: &[T], indices: &[usize]) -> bool {
    indices.len() == inner.len()
        && indices.windows(2).all(|w| w[0] < w[1])
        && indices.iter().all(|&i| i >= 1 && i <= outer.len())
        && indices.iter().enumerate().all(|(a, &ia)| {
            indices
                .iter()
                .enumerate()
                .all(|(b, &ib)| outer[ia.abs_diff(ib)] == inner[a.abs_diff(b)])
        })
}

/// Brute-force check that, for blocks listed in order, every block is a
/// principal submatrix of every block before it. Blocks are given as first
/// rows; any block larger than `cap` yields [`NestingVerdict::NotChecked`].
pub fn nesting_check<T: Scalar>(blocks: &[&[T]], cap: usize) -> NestingVerdict {
    if let Some(largest) = blocks.iter().map(|b| b.len()).max() {
        if largest > cap {
            return NestingVerdict::NotChecked { largest, cap };
        }
    }
    for outer in 0..blocks.len() {
        for inner in outer + 1..blocks.len() {
            if principal_submatrix_witness(blocks[outer], blocks[inner]).is_none() {
                return NestingVerdict::Fails { outer, inner };
            }
        }
    }
    NestingVerdict::Holds
}

/// Dense `n x n` matrix of a first row.
pub fn dense_matrix<T: Scalar>(row: &FirstRow<T>) -> Vec<Vec<T>> {
    let a = row.entries();
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[i.abs_diff(j)]).collect()).collect()
}

/// `P^T A P` where column `p` of `P` is the unit vector of `perm[p]`
/// (1-based), i.e. entry `(p, q)` of the result is `A[perm[p], perm[q]]`.
pub fn conjugate<T: Scalar>(matrix: &[Vec<T>], perm: &[usize]) -> Vec<Vec<T>> {
    perm.iter()
        .map(|&p| perm.iter().map(|&q| matrix[p - 1][q - 1]).collect())
        .collect()
}

/// Block-diagonal direct sum of symmetric Toeplitz blocks given by first
/// rows, padded with `zero`.
pub fn direct_sum<T: Scalar>(blocks: &[&[T]], zero: T) -> Vec<Vec<T>> {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut m = vec![vec![zero; n]; n];
    let mut base = 0;
    for b in blocks {
        for i in 0..b.len() {
            for j in 0..b.len() {
                m[base + i][base + j] = b[i.abs_diff(j)];
            }
        }
        base += b.len();
    }
    m
}

/// Checks `P^T A P == direct sum of blocks` entry by entry without
/// materializing either matrix. `blocks` must be listed in permutation order.
pub fn reconstruction_matches<T: Scalar>(
    row: &FirstRow<T>,
    perm: &[usize],
    blocks: &[&[T]],
    zero: T,
) -> bool {
    let n = row.order();
    if perm.len() != n || blocks.iter().map(|b| b.len()).sum::<usize>() != n {
        return false;
    }
    let mut block_of = Vec::with_capacity(n);
    for (k, b) in blocks.iter().enumerate() {
        let start = block_of.len();
        block_of.extend((0..b.len()).map(|i| (k, start, i)));
    }
    let a = row.entries();
    for p in 0..n {
        let (bp, _, ip) = block_of[p];
        for q in 0..n {
            let (bq, _, iq) = block_of[q];
            let lhs = a[perm[p].abs_diff(perm[q])];
            let rhs = if bp == bq { blocks[bp][ip.abs_diff(iq)] } else { zero };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Checks an isolated-vertex elimination on the explicit graphs: when
/// `2 min S > n`, vertices `n - s0 + 1 ..= s0` must be isolated and the map
/// `w -> w` (for `w <= n - s0`), `w -> w - m` (for `w >= s0 + 1`) must carry
/// the remaining graph exactly onto the graph of `reduced`, with
/// `m = removed = 2 s0 - n`.
pub fn alpha_isomorphism_holds(set: &OffsetSet, reduced: &OffsetSet, removed: usize) -> bool {
    let n = set.order();
    let s0 = match set.min() {
        Some(s0) if 2 * s0 > n => s0,
        _ => return false,
    };
    let m = 2 * s0 - n;
    if removed != m || reduced.order() + m != n {
        return false;
    }
    let g = build_graph(set);
    let h = build_graph(reduced);

    let mut degree = vec![0usize; n + 1];
    for &(u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    if (n - s0 + 1..=s0).any(|v| degree[v] != 0) {
        return false;
    }
    let relabel = |w: usize| if w <= n - s0 { Some(w) } else if w > s0 { Some(w - m) } else { None };
    let mapped: Option<BTreeSet<(usize, usize)>> = g
        .edges()
        .iter()
        .map(|&(u, v)| Some((relabel(u)?, relabel(v)?)))
        .map(|e| e.map(|(a, b)| (a.min(b), a.max(b))))
        .collect();
    let target: BTreeSet<(usize, usize)> = h.edges().iter().copied().collect();
    mapped.is_some_and(|e| e == target) && component_count(&g) == component_count(&h) + m
}

/// Checks the residue-class contraction step on explicit graphs: the graph
/// of `set` and the graph of `reduced` have identical quotients mod `d` and
/// equal component counts.
pub fn beta_quotients_match(set: &OffsetSet, reduced: &OffsetSet, d: usize) -> bool {
    let g = build_graph(set);
    let h = build_graph(reduced);
    contract(&g, d) == contract(&h, d) && component_count(&g) == component_count(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, s: &[usize]) -> OffsetSet {
        OffsetSet::new(n, s.to_vec()).unwrap()
    }

    #[test]
    fn build_graph_edge_counts() {
        assert_eq!(build_graph(&set(7, &[2, 4, 6])).edge_count(), 9);
        assert_eq!(build_graph(&set(4, &[])).edge_count(), 0);
        assert_eq!(build_graph(&set(5, &[4])).edges(), &[(1, 5)]);
    }

    #[test]
    fn components_of_even_offsets() {
        let g = build_graph(&set(7, &[2, 4, 6]));
        assert_eq!(components_oracle(&g), vec![vec![1, 3, 5, 7], vec![2, 4, 6]]);
        assert_eq!(components_bfs(&g), components_oracle(&g));
    }

    #[test]
    fn components_of_worked_example() {
        let g = build_graph(&set(31, &[12, 18, 24, 29]));
        let p = components_oracle(&g);
        assert_eq!(
            p,
            vec![
                vec![1, 2, 6, 7, 8, 12, 13, 14, 18, 19, 20, 24, 25, 26, 30, 31],
                vec![3, 9, 15, 21, 27],
                vec![4, 10, 16, 22, 28],
                vec![5, 11, 17, 23, 29],
            ]
        );
        assert_eq!(components_bfs(&g), p);
    }

    #[test]
    fn edgeless_graph_is_singletons() {
        let g = build_graph(&set(4, &[]));
        assert_eq!(components_oracle(&g), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert!(!is_d_reachable(&g, 1));
        assert!(!is_d_reachable(&g, 3));
    }

    #[test]
    fn reachability() {
        let g = build_graph(&set(31, &[12, 18, 24, 29]));
        for s in [12, 18, 24, 29, 6] {
            assert!(is_d_reachable(&g, s), "d = {s}");
        }
        assert!(!is_d_reachable(&g, 1));
        let g = build_graph(&set(10, &[4, 6]));
        assert!(is_d_reachable(&g, 2));
        assert!(!is_d_reachable(&g, 1));
    }

    #[test]
    fn contraction_of_even_offsets() {
        let g = build_graph(&set(7, &[2, 4, 6]));
        let q = contract(&g, 4);
        assert_eq!(q.edges().iter().copied().collect::<Vec<_>>(), vec![(1, 3), (2, 4)]);
        let q = contract(&g, 1);
        assert!(q.edges().is_empty());
        assert_eq!(q.modulus(), 1);
        let q = contract(&build_graph(&set(5, &[])), 3);
        assert!(q.edges().is_empty());
        assert_eq!(component_count(&q.as_graph()), 3);
    }

    #[test]
    fn cycle_structure() {
        assert!(cycle_structure_check(7, 2).unwrap());
        assert!(cycle_structure_check(6, 2).unwrap());
        assert!(cycle_structure_check(8, 2).unwrap());
        assert!(cycle_structure_check(6, 3).is_err());
        assert!(cycle_structure_check(6, 0).is_err());
        assert!(cycle_structure_check(6, 6).is_err());
    }

    #[test]
    fn witness_search() {
        let y: Vec<u8> = (0..19).map(|i| u8::from([6, 9, 12, 17].contains(&i))).collect();
        let x = [0u8, 0, 1, 1, 1];
        assert!(check_principal_witness(&y, &x, &[1, 4, 7, 10, 13]));
        assert!(!check_principal_witness(&y, &x, &[1, 2, 3, 4, 5]));
        let w = principal_submatrix_witness(&y, &x).unwrap();
        assert!(check_principal_witness(&y, &x, &w));
        assert_eq!(principal_submatrix_witness(&x, &x), Some(vec![1, 2, 3, 4, 5]));
        assert_eq!(principal_submatrix_witness(&x, &y), None);
    }

    #[test]
    fn nesting_verdicts() {
        let a = [0u8, 1, 1];
        let b = [0u8, 1];
        let c = [1u8];
        assert_eq!(nesting_check::<u8>(&[&a, &b], 12), NestingVerdict::Holds);
        assert_eq!(nesting_check::<u8>(&[&a, &a], 12), NestingVerdict::Holds);
        assert_eq!(nesting_check::<u8>(&[&a], 12), NestingVerdict::Holds);
        assert_eq!(nesting_check::<u8>(&[&a, &c], 12), NestingVerdict::Fails { outer: 0, inner: 1 });
        assert_eq!(
            nesting_check::<u8>(&[&a, &b], 2),
            NestingVerdict::NotChecked { largest: 3, cap: 2 }
        );
    }

    #[test]
    fn dense_helpers_agree_with_reconstruction() {
        let row = FirstRow::new(vec![0, 0, 3, 0, 8, 0, 9]).unwrap();
        let perm = [1, 3, 5, 7, 2, 4, 6];
        let b1 = [0, 3, 8, 9];
        let b2 = [0, 3, 8];
        let blocks: [&[i32]; 2] = [&b1, &b2];
        assert_eq!(conjugate(&dense_matrix(&row), &perm), direct_sum(&blocks, 0));
        assert!(reconstruction_matches(&row, &perm, &blocks, 0));
        assert!(!reconstruction_matches(&row, &[1, 2, 3, 4, 5, 6, 7], &blocks, 0));
    }

    #[test]
    fn alpha_relabeling_small_cases() {
        assert!(alpha_isomorphism_holds(&set(5, &[3]), &set(4, &[2]), 1));
        assert!(alpha_isomorphism_holds(&set(3, &[2]), &set(2, &[1]), 1));
        assert!(alpha_isomorphism_holds(&set(7, &[5, 6]), &set(4, &[2, 3]), 3));
        assert!(!alpha_isomorphism_holds(&set(7, &[5, 6]), &set(4, &[1, 3]), 3));
        assert!(!alpha_isomorphism_holds(&set(7, &[5, 6]), &set(5, &[3, 4]), 2));
        assert!(!alpha_isomorphism_holds(&set(4, &[2, 3]), &set(2, &[1]), 2));
    }
}
