use proptest::prelude::*;
use toeplitz_fnf::cli::{cmd_compute, ComputeOptions, OutputDocument, OutputFormat};
use toeplitz_fnf::{compute_fnf, oracle, BlockOrder, FirstRow};

/// Sparse weighted rows: mostly zeros with a few nonzero diagonals.
fn sparse_row(max_n: usize) -> impl Strategy<Value = Vec<f64>> {
    (1..=max_n).prop_flat_map(|n| {
        (
            -4i32..=4,
            proptest::collection::btree_map(1..n.max(2), -40i32..=40, 0..8),
        )
            .prop_map(move |(diag, offs)| {
                let mut a = vec![0.0; n];
                a[0] = f64::from(diag);
                for (i, w) in offs {
                    if i < n {
                        a[i] = f64::from(w) / 4.0;
                    }
                }
                a
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_output_is_well_formed(a in sparse_row(150)) {
        let row = FirstRow::new(a).unwrap();
        let n = row.order();
        let fnf = compute_fnf(&row, BlockOrder::Canonical).unwrap();

        prop_assert_eq!(fnf.block_sizes().iter().sum::<usize>(), n);
        let mut seen = vec![false; n + 1];
        for &p in &fnf.permutation {
            prop_assert!(p >= 1 && p <= n && !seen[p]);
            seen[p] = true;
        }
        for w in fnf.blocks.windows(2) {
            prop_assert!(
                w[0].size() > w[1].size()
                    || (w[0].size() == w[1].size() && w[0].vertices[0] < w[1].vertices[0])
            );
        }
        for (k, b) in fnf.blocks.iter().enumerate() {
            prop_assert!(b.vertices.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(b.first_row.len(), b.size());
            for (l, &v) in b.vertices.iter().enumerate() {
                prop_assert_eq!(fnf.cis.get(v), k + 1);
                prop_assert_eq!(b.first_row[l], row.diagonal(v - b.vertices[0]));
            }
            // Every pair inside a block reads the original matrix.
            for (i, &u) in b.vertices.iter().enumerate() {
                for (j, &v) in b.vertices.iter().enumerate() {
                    prop_assert_eq!(b.first_row[i.abs_diff(j)], row.entry(u, v).unwrap());
                }
            }
            let block = FirstRow::new(b.first_row.clone()).unwrap();
            prop_assert!(oracle::is_connected(&oracle::build_row_graph(&block)));
        }
    }

    #[test]
    fn permutation_preserves_weights(a in sparse_row(60)) {
        let row = FirstRow::new(a).unwrap();
        let fnf = compute_fnf(&row, BlockOrder::Canonical).unwrap();
        let dense = oracle::dense_matrix(&row);
        let permuted = oracle::conjugate(&dense, &fnf.permutation);
        prop_assert_eq!(&permuted, &oracle::direct_sum(&fnf.block_rows(), 0.0));
        let nonzero = |m: &Vec<Vec<f64>>| {
            let mut v: Vec<f64> = m.iter().flatten().copied().filter(|&x| x != 0.0).collect();
            v.sort_by(f64::total_cmp);
            v
        };
        prop_assert_eq!(nonzero(&dense), nonzero(&permuted));
    }

    #[test]
    fn both_orders_agree_on_partition(a in sparse_row(150)) {
        let row = FirstRow::new(a).unwrap();
        let c = compute_fnf(&row, BlockOrder::Canonical).unwrap();
        let d = compute_fnf(&row, BlockOrder::Discovered).unwrap();
        prop_assert_eq!(
            oracle::partition_from_labels(c.cis.as_slice()),
            oracle::partition_from_labels(d.cis.as_slice())
        );
        prop_assert_eq!(c.trace, d.trace);
    }

    #[test]
    fn json_output_round_trips(a in sparse_row(80), trace in any::<bool>()) {
        let row = FirstRow::new(a).unwrap();
        let opts = ComputeOptions { trace, format: OutputFormat::Json, ..Default::default() };
        let json = cmd_compute(&row, &opts).unwrap();
        let doc: OutputDocument = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(doc.to_json() + "\n", json);
        let again: OutputDocument = serde_json::from_str(&doc.to_json()).unwrap();
        prop_assert_eq!(again, doc);
    }
}
