use proptest::prelude::*;

use tanner::core::decode::SubCode;
use tanner::core::graph::{GeneralGraph, TannerGraph};
use tanner::format::{
    load_alist, parse_alist, parse_edge_list, parse_subcode, save_alist, write_alist, write_edge_list, write_subcode,
};

fn tanner_graph() -> impl Strategy<Value = TannerGraph> {
    (1usize..12, 1usize..8).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 0..=n.min(5)), m)
            .prop_map(move |checks| TannerGraph::new(n, checks.into_iter().map(|c| c.into_iter().collect()).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn alist_round_trip(g in tanner_graph()) {
        let text = write_alist(&g);
        let back = parse_alist(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_alist(&back), text);
    }

    #[test]
    fn edge_list_round_trip(n in 2usize..12, raw in proptest::collection::btree_set((0usize..12, 0usize..12), 0..30)) {
        let edges: std::collections::BTreeSet<(usize, usize)> =
            raw.into_iter().filter(|&(u, v)| u < n && v < n && u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
        let g = GeneralGraph::new(n, edges).unwrap();
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.n_nodes(), n);
        prop_assert_eq!(back.sorted_edges(), g.sorted_edges());
    }

    #[test]
    fn subcode_round_trip(len in 2usize..10, rows in proptest::collection::vec(1u32..512, 1..4)) {
        let rows: Vec<Vec<bool>> = rows.iter().map(|r| (0..len).map(|j| r >> j & 1 == 1).collect()).collect();
        if let Ok(code) = SubCode::from_generator(len, &rows) {
            let back = parse_subcode(&write_subcode(&code)).unwrap();
            prop_assert_eq!(back.codewords(), code.codewords());
        }
    }
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.alist");
    let g = TannerGraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 0]]).unwrap();
    save_alist(&g, &path).unwrap();
    assert_eq!(load_alist(&path).unwrap(), g);
    let err = load_alist(dir.path().join("missing.alist")).unwrap_err().to_string();
    assert!(err.contains("missing.alist"), "{err}");
}
