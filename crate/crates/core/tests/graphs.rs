use proptest::prelude::*;

use tanner_core::graph::{
    edge_vertex_incidence, gamma_augment, induced_subgraph, inverse_edge_vertex_incidence, GeneralGraph, NodeSet,
    RootRule, TannerGraph,
};

/// Shortest cycle by depth-first enumeration of simple paths, each cycle
/// rooted at its smallest node.
fn brute_girth(adj: &[Vec<usize>]) -> Option<usize> {
    fn walk(adj: &[Vec<usize>], root: usize, u: usize, len: usize, on: &mut [bool], best: &mut usize) {
        for &w in &adj[u] {
            if w == root && len >= 3 {
                *best = (*best).min(len);
            } else if w > root && !on[w] && len + 1 < *best {
                on[w] = true;
                walk(adj, root, w, len + 1, on, best);
                on[w] = false;
            }
        }
    }
    let mut best = usize::MAX;
    for root in 0..adj.len() {
        let mut on = vec![false; adj.len()];
        on[root] = true;
        walk(adj, root, root, 1, &mut on, &mut best);
    }
    (best != usize::MAX).then_some(best)
}

fn simple_graph(max_nodes: usize) -> impl Strategy<Value = GeneralGraph> {
    (3..=max_nodes).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n), 0..(2 * n)).prop_map(move |pairs| {
            let edges: std::collections::BTreeSet<_> =
                pairs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
            GeneralGraph::new(n, edges).unwrap()
        })
    })
}

fn tanner_graph(max_vars: usize, max_checks: usize) -> impl Strategy<Value = TannerGraph> {
    (1..=max_vars, 1..=max_checks).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 0..=n.min(4)), m)
            .prop_map(move |cs| TannerGraph::new(n, cs.into_iter().map(|c| c.into_iter().collect()).collect()).unwrap())
    })
}

fn adjacency(g: &GeneralGraph) -> Vec<Vec<usize>> {
    (0..g.n_nodes()).map(|u| g.neighbors(u).to_vec()).collect()
}

proptest! {
    #[test]
    fn girth_matches_cycle_enumeration(g in simple_graph(12)) {
        prop_assert_eq!(g.girth(), brute_girth(&adjacency(&g)));
    }

    #[test]
    fn tanner_girth_matches_cycle_enumeration(t in tanner_graph(7, 6)) {
        let general = t.to_general();
        prop_assert_eq!(t.girth(), brute_girth(&adjacency(&general)));
        if let Some(g) = t.girth() {
            prop_assert_eq!(g % 2, 0);
        }
    }

    #[test]
    fn incidence_doubles_girth_and_inverts(g in simple_graph(10)) {
        let h = edge_vertex_incidence(&g);
        prop_assert_eq!(h.girth(), g.girth().map(|x| 2 * x));
        prop_assert!(h.checks().iter().all(|c| c.len() == 2));
        for rule in [RootRule::LowestIndex, RootRule::HighestIndex, RootRule::FirstListed, RootRule::LastListed] {
            let back = inverse_edge_vertex_incidence(&h, rule);
            prop_assert_eq!(back.collapsed, 0);
            prop_assert_eq!(back.graph.sorted_edges(), g.sorted_edges());
        }
    }

    #[test]
    fn augmentation_regularises_without_new_cycles(t in tanner_graph(8, 6), extra in 0usize..3) {
        let gamma = t.max_var_degree() + extra;
        prop_assume!(gamma > 0);
        let aug = gamma_augment(&t, gamma).unwrap().graph;
        prop_assert_eq!(aug.left_degree(), Some(gamma));
        prop_assert_eq!(aug.girth(), t.girth());
        prop_assert_eq!(aug.n_checks(), t.n_checks() + t.n_vars() * gamma - t.n_edges());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_internal_edges(t in tanner_graph(8, 6), mask in proptest::collection::vec(any::<bool>(), 8)) {
        let members: Vec<usize> = (0..t.n_vars()).filter(|&v| mask[v]).collect();
        let set = NodeSet::new(members.clone(), t.n_vars()).unwrap();
        let sub = induced_subgraph(&t, &set).unwrap();
        let expected: usize = members.iter().map(|&v| t.var_degree(v)).sum();
        prop_assert_eq!(sub.graph.n_edges(), expected);
        prop_assert!(sub.graph.girth().unwrap_or(usize::MAX) >= t.girth().unwrap_or(usize::MAX));
    }
}

#[test]
fn named_graphs() {
    for (g, n, d, girth) in [
        (GeneralGraph::petersen(), 10, 3, 5),
        (GeneralGraph::heawood(), 14, 3, 6),
        (GeneralGraph::tutte_coxeter(), 30, 3, 8),
        (GeneralGraph::hoffman_singleton(), 50, 7, 5),
    ] {
        assert_eq!((g.n_nodes(), g.regular_degree(), g.girth()), (n, Some(d), Some(girth)));
    }
}
