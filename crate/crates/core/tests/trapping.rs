use proptest::prelude::*;

use tanner_core::decode::{BitWord, Decoder};
use tanner_core::graph::{NodeSet, TannerGraph};
use tanner_core::trapping::{
    check_trapping_conditions, construct_potential_trapping_set, critical_number, embed_trapping_set, CandidatePool,
    EmbedConfig, Landing,
};

fn tanner_graph() -> impl Strategy<Value = TannerGraph> {
    (2usize..=12, 2usize..=10).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=n.min(4)), m)
            .prop_map(move |cs| TannerGraph::new(n, cs.into_iter().map(|c| c.into_iter().collect()).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn conditions_characterise_fixed_points(g in tanner_graph(), mask in proptest::collection::vec(any::<bool>(), 12)) {
        let members: Vec<usize> = (0..g.n_vars()).filter(|&v| mask[v]).collect();
        let set = NodeSet::new(members, g.n_vars()).unwrap();
        let rep = check_trapping_conditions(&g, &set).unwrap();
        let x = set.to_word(g.n_vars());
        prop_assert_eq!(rep.fixed_point_parallel, Decoder::Parallel(&g).is_fixed_point(&x).unwrap());
        prop_assert_eq!(rep.fixed_point_serial, Decoder::Serial(&g).is_fixed_point(&x).unwrap());
        prop_assert!(rep.conditions_agree());
        prop_assert_eq!(rep.fixed_point_serial, rep.fixed_point_parallel);
        prop_assert_eq!(rep.b_checks, rep.odd_checks.len());
    }
}

#[test]
fn fragment_sizes_follow_cage_orders() {
    for (gamma, g_prime, vars) in [(4, 4, 4), (4, 5, 5), (5, 3, 4), (6, 5, 10), (6, 6, 14)] {
        let f = construct_potential_trapping_set(gamma, g_prime).unwrap();
        assert_eq!(f.n_vars(), vars, "gamma {gamma} g' {g_prime}");
        assert_eq!(f.left_degree(), Some(gamma));
        assert_eq!(f.girth(), Some(2 * g_prime));
    }
}

#[test]
fn critical_number_of_embedded_cycle() {
    let fragment = construct_potential_trapping_set(4, 4).unwrap();
    let host = embed_trapping_set(&fragment, 4, 8, &EmbedConfig { max_vars: 20, ..EmbedConfig::default() }).unwrap();
    let d = Decoder::Parallel(&host.graph);
    let r = critical_number(&d, &host.set, CandidatePool::SubsetsOfTarget, Landing::Exact, 50, u128::MAX).unwrap();
    assert_eq!(r.value, Some(4));
    assert_eq!(r.patterns_tried, 16);
    // Brute-force confirmation: no proper subset of the target lands on it.
    for mask in 0u32..15 {
        let support: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| host.set.as_slice()[i]).collect();
        let out = d.decode(BitWord::from_support(host.graph.n_vars(), &support), 50).unwrap();
        assert_ne!(out.final_word.support(), host.set.as_slice());
    }
}
