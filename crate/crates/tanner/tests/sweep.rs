use proptest::prelude::*;

use tanner::core::decode::{BitWord, Decoder};
use tanner::core::graph::TannerGraph;
use tanner::sweep::{sweep_guarantee, SweepMode, Verdict};

fn graph() -> impl Strategy<Value = TannerGraph> {
    proptest::collection::vec(proptest::collection::btree_set(0usize..12, 2..=4), 4..10)
        .prop_map(|checks| TannerGraph::new(12, checks.into_iter().map(|c| c.into_iter().collect()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn recorded_failures_replay(g in graph(), serial in any::<bool>()) {
        let decoder = if serial { Decoder::Serial(&g) } else { Decoder::Parallel(&g) };
        let rep = sweep_guarantee(&decoder, 3, SweepMode::Exhaustive, 50, u128::MAX).unwrap();
        prop_assert!(rep.replay(&decoder).unwrap());
        for row in &rep.rows {
            prop_assert_eq!(row.failures == 0, row.first_failure.is_none());
        }
    }

    #[test]
    fn failure_counts_match_direct_decoding(g in graph()) {
        let decoder = Decoder::Parallel(&g);
        let rep = sweep_guarantee(&decoder, 2, SweepMode::Exhaustive, 50, u128::MAX).unwrap();
        for row in &rep.rows {
            let direct = tanner::core::combinations::Combinations::new(12, row.weight)
                .filter(|p| !decoder.decode(BitWord::from_support(12, p), 50).unwrap().final_word.is_zero())
                .count() as u128;
            prop_assert_eq!(row.failures, direct);
        }
    }
}

#[test]
fn verdict_ignores_weights_above_the_guarantee() {
    let g = TannerGraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap();
    let rep = sweep_guarantee(&Decoder::Parallel(&g), 3, SweepMode::Exhaustive, 50, u128::MAX).unwrap();
    assert_eq!(rep.guarantee, None);
    assert_eq!(rep.verdict, Verdict::Consistent);
}
