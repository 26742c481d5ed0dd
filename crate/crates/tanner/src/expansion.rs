//! Expansion certification on the rayon pool.

use rayon::prelude::*;

use tanner_core::expansion::{finish, merge_rows, scan_leading, subset_count, Comparison, ExpansionReport};
use tanner_core::graph::TannerGraph;
use tanner_core::{Error, Rational, Result};

/// Parallel [`tanner_core::expansion::verify_expansion`]: same report, work
/// split by the smallest subset element.
pub fn verify_expansion_par(g: &TannerGraph, k_max: usize, delta: Rational, comparison: Comparison, budget: u128) -> Result<ExpansionReport> {
    if k_max > g.n_vars() {
        return Err(Error::Domain("k_max exceeds the number of variables"));
    }
    let needed = subset_count(g.n_vars(), k_max);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let (rows, examined) = (0..g.n_vars())
        .into_par_iter()
        .map(|lead| scan_leading(g, k_max, lead))
        .reduce(
            || (vec![None; k_max], 0),
            |(mut acc, a), (later, b)| {
                merge_rows(&mut acc, later);
                (acc, a + b)
            },
        );
    Ok(finish(k_max, delta, comparison, rows, examined))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tanner_core::expansion::verify_expansion;
    use tanner_core::graph::{edge_vertex_incidence, GeneralGraph};

    #[test]
    fn matches_sequential() {
        let g = edge_vertex_incidence(&GeneralGraph::petersen());
        let delta = Rational::new(3, 2);
        for cmp in [Comparison::Strict, Comparison::NonStrict] {
            let seq = verify_expansion(&g, 4, delta, cmp, u128::MAX).unwrap();
            assert_eq!(verify_expansion_par(&g, 4, delta, cmp, u128::MAX).unwrap(), seq);
        }
    }
}
