use super::{cage_upper_bound, moore_bound};
use crate::graph::GeneralGraph;
use crate::Rational;

/// Order of a `(d, g)`-cage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CageOrder {
    /// Proven exactly: a shipped witness meets the Moore bound.
    Exact(usize),
    /// Not in the table; the Moore bound and the known upper bound, where
    /// those are defined.
    Unknown { lower: Option<Rational>, upper: Option<Rational> },
}

impl CageOrder {
    pub fn exact(&self) -> Option<usize> {
        match self {
            CageOrder::Exact(n) => Some(*n),
            CageOrder::Unknown { .. } => None,
        }
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// A shipped d-regular graph of girth g, if one is available.
///
/// Every witness here is a Moore graph or a generalized polygon, so its
/// order equals the Moore bound and minimality needs no outside citation.
pub fn cage_witness(d: usize, g: usize) -> Option<GeneralGraph> {
    match (d, g) {
        (2, g) if g >= 3 => GeneralGraph::cycle(g).ok(),
        (d, 3) if d >= 2 => Some(GeneralGraph::complete(d + 1)),
        (d, 4) if d >= 2 => Some(GeneralGraph::complete_bipartite(d, d)),
        (3, 5) => Some(GeneralGraph::petersen()),
        (7, 5) => Some(GeneralGraph::hoffman_singleton()),
        (3, 6) => Some(GeneralGraph::heawood()),
        (d, 6) if (3..=14).contains(&d) && is_prime(d - 1) => GeneralGraph::projective_plane_incidence(d - 1).ok(),
        (3, 8) => Some(GeneralGraph::tutte_coxeter()),
        _ => None,
    }
}

/// `n_c(d, g)` when a witness ships and checks out: d-regular, girth exactly
/// g, order equal to the (integral) Moore bound. Otherwise the bracket.
pub fn cage_order(d: usize, g: usize) -> CageOrder {
    let lower = moore_bound(Rational::from_integer(d as i128), g).ok().filter(|_| g >= 3);
    if let (Some(lo), Some(w)) = (&lower, cage_witness(d, g)) {
        let n = w.n_nodes();
        if w.regular_degree() == Some(d) && w.girth() == Some(g) && lo.value == Rational::from_integer(n as i128) {
            return CageOrder::Exact(n);
        }
    }
    CageOrder::Unknown {
        lower: lower.map(|b| b.value),
        upper: cage_upper_bound(d, g).ok().map(|b| b.value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entries() {
        for g in 3..=12 {
            assert_eq!(cage_order(2, g), CageOrder::Exact(g));
        }
        assert_eq!(cage_order(3, 5), CageOrder::Exact(10));
        assert_eq!(cage_order(3, 6), CageOrder::Exact(14));
        assert_eq!(cage_order(3, 8), CageOrder::Exact(30));
        assert_eq!(cage_order(4, 6), CageOrder::Exact(26));
        assert_eq!(cage_order(7, 5), CageOrder::Exact(50));
        assert_eq!(cage_order(5, 3), CageOrder::Exact(6));
        assert_eq!(cage_order(5, 4), CageOrder::Exact(10));
    }

    #[test]
    fn unknown_entries_carry_bracket() {
        match cage_order(3, 7) {
            CageOrder::Unknown { lower, upper } => {
                assert_eq!(lower, Some(Rational::from_integer(22)));
                assert!(upper.unwrap() >= Rational::from_integer(22));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(cage_order(1, 5), CageOrder::Unknown { lower: None, upper: None });
    }
}
