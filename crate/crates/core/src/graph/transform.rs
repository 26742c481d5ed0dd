//! Structural transforms between Tanner graphs and plain graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{GeneralGraph, NodeSet, TannerGraph};
use crate::{Error, Result};

/// A transformed Tanner graph together with where its nodes came from.
///
/// `var_origin[i]` is the source index of new variable `i`;
/// `check_origin[c]` is the source index of new check `c`, or `None` for a
/// check the transform created.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformed {
    pub graph: TannerGraph,
    pub var_origin: Vec<usize>,
    pub check_origin: Vec<Option<usize>>,
}

impl Transformed {
    /// New index of source variable `old`, if it survived.
    pub fn var_index(&self, old: usize) -> Option<usize> {
        self.var_origin.iter().position(|&o| o == old)
    }

    /// New index of source check `old`, if it survived.
    pub fn check_index(&self, old: usize) -> Option<usize> {
        self.check_origin.iter().position(|&o| o == Some(old))
    }
}

/// Subgraph on `vars`, every check touching them, and the edges between.
///
/// Variables are renumbered in ascending source order, checks likewise; each
/// check keeps the relative order of its surviving neighbours.
pub fn induced_subgraph(g: &TannerGraph, vars: &NodeSet) -> Result<Transformed> {
    if let Some(bad) = vars.iter().find(|&v| v >= g.n_vars()) {
        return Err(Error::IndexOutOfRange { index: bad, len: g.n_vars() });
    }
    let mut new_var = vec![usize::MAX; g.n_vars()];
    for (i, v) in vars.iter().enumerate() {
        new_var[v] = i;
    }
    let mut check_list: Vec<usize> = vars.iter().flat_map(|v| g.var_neighbors(v).iter().copied()).collect();
    check_list.sort_unstable();
    check_list.dedup();
    let checks = check_list
        .iter()
        .map(|&c| {
            g.check_neighbors(c)
                .iter()
                .filter(|&&v| new_var[v] != usize::MAX)
                .map(|&v| new_var[v])
                .collect()
        })
        .collect();
    Ok(Transformed {
        graph: TannerGraph::new(vars.len(), checks)?,
        var_origin: vars.as_slice().to_vec(),
        check_origin: check_list.into_iter().map(Some).collect(),
    })
}

/// Removes every pendant (degree-1) check and its edge.
pub fn reduced_graph(h: &TannerGraph) -> Transformed {
    let kept: Vec<usize> = (0..h.n_checks()).filter(|&c| h.check_degree(c) != 1).collect();
    let checks = kept.iter().map(|&c| h.check_neighbors(c).to_vec()).collect();
    Transformed {
        graph: TannerGraph::new(h.n_vars(), checks).expect("subset of a valid graph"),
        var_origin: (0..h.n_vars()).collect(),
        check_origin: kept.into_iter().map(Some).collect(),
    }
}

/// Appends `γ − d(v)` fresh pendant checks to each variable `v`, in variable
/// order, after the original checks.
pub fn gamma_augment(h: &TannerGraph, gamma: usize) -> Result<Transformed> {
    let mut checks: Vec<Vec<usize>> = h.checks().to_vec();
    let mut check_origin: Vec<Option<usize>> = (0..h.n_checks()).map(Some).collect();
    for v in 0..h.n_vars() {
        let d = h.var_degree(v);
        if d > gamma {
            return Err(Error::DegreeExceeded { var: v, degree: d, gamma });
        }
        for _ in d..gamma {
            checks.push(vec![v]);
            check_origin.push(None);
        }
    }
    Ok(Transformed {
        graph: TannerGraph::new(h.n_vars(), checks)?,
        var_origin: (0..h.n_vars()).collect(),
        check_origin,
    })
}

/// Variables are the nodes of `g`; check `i` is edge `i` of `g`, joined to
/// both endpoints.
pub fn edge_vertex_incidence(g: &GeneralGraph) -> TannerGraph {
    let checks = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    TannerGraph::new(g.n_nodes(), checks).expect("edges of a simple graph")
}

/// Which neighbour of a check serves as the root in
/// [`inverse_edge_vertex_incidence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootRule {
    /// Smallest variable index.
    #[default]
    LowestIndex,
    /// Largest variable index.
    HighestIndex,
    /// First entry of the check's neighbour list.
    FirstListed,
    /// Last entry of the check's neighbour list.
    LastListed,
}

impl RootRule {
    fn pick(self, nbrs: &[usize]) -> usize {
        match self {
            RootRule::LowestIndex => *nbrs.iter().min().expect("non-empty"),
            RootRule::HighestIndex => *nbrs.iter().max().expect("non-empty"),
            RootRule::FirstListed => nbrs[0],
            RootRule::LastListed => nbrs[nbrs.len() - 1],
        }
    }
}

/// Result of [`inverse_edge_vertex_incidence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseIncidence {
    pub graph: GeneralGraph,
    /// Edges dropped because another check already produced the same pair.
    pub collapsed: usize,
}

/// For every non-pendant check, joins its root to each of its other
/// neighbours. Pendant and isolated checks contribute nothing.
pub fn inverse_edge_vertex_incidence(h: &TannerGraph, rule: RootRule) -> InverseIncidence {
    let mut edges = Vec::new();
    for c in 0..h.n_checks() {
        let nbrs = h.check_neighbors(c);
        if nbrs.len() < 2 {
            continue;
        }
        let root = rule.pick(nbrs);
        edges.extend(nbrs.iter().filter(|&&v| v != root).map(|&v| (root, v)));
    }
    let (graph, collapsed) =
        GeneralGraph::new_collapsing(h.n_vars(), edges).expect("endpoints are valid variables");
    InverseIncidence { graph, collapsed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eight_cycle() -> TannerGraph {
        TannerGraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap()
    }

    fn star(gamma: usize) -> TannerGraph {
        TannerGraph::new(1, (0..gamma).map(|_| vec![0]).collect()).unwrap()
    }

    #[test]
    fn induced_examples() {
        let g = eight_cycle();
        let empty = induced_subgraph(&g, &NodeSet::empty()).unwrap();
        assert_eq!((empty.graph.n_vars(), empty.graph.n_checks()), (0, 0));
        let all = induced_subgraph(&g, &NodeSet::full(4)).unwrap();
        assert_eq!(all.graph, g);

        let aug = gamma_augment(&g, 3).unwrap().graph;
        let single = induced_subgraph(&aug, &NodeSet::new(vec![2], 4).unwrap()).unwrap();
        assert_eq!((single.graph.n_vars(), single.graph.n_checks()), (1, 3));
        assert!((0..3).all(|c| single.graph.check_degree(c) == 1));
        assert_eq!(single.var_origin, vec![2]);
        assert!(matches!(
            induced_subgraph(&g, &NodeSet::from_sorted(vec![7])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn reduced_examples() {
        let g = eight_cycle();
        assert_eq!(reduced_graph(&g).graph, g);
        let r = reduced_graph(&star(3)).graph;
        assert_eq!((r.n_vars(), r.n_checks(), r.n_edges()), (1, 0, 0));

        // 8-cycle inside a γ=3 code: each variable keeps one pendant.
        let aug = gamma_augment(&g, 3).unwrap().graph;
        let red = reduced_graph(&aug);
        assert_eq!(red.graph, g);
        let pendants = aug.n_checks() - red.graph.n_checks();
        assert_eq!(red.graph.n_edges(), aug.n_edges() - pendants);
    }

    #[test]
    fn augment_examples() {
        let g = eight_cycle();
        assert_eq!(gamma_augment(&g, 2).unwrap().graph, g);
        let aug = gamma_augment(&g, 4).unwrap();
        assert_eq!(aug.graph.n_checks(), 12);
        assert_eq!(aug.graph.left_degree(), Some(4));
        assert_eq!(aug.check_origin[..4], [Some(0), Some(1), Some(2), Some(3)]);
        assert!(aug.check_origin[4..].iter().all(Option::is_none));
        assert_eq!(gamma_augment(&TannerGraph::empty(1), 3).unwrap().graph, star(3));
        assert_eq!(
            gamma_augment(&g, 1),
            Err(Error::DegreeExceeded { var: 0, degree: 2, gamma: 1 })
        );
    }

    #[test]
    fn incidence_examples() {
        let c5 = GeneralGraph::cycle(5).unwrap();
        let ev = edge_vertex_incidence(&c5);
        assert_eq!((ev.n_vars(), ev.n_checks(), ev.girth()), (5, 5, Some(10)));
        let edge = GeneralGraph::new(2, [(0, 1)]).unwrap();
        let ev = edge_vertex_incidence(&edge);
        assert_eq!((ev.n_vars(), ev.n_checks(), ev.check_degree(0)), (2, 1, 2));

        let pet = edge_vertex_incidence(&GeneralGraph::petersen());
        assert_eq!(pet.left_degree(), Some(3));
        assert_eq!(pet.right_degree(), Some(2));
        assert_eq!((pet.n_vars(), pet.n_checks(), pet.girth()), (10, 15, Some(10)));
    }

    #[test]
    fn inverse_examples() {
        let c5 = GeneralGraph::cycle(5).unwrap();
        let back = inverse_edge_vertex_incidence(&edge_vertex_incidence(&c5), RootRule::LowestIndex);
        assert_eq!(back.collapsed, 0);
        assert_eq!(back.graph.sorted_edges(), c5.sorted_edges());

        let inv = inverse_edge_vertex_incidence(&star(3), RootRule::LowestIndex);
        assert_eq!((inv.graph.n_nodes(), inv.graph.n_edges()), (1, 0));

        // Two checks on the same pair collapse to one edge.
        let twin = TannerGraph::new(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let inv = inverse_edge_vertex_incidence(&twin, RootRule::LowestIndex);
        assert_eq!((inv.graph.n_edges(), inv.collapsed), (1, 1));
    }

    #[test]
    fn inverse_edge_count_identity() {
        // A degree-3 check contributes 2 edges, a degree-2 check 1.
        let h = TannerGraph::new(4, vec![vec![0, 1, 2], vec![2, 3], vec![3]]).unwrap();
        for rule in [RootRule::LowestIndex, RootRule::HighestIndex, RootRule::FirstListed, RootRule::LastListed] {
            let inv = inverse_edge_vertex_incidence(&h, rule);
            let red = reduced_graph(&h).graph;
            assert_eq!(inv.graph.n_edges(), red.n_edges() - red.n_checks());
        }
    }
}
