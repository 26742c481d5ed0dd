use alloc::vec;
use alloc::vec::Vec;

use super::GeneralGraph;
use crate::{Error, Result};

/// Bipartite graph between variable nodes `0..n_vars` and check nodes.
///
/// Each check keeps its neighbours in the order given at construction. That
/// order is the coordinate order of a generalized-LDPC sub-code: the `j`-th
/// neighbour of check `i` carries coordinate `j` of the local word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    n_vars: usize,
    checks: Vec<Vec<usize>>,
    vars: Vec<Vec<usize>>,
}

impl TannerGraph {
    /// Builds a graph from per-check neighbour lists.
    pub fn new(n_vars: usize, checks: Vec<Vec<usize>>) -> Result<Self> {
        let mut vars = vec![Vec::new(); n_vars];
        for (c, nbrs) in checks.iter().enumerate() {
            for (pos, &v) in nbrs.iter().enumerate() {
                if v >= n_vars {
                    return Err(Error::IndexOutOfRange { index: v, len: n_vars });
                }
                if nbrs[..pos].contains(&v) {
                    return Err(Error::DuplicateEdge(v, c));
                }
                vars[v].push(c);
            }
        }
        Ok(TannerGraph { n_vars, checks, vars })
    }

    /// Graph with `n_vars` variables and no checks.
    pub fn empty(n_vars: usize) -> Self {
        TannerGraph { n_vars, checks: Vec::new(), vars: vec![Vec::new(); n_vars] }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_checks(&self) -> usize {
        self.checks.len()
    }

    pub fn n_edges(&self) -> usize {
        self.checks.iter().map(Vec::len).sum()
    }

    /// Ordered neighbours of check `c`.
    pub fn check_neighbors(&self, c: usize) -> &[usize] {
        &self.checks[c]
    }

    /// Neighbours of variable `v`, ascending by check index.
    pub fn var_neighbors(&self, v: usize) -> &[usize] {
        &self.vars[v]
    }

    pub fn check_degree(&self, c: usize) -> usize {
        self.checks[c].len()
    }

    pub fn var_degree(&self, v: usize) -> usize {
        self.vars[v].len()
    }

    pub fn checks(&self) -> &[Vec<usize>] {
        &self.checks
    }

    /// `Some(γ)` when every variable has degree γ. An empty graph has no γ.
    pub fn left_degree(&self) -> Option<usize> {
        let d = self.vars.first()?.len();
        self.vars.iter().all(|a| a.len() == d).then_some(d)
    }

    /// `Some(ρ)` when every check has degree ρ.
    pub fn right_degree(&self) -> Option<usize> {
        let d = self.checks.first()?.len();
        self.checks.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn max_var_degree(&self) -> usize {
        self.vars.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_check_degree(&self) -> usize {
        self.checks.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, v: usize, c: usize) -> bool {
        self.vars[v].binary_search(&c).is_ok()
    }

    /// The same graph as a [`GeneralGraph`]: variables keep their indices,
    /// check `c` becomes node `n_vars + c`.
    pub fn to_general(&self) -> GeneralGraph {
        let edges = self
            .checks
            .iter()
            .enumerate()
            .flat_map(|(c, nbrs)| nbrs.iter().map(move |&v| (v, self.n_vars + c)));
        GeneralGraph::new(self.n_vars + self.checks.len(), edges).expect("Tanner graph is simple")
    }

    /// Shortest cycle length (always even), `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n_vars;
        let mut adj: Vec<Vec<usize>> = self.vars.iter().map(|cs| cs.iter().map(|c| n + c).collect()).collect();
        adj.extend(self.checks.iter().cloned());
        super::girth::girth_of(&adj)
    }

    /// Check-node distances from variable `v`, counted in edges
    /// (a neighbouring check is at distance 1). Unreached checks get `usize::MAX`.
    pub fn check_distances_from(&self, v: usize) -> Vec<usize> {
        let mut check_dist = vec![usize::MAX; self.checks.len()];
        let mut var_seen = vec![false; self.n_vars];
        var_seen[v] = true;
        let mut frontier = vec![v];
        let mut d = 1;
        while !frontier.is_empty() {
            let mut next_checks = Vec::new();
            for &u in &frontier {
                for &c in &self.vars[u] {
                    if check_dist[c] == usize::MAX {
                        check_dist[c] = d;
                        next_checks.push(c);
                    }
                }
            }
            let mut next_vars = Vec::new();
            for &c in &next_checks {
                for &u in &self.checks[c] {
                    if !var_seen[u] {
                        var_seen[u] = true;
                        next_vars.push(u);
                    }
                }
            }
            frontier = next_vars;
            d += 2;
        }
        check_dist
    }

    /// The all-variable adjacency lists, indexed by variable.
    pub fn var_adjacency(&self) -> &[Vec<usize>] {
        &self.vars
    }

    /// Binary parity-check matrix rows, one per check, as packed bit rows.
    pub fn parity_rows(&self) -> Vec<Vec<u64>> {
        let words = self.n_vars.div_ceil(64);
        self.checks
            .iter()
            .map(|nbrs| {
                let mut row = vec![0u64; words];
                for &v in nbrs {
                    row[v / 64] |= 1 << (v % 64);
                }
                row
            })
            .collect()
    }
}
