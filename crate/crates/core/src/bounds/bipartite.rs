//! Exhaustive search for the smallest `(d_l, d_r)`-biregular bipartite graph
//! of a given girth.
//!
//! Left nodes are assigned neighbour sets one at a time. Two symmetry rules
//! prune the search without losing any isomorphism class: neighbour sets are
//! lexicographically non-decreasing across left nodes, and a set may only
//! introduce right nodes that are the smallest ones still unused.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::TannerGraph;
use crate::{Error, Result};

/// Search limits for [`bipartite_cage_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteSearch {
    /// Largest left-node count to try.
    pub max_left: usize,
    /// Cap on search-tree nodes across all sizes.
    pub max_steps: u64,
}

impl Default for BipartiteSearch {
    fn default() -> Self {
        BipartiteSearch { max_left: 40, max_steps: 50_000_000 }
    }
}

/// Outcome of [`bipartite_cage_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteCageOrder {
    /// Smallest left count, with a witness: variables are the left nodes,
    /// checks the right nodes.
    Exact { left: usize, witness: TannerGraph },
    /// Nothing found within budget. `lower` is the tree-count lower bound;
    /// sizes below `cleared_below` were exhausted and ruled out.
    Unknown { lower: usize, cleared_below: usize },
}

impl BipartiteCageOrder {
    pub fn exact(&self) -> Option<usize> {
        match self {
            BipartiteCageOrder::Exact { left, .. } => Some(*left),
            BipartiteCageOrder::Unknown { .. } => None,
        }
    }
}

/// Left-node lower bound from counting the tree of radius `g' − 1` around a
/// left root and around a right root.
pub fn bipartite_lower_bound(d_l: usize, d_r: usize, girth: usize) -> usize {
    let radius = girth / 2 - 1;
    let mut best = 1usize;
    for root_is_left in [true, false] {
        let (mut left, mut right) = if root_is_left { (1usize, 0usize) } else { (0, 1) };
        let mut layer = 1usize;
        let mut layer_is_left = root_is_left;
        for depth in 1..=radius {
            let fan = match (layer_is_left, depth) {
                (true, 1) => d_l,
                (false, 1) => d_r,
                (true, _) => d_l - 1,
                (false, _) => d_r - 1,
            };
            layer = layer.saturating_mul(fan);
            layer_is_left = !layer_is_left;
            if layer_is_left {
                left = left.saturating_add(layer);
            } else {
                right = right.saturating_add(layer);
            }
        }
        let from_right = (right.saturating_mul(d_r)).div_ceil(d_l);
        best = best.max(left).max(from_right);
    }
    best.max(d_r)
}

/// Smallest number of left nodes in a `(d_l, d_r)`-biregular bipartite graph
/// with girth at least `girth`.
pub fn bipartite_cage_order(
    d_l: usize,
    d_r: usize,
    girth: usize,
    budget: BipartiteSearch,
) -> Result<BipartiteCageOrder> {
    if d_l == 0 || d_r == 0 {
        return Err(Error::Domain("bipartite degrees must be positive"));
    }
    if girth % 2 == 1 || girth < 4 {
        return Err(Error::Domain("bipartite girth must be even and >= 4"));
    }
    let lower = bipartite_lower_bound(d_l, d_r, girth);
    let mut steps = 0u64;
    for left in lower..=budget.max_left {
        if (left * d_l) % d_r != 0 {
            continue;
        }
        let right = left * d_l / d_r;
        if right < d_l {
            continue;
        }
        let mut search = Search::new(left, right, d_l, d_r, girth, budget.max_steps.saturating_sub(steps));
        let found = search.run();
        steps += search.steps;
        match found {
            Some(sets) => {
                let witness = to_tanner(left, right, &sets);
                return Ok(BipartiteCageOrder::Exact { left, witness });
            }
            None if search.exhausted => {
                return Ok(BipartiteCageOrder::Unknown { lower, cleared_below: left });
            }
            None => {}
        }
    }
    Ok(BipartiteCageOrder::Unknown { lower, cleared_below: budget.max_left + 1 })
}

fn to_tanner(left: usize, right: usize, sets: &[Vec<usize>]) -> TannerGraph {
    let mut checks = vec![Vec::new(); right];
    for (v, set) in sets.iter().enumerate() {
        for &c in set {
            checks[c].push(v);
        }
    }
    TannerGraph::new(left, checks).expect("search output is simple")
}

struct Search {
    left: usize,
    right: usize,
    d_l: usize,
    d_r: usize,
    girth: usize,
    sets: Vec<Vec<usize>>,
    right_adj: Vec<Vec<usize>>,
    used: usize,
    steps: u64,
    max_steps: u64,
    exhausted: bool,
}

impl Search {
    fn new(left: usize, right: usize, d_l: usize, d_r: usize, girth: usize, max_steps: u64) -> Self {
        Search {
            left,
            right,
            d_l,
            d_r,
            girth,
            sets: Vec::with_capacity(left),
            right_adj: vec![Vec::new(); right],
            used: 0,
            steps: 0,
            max_steps,
            exhausted: false,
        }
    }

    fn run(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.assign() {
            Some(core::mem::take(&mut self.sets))
        } else {
            None
        }
    }

    /// Right-to-right distances in edges, `usize::MAX` when unreachable.
    fn right_distances(&self) -> Vec<Vec<usize>> {
        let mut all = Vec::with_capacity(self.right);
        let mut queue = VecDeque::new();
        for src in 0..self.right {
            let mut dist = vec![usize::MAX; self.right];
            dist[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(c) = queue.pop_front() {
                for &v in &self.right_adj[c] {
                    for &c2 in &self.sets[v] {
                        if dist[c2] == usize::MAX {
                            dist[c2] = dist[c] + 2;
                            queue.push_back(c2);
                        }
                    }
                }
            }
            all.push(dist);
        }
        all
    }

    fn assign(&mut self) -> bool {
        if self.sets.len() == self.left {
            return true;
        }
        if self.steps >= self.max_steps {
            self.exhausted = true;
            return false;
        }
        self.steps += 1;
        let dist = self.right_distances();
        let prev = self.sets.last().cloned();
        let mut chosen = Vec::with_capacity(self.d_l);
        self.choose(&dist, prev.as_deref(), true, &mut chosen)
    }

    fn choose(&mut self, dist: &[Vec<usize>], prev: Option<&[usize]>, tight: bool, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == self.d_l {
            return self.commit(chosen);
        }
        let start = chosen.last().map_or(0, |&c| c + 1);
        let floor = match (tight, prev) {
            (true, Some(p)) => p[k].max(start),
            _ => start,
        };
        let remaining = self.d_l - k;
        for c in floor..=self.right.saturating_sub(remaining) {
            if self.exhausted {
                return false;
            }
            // Fresh right nodes must be taken in index order.
            let fresh_floor = self.used + chosen.iter().filter(|&&x| x >= self.used).count();
            if c > fresh_floor {
                break;
            }
            if self.right_adj[c].len() >= self.d_r {
                continue;
            }
            if chosen.iter().any(|&a| dist[a][c] < self.girth - 2) {
                continue;
            }
            let still_tight = tight && prev.is_some_and(|p| p[k] == c);
            chosen.push(c);
            if self.choose(dist, prev, still_tight, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn commit(&mut self, chosen: &[usize]) -> bool {
        let v = self.sets.len();
        let old_used = self.used;
        for &c in chosen {
            self.right_adj[c].push(v);
            self.used = self.used.max(c + 1);
        }
        self.sets.push(chosen.to_vec());
        if self.assign() {
            return true;
        }
        self.sets.pop();
        for &c in chosen {
            self.right_adj[c].pop();
        }
        self.used = old_used;
        false
    }
}
