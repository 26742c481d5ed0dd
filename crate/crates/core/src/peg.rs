//! Progressive edge growth with a hard girth floor.
//!
//! Variables receive their edges one at a time. A check is eligible for a
//! new edge from `v` when it has spare capacity and the cycle the edge would
//! close is at least the target girth. Among eligible checks the preferred
//! ones are chosen by [`Preference`], with ties broken by a seeded ChaCha8
//! generator, so every output is reproducible from its seed.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::TannerGraph;
use crate::{Error, Result};

/// Ordering among girth-eligible checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Preference {
    /// Classic PEG: the farthest checks first, then the least loaded.
    #[default]
    FarthestFirst,
    /// The least loaded checks first, then the farthest.
    LeastLoadedFirst,
}

/// What to grow. Checks `0..seed.n_checks()` come from the seed; the rest
/// are fresh.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PegSpec {
    pub n_vars: usize,
    pub var_degree: usize,
    pub n_checks: usize,
    pub max_check_degree: usize,
    /// Every check must end with at least this degree.
    pub min_check_degree: usize,
    /// Target girth; no edge may close a shorter cycle.
    pub girth: usize,
    /// Checks of which a single new variable may touch at most
    /// `restricted_cap`.
    pub restricted: Vec<usize>,
    pub restricted_cap: usize,
    pub preference: Preference,
}

impl PegSpec {
    /// A γ-left-regular, ρ-right-regular target.
    pub fn regular(n_vars: usize, gamma: usize, rho: usize, girth: usize) -> Result<Self> {
        if gamma == 0 || rho == 0 {
            return Err(Error::Domain("degrees must be positive"));
        }
        if (n_vars * gamma) % rho != 0 {
            return Err(Error::Domain("n * gamma must be divisible by rho"));
        }
        Ok(PegSpec {
            n_vars,
            var_degree: gamma,
            n_checks: n_vars * gamma / rho,
            max_check_degree: rho,
            min_check_degree: rho,
            girth,
            restricted: Vec::new(),
            restricted_cap: usize::MAX,
            preference: Preference::default(),
        })
    }
}

struct Builder<'a> {
    spec: &'a PegSpec,
    var_adj: Vec<Vec<usize>>,
    check_adj: Vec<Vec<usize>>,
    is_restricted: Vec<bool>,
    rng: ChaCha8Rng,
}

impl Builder<'_> {
    /// Distance in edges from variable `v` to every check.
    fn distances(&self, v: usize) -> Vec<usize> {
        let mut check_dist = vec![usize::MAX; self.check_adj.len()];
        let mut var_seen = vec![false; self.var_adj.len()];
        var_seen[v] = true;
        let mut queue = VecDeque::new();
        for &c in &self.var_adj[v] {
            check_dist[c] = 1;
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            for &u in &self.check_adj[c] {
                if core::mem::replace(&mut var_seen[u], true) {
                    continue;
                }
                for &c2 in &self.var_adj[u] {
                    if check_dist[c2] == usize::MAX {
                        check_dist[c2] = check_dist[c] + 2;
                        queue.push_back(c2);
                    }
                }
            }
        }
        check_dist
    }

    fn add_edge(&mut self, v: usize) -> bool {
        let spec = self.spec;
        let dist = self.distances(v);
        let restricted_used = self.var_adj[v].iter().filter(|&&c| self.is_restricted[c]).count();
        let eligible = |c: usize| {
            self.check_adj[c].len() < spec.max_check_degree
                && dist[c] != 1
                && (dist[c] == usize::MAX || dist[c] + 1 >= spec.girth)
                && (!self.is_restricted[c] || restricted_used < spec.restricted_cap)
        };
        // Rank key: smaller is better.
        let key = |c: usize| {
            let far = usize::MAX - dist[c];
            let load = self.check_adj[c].len();
            match spec.preference {
                Preference::FarthestFirst => (far, load),
                Preference::LeastLoadedFirst => (load, far),
            }
        };
        let mut best = Vec::new();
        let mut best_key = (usize::MAX, usize::MAX);
        for c in (0..self.check_adj.len()).filter(|&c| eligible(c)) {
            let k = key(c);
            if k < best_key {
                best_key = k;
                best.clear();
            }
            if k == best_key {
                best.push(c);
            }
        }
        if best.is_empty() {
            return false;
        }
        let c = best[self.rng.gen_range(0..best.len())];
        self.var_adj[v].push(c);
        self.check_adj[c].push(v);
        true
    }
}

/// Grows `seed` to the shape in `spec`, keeping every seed edge and index.
pub fn peg_grow(seed: &TannerGraph, spec: &PegSpec, rng_seed: u64) -> Result<TannerGraph> {
    if seed.n_vars() > spec.n_vars || seed.n_checks() > spec.n_checks {
        return Err(Error::Domain("seed is larger than the requested graph"));
    }
    if seed.max_var_degree() > spec.var_degree {
        return Err(Error::Domain("seed variable exceeds the variable degree"));
    }
    if seed.max_check_degree() > spec.max_check_degree {
        return Err(Error::Domain("seed check exceeds the check degree cap"));
    }
    if seed.girth().is_some_and(|g| g < spec.girth) {
        return Err(Error::Domain("seed already has a cycle shorter than the target girth"));
    }
    let mut is_restricted = vec![false; spec.n_checks];
    for &c in &spec.restricted {
        *is_restricted.get_mut(c).ok_or(Error::IndexOutOfRange { index: c, len: spec.n_checks })? = true;
    }
    let mut var_adj = vec![Vec::new(); spec.n_vars];
    var_adj[..seed.n_vars()].clone_from_slice(seed.var_adjacency());
    let mut check_adj = seed.checks().to_vec();
    check_adj.resize(spec.n_checks, Vec::new());
    let mut b = Builder { spec, var_adj, check_adj, is_restricted, rng: ChaCha8Rng::seed_from_u64(rng_seed) };
    for v in 0..spec.n_vars {
        while b.var_adj[v].len() < spec.var_degree {
            if !b.add_edge(v) {
                return Err(Error::ConstructionFailed("no check satisfies the girth and degree limits"));
            }
        }
    }
    if b.check_adj.iter().any(|c| c.len() < spec.min_check_degree) {
        return Err(Error::ConstructionFailed("some check ended below the minimum degree"));
    }
    TannerGraph::new(spec.n_vars, b.check_adj)
}

/// Tries seeds `seed, seed+1, …` (up to `attempts`) until growth succeeds.
pub fn peg_grow_retrying(seed_graph: &TannerGraph, spec: &PegSpec, seed: u64, attempts: u64) -> Result<(TannerGraph, u64)> {
    let mut last = Error::ConstructionFailed("no attempts made");
    for k in 0..attempts {
        let s = seed.wrapping_add(k);
        match peg_grow(seed_graph, spec, s) {
            Ok(g) => return Ok((g, s)),
            Err(e @ Error::ConstructionFailed(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// Attempts made by [`peg_construct`] before giving up.
pub const DEFAULT_ATTEMPTS: u64 = 200;

/// A γ-left-regular, ρ-right-regular graph on `n` variables with girth at
/// least `girth`, deterministic in `seed`. The result is re-verified before
/// it is returned.
pub fn peg_construct(n: usize, gamma: usize, rho: usize, girth: usize, seed: u64) -> Result<TannerGraph> {
    let spec = PegSpec::regular(n, gamma, rho, girth)?;
    for preference in [Preference::FarthestFirst, Preference::LeastLoadedFirst] {
        let spec = PegSpec { preference, ..spec.clone() };
        if let Ok((g, _)) = peg_grow_retrying(&TannerGraph::empty(0), &spec, seed, DEFAULT_ATTEMPTS) {
            let regular = g.left_degree() == Some(gamma) && g.right_degree() == Some(rho);
            if regular && g.girth().map_or(true, |x| x >= girth) {
                return Ok(g);
            }
        }
    }
    Err(Error::ConstructionFailed("target infeasible within the retry budget"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_cycle() {
        let g = peg_construct(4, 2, 2, 8, 0).unwrap();
        assert_eq!((g.n_vars(), g.n_checks(), g.girth()), (4, 4, Some(8)));
    }

    #[test]
    fn divisibility() {
        assert!(peg_construct(7, 3, 4, 6, 0).is_err());
        assert!(PegSpec::regular(7, 3, 3, 6).is_ok());
    }

    #[test]
    fn regular_girth_six() {
        let g = peg_construct(40, 3, 6, 6, 1).unwrap();
        assert_eq!(g.left_degree(), Some(3));
        assert_eq!(g.right_degree(), Some(6));
        assert!(g.girth().unwrap() >= 6);
        assert_eq!(g, peg_construct(40, 3, 6, 6, 1).unwrap());
    }

    #[test]
    fn impossible_target_fails() {
        // Three variables of degree 2 on three checks cannot avoid a 6-cycle.
        assert!(peg_construct(3, 2, 2, 8, 0).is_err());
    }

    #[test]
    fn restricted_cap_is_respected() {
        let seed = TannerGraph::new(1, vec![vec![0], vec![0], vec![0]]).unwrap();
        let spec = PegSpec {
            n_vars: 4,
            var_degree: 3,
            n_checks: 5,
            max_check_degree: 3,
            min_check_degree: 2,
            girth: 4,
            restricted: vec![0, 1, 2],
            restricted_cap: 1,
            preference: Preference::LeastLoadedFirst,
        };
        let (g, _) = peg_grow_retrying(&seed, &spec, 0, 50).unwrap();
        for v in 1..4 {
            assert!(g.var_neighbors(v).iter().filter(|&&c| c < 3).count() <= 1);
        }
        assert_eq!(&g.checks()[..3].iter().map(|c| c[0]).collect::<Vec<_>>(), &[0, 0, 0]);
    }
}
