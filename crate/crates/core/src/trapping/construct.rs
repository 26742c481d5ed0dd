//! Smallest trapping-set fragments built from cages, and their embedding
//! into complete codes.

use alloc::vec;
use alloc::vec::Vec;

use super::check_trapping_conditions;
use crate::bounds::{bipartite_cage_order, cage_order, cage_witness, BipartiteCageOrder, BipartiteSearch};
use crate::graph::{edge_vertex_incidence, gamma_augment, NodeSet, TannerGraph};
use crate::peg::{peg_grow, PegSpec, Preference};
use crate::{Error, Result};

/// The γ-augmented edge-vertex incidence graph of the `(⌈γ/2⌉, g')`-cage:
/// `n_c(⌈γ/2⌉, g')` variables, each in `⌈γ/2⌉` degree-2 checks and
/// `⌊γ/2⌋` pendant checks.
pub fn construct_potential_trapping_set(gamma: usize, g_prime: usize) -> Result<TannerGraph> {
    if gamma < 3 {
        return Err(Error::Domain("column weight must be at least 3"));
    }
    let d = gamma.div_ceil(2);
    let cage = cage_order(d, g_prime)
        .exact()
        .and(cage_witness(d, g_prime))
        .ok_or(Error::UnknownCage { degree: d, girth: g_prime })?;
    Ok(gamma_augment(&edge_vertex_incidence(&cage), gamma)?.graph)
}

/// Limits for the embedding searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedConfig {
    /// Smallest host size tried.
    pub min_vars: usize,
    /// Largest host size tried.
    pub max_vars: usize,
    /// Cap on host check degrees (the exact degree for GLDPC hosts).
    pub max_check_degree: usize,
    pub seed: u64,
    /// Growth attempts per host shape and preference.
    pub attempts: u64,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig { min_vars: 0, max_vars: 200, max_check_degree: 8, seed: 0, attempts: 40 }
    }
}

/// A host code with the embedded set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub graph: TannerGraph,
    pub set: NodeSet,
    /// Seed of the successful growth attempt.
    pub seed: u64,
}

fn validate_fragment(fragment: &TannerGraph, gamma: usize, girth: usize) -> Result<()> {
    if fragment.left_degree() != Some(gamma) {
        return Err(Error::NotLeftRegular);
    }
    if fragment.girth().is_some_and(|g| g < girth) {
        return Err(Error::Domain("fragment girth is below the target"));
    }
    Ok(())
}

fn odd_checks(fragment: &TannerGraph) -> Vec<usize> {
    (0..fragment.n_checks()).filter(|&c| fragment.check_degree(c) % 2 == 1).collect()
}

/// Extends a γ-left-regular fragment (all of whose variables form the set)
/// to a γ-left-regular host of girth at least `girth` in which the set is a
/// fixed point of parallel and serial bit flipping.
///
/// Host sizes are tried from small to large; every check of the host has
/// degree at least 2 and no new variable touches more than `⌊γ/2⌋` of the
/// fragment's odd-degree checks. The first host that passes
/// [`check_trapping_conditions`] is returned. When the fragment girth equals
/// the target, so does the host girth.
pub fn embed_trapping_set(fragment: &TannerGraph, gamma: usize, girth: usize, cfg: &EmbedConfig) -> Result<Embedding> {
    validate_fragment(fragment, gamma, girth)?;
    let n0 = fragment.n_vars();
    let m0 = fragment.n_checks();
    let restricted = odd_checks(fragment);
    let set = NodeSet::full(n0);
    let deficit: usize = (0..m0).map(|c| 2usize.saturating_sub(fragment.check_degree(c))).sum();
    let spare: usize = (0..m0).map(|c| cfg.max_check_degree.saturating_sub(fragment.check_degree(c))).sum();
    for n in cfg.min_vars.max(n0 + 1)..=cfg.max_vars {
        let new_edges = (n - n0) * gamma;
        if new_edges < deficit {
            continue;
        }
        let max_new_checks = (new_edges - deficit) / 2;
        for new_checks in 0..=max_new_checks {
            if spare + new_checks * cfg.max_check_degree < new_edges {
                continue;
            }
            let spec = PegSpec {
                n_vars: n,
                var_degree: gamma,
                n_checks: m0 + new_checks,
                max_check_degree: cfg.max_check_degree,
                min_check_degree: 2,
                girth,
                restricted: restricted.clone(),
                restricted_cap: gamma / 2,
                preference: Preference::LeastLoadedFirst,
            };
            for preference in [Preference::LeastLoadedFirst, Preference::FarthestFirst] {
                let spec = PegSpec { preference, ..spec.clone() };
                for k in 0..cfg.attempts {
                    let seed = cfg.seed.wrapping_add(k);
                    let Ok(host) = peg_grow(fragment, &spec, seed) else { continue };
                    let report = check_trapping_conditions(&host, &set)?;
                    if report.fixed_point_parallel && report.fixed_point_serial {
                        return Ok(Embedding { graph: host, set, seed });
                    }
                }
            }
        }
    }
    Err(Error::ConstructionFailed("no host found within the size budget"))
}

/// A GLDPC trapping-set fragment: a `(⌈γ/2⌉, t+1)`-biregular bipartite graph
/// of the target girth with `⌊γ/2⌋` pendant checks added per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GldpcFragment {
    pub graph: TannerGraph,
    /// All fragment variables; the corrupt set.
    pub set: NodeSet,
    /// Checks of degree `t+1` (they receive `t+1` errors).
    pub inner_checks: Vec<usize>,
    /// Degree-1 checks.
    pub pendant_checks: Vec<usize>,
}

/// Builds the GLDPC fragment from the smallest biregular bipartite graph
/// the search finds.
pub fn construct_gldpc_trapping_set(gamma: usize, t: usize, girth: usize, search: BipartiteSearch) -> Result<GldpcFragment> {
    if gamma < 2 || t == 0 {
        return Err(Error::Domain("need gamma >= 2 and t >= 1"));
    }
    let BipartiteCageOrder::Exact { witness, .. } = bipartite_cage_order(gamma.div_ceil(2), t + 1, girth, search)? else {
        return Err(Error::ConstructionFailed("no biregular bipartite graph found within budget"));
    };
    let inner = witness.n_checks();
    let graph = gamma_augment(&witness, gamma)?.graph;
    Ok(GldpcFragment {
        set: NodeSet::full(graph.n_vars()),
        inner_checks: (0..inner).collect(),
        pendant_checks: (inner..graph.n_checks()).collect(),
        graph,
    })
}

/// Embeds a GLDPC fragment in a γ-left-regular, ρ-right-regular host of
/// girth at least `girth` (ρ is `cfg.max_check_degree`), such that no new
/// variable touches more than `⌊γ/2⌋` of the fragment's inner checks.
pub fn embed_gldpc_trapping_set(fragment: &GldpcFragment, gamma: usize, girth: usize, cfg: &EmbedConfig) -> Result<Embedding> {
    validate_fragment(&fragment.graph, gamma, girth)?;
    let rho = cfg.max_check_degree;
    let n0 = fragment.graph.n_vars();
    for n in cfg.min_vars.max(n0 + 1)..=cfg.max_vars {
        if (n * gamma) % rho != 0 || n * gamma / rho < fragment.graph.n_checks() {
            continue;
        }
        let base = PegSpec {
            restricted: fragment.inner_checks.clone(),
            restricted_cap: gamma / 2,
            ..PegSpec::regular(n, gamma, rho, girth)?
        };
        for preference in [Preference::FarthestFirst, Preference::LeastLoadedFirst] {
            let spec = PegSpec { preference, ..base.clone() };
            for k in 0..cfg.attempts {
                let seed = cfg.seed.wrapping_add(k);
                if let Ok(host) = peg_grow(&fragment.graph, &spec, seed) {
                    return Ok(Embedding { graph: host, set: fragment.set.clone(), seed });
                }
            }
        }
    }
    Err(Error::ConstructionFailed("no host found within the size budget"))
}

/// A copy of a GLDPC fragment found inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedFragment {
    pub set: NodeSet,
    /// Host checks playing the fragment's inner checks, ascending.
    pub inner_checks: Vec<usize>,
    /// The remaining host checks adjacent to the set, ascending.
    pub pendant_checks: Vec<usize>,
}

/// Searches `host` for a copy of the fragment: its inner checks map onto
/// host checks with exactly the same neighbours inside the set, every other
/// check touching the set touches exactly one member, and no outside
/// variable touches more than `⌊γ/2⌋` of the inner checks. Returns the
/// lexicographically first copy by variable images.
pub fn locate_gldpc_trapping_set(host: &TannerGraph, fragment: &GldpcFragment) -> Option<LocatedFragment> {
    let gamma = fragment.graph.left_degree()?;
    if host.left_degree() != Some(gamma) {
        return None;
    }
    let n_inner = fragment.inner_checks.len();
    let inner_of = |v: usize| -> Vec<usize> {
        fragment.graph.var_neighbors(v).iter().copied().filter(|&c| c < n_inner).collect()
    };
    let mut search = Locate {
        host,
        frag: &fragment.graph,
        n_inner,
        var_img: vec![None; fragment.graph.n_vars()],
        check_img: vec![None; n_inner],
        inner_of: (0..fragment.graph.n_vars()).map(inner_of).collect(),
    };
    for h in 0..host.n_vars() {
        search.var_img[0] = Some(h);
        if search.extend(1) {
            let set = NodeSet::new(search.var_img.iter().map(|x| x.expect("mapped")).collect(), host.n_vars()).ok()?;
            let mut inner: Vec<usize> = search.check_img.iter().map(|x| x.expect("mapped")).collect();
            inner.sort_unstable();
            if let Some(pendant) = verify_located(host, &set, &inner, gamma) {
                return Some(LocatedFragment { set, inner_checks: inner, pendant_checks: pendant });
            }
        }
        search.var_img[0] = None;
    }
    None
}

fn verify_located(host: &TannerGraph, set: &NodeSet, inner: &[usize], gamma: usize) -> Option<Vec<usize>> {
    let mut touch = vec![0usize; host.n_checks()];
    for v in set.iter() {
        for &c in host.var_neighbors(v) {
            touch[c] += 1;
        }
    }
    let mut pendant = Vec::new();
    for c in (0..host.n_checks()).filter(|&c| touch[c] > 0) {
        if inner.binary_search(&c).is_err() {
            if touch[c] != 1 {
                return None;
            }
            pendant.push(c);
        }
    }
    let outside_ok = (0..host.n_vars()).filter(|&v| !set.contains(v)).all(|v| {
        host.var_neighbors(v).iter().filter(|c| inner.binary_search(c).is_ok()).count() <= gamma / 2
    });
    outside_ok.then_some(pendant)
}

struct Locate<'a> {
    host: &'a TannerGraph,
    frag: &'a TannerGraph,
    n_inner: usize,
    var_img: Vec<Option<usize>>,
    check_img: Vec<Option<usize>>,
    inner_of: Vec<Vec<usize>>,
}

impl Locate<'_> {
    /// Maps every inner check of the already-mapped variables, then the next
    /// variable, backtracking on any mismatch.
    fn extend(&mut self, next_var: usize) -> bool {
        // Map an unmapped inner check adjacent to a mapped variable, if any.
        let pending = (0..next_var).find_map(|v| {
            self.inner_of[v].iter().copied().find(|&c| self.check_img[c].is_none()).map(|c| (v, c))
        });
        if let Some((v, c)) = pending {
            let hv = self.var_img[v].expect("mapped");
            for &hc in self.host.var_neighbors(hv) {
                if self.check_img.contains(&Some(hc)) {
                    continue;
                }
                self.check_img[c] = Some(hc);
                if self.consistent(c) && self.extend(next_var) {
                    return true;
                }
                self.check_img[c] = None;
            }
            return false;
        }
        if next_var == self.frag.n_vars() {
            return true;
        }
        // Place the next variable next to an image of one of its inner checks.
        let candidates: Vec<usize> = match self.inner_of[next_var].iter().find_map(|&c| self.check_img[c]) {
            Some(hc) => self.host.check_neighbors(hc).to_vec(),
            None => (0..self.host.n_vars()).collect(),
        };
        for hv in candidates {
            if self.var_img.contains(&Some(hv)) {
                continue;
            }
            self.var_img[next_var] = Some(hv);
            if self.var_consistent(next_var) && self.extend(next_var + 1) {
                return true;
            }
            self.var_img[next_var] = None;
        }
        false
    }

    /// Adjacency between the image of inner check `c` and every mapped
    /// variable image matches the fragment.
    fn consistent(&self, c: usize) -> bool {
        let hc = self.check_img[c].expect("mapped");
        self.var_img.iter().enumerate().all(|(v, img)| match img {
            Some(hv) => self.host.has_edge(*hv, hc) == self.frag.has_edge(v, c),
            None => true,
        })
    }

    fn var_consistent(&self, v: usize) -> bool {
        let hv = self.var_img[v].expect("mapped");
        (0..self.n_inner).all(|c| match self.check_img[c] {
            Some(hc) => self.host.has_edge(hv, hc) == self.frag.has_edge(v, c),
            None => true,
        })
    }
}
