//! Trapping sets of bit-flipping decoders.
//!
//! A set `T` of variables is a trapping set when the error pattern supported
//! on `T` is a fixed point of the decoder. For parallel bit flipping that is
//! equivalent to two local conditions on the subgraph induced by `T`, which
//! [`check_trapping_conditions`] evaluates next to a direct decoder run.

mod construct;

pub use construct::{
    construct_gldpc_trapping_set, construct_potential_trapping_set, embed_gldpc_trapping_set, embed_trapping_set,
    locate_gldpc_trapping_set, EmbedConfig, Embedding, GldpcFragment, LocatedFragment,
};

use alloc::vec;
use alloc::vec::Vec;

use crate::combinations::{binomial_sum, Combinations};
use crate::decode::{BitWord, Decoder, Status};
use crate::graph::{NodeSet, TannerGraph};
use crate::Result;

/// Trapping-set analysis of one variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrappingReport {
    pub set: NodeSet,
    /// Number of variables in the set.
    pub a_vars: usize,
    /// Number of checks of odd degree in the induced subgraph.
    pub b_checks: usize,
    /// Every member has at least `⌈d(v)/2⌉` even-degree induced checks.
    pub cond_a: bool,
    /// No outside variable touches more than `⌊d(v)/2⌋` odd-degree induced
    /// checks.
    pub cond_b: bool,
    pub fixed_point_parallel: bool,
    pub fixed_point_serial: bool,
    /// Induced checks of odd degree, ascending.
    pub odd_checks: Vec<usize>,
    /// Induced checks of non-zero even degree, ascending.
    pub even_checks: Vec<usize>,
    /// Members violating condition (a).
    pub cond_a_violators: Vec<usize>,
    /// Outside variables violating condition (b).
    pub cond_b_violators: Vec<usize>,
}

impl TrappingReport {
    /// Whether the set is a trapping set (a fixed point of parallel flipping).
    pub fn is_trapping_set(&self) -> bool {
        self.fixed_point_parallel
    }

    /// The local conditions agree with the direct decoder run.
    pub fn conditions_agree(&self) -> bool {
        self.fixed_point_parallel == (self.cond_a && self.cond_b)
    }
}

/// Evaluates both trapping-set conditions of `set` in `g` and runs one round
/// of each bit-flipping decoder from the pattern supported on it.
pub fn check_trapping_conditions(g: &TannerGraph, set: &NodeSet) -> Result<TrappingReport> {
    let member = set.to_word_checked(g.n_vars())?;
    let mut induced_degree = vec![0usize; g.n_checks()];
    for v in set.iter() {
        for &c in g.var_neighbors(v) {
            induced_degree[c] += 1;
        }
    }
    let odd_checks: Vec<usize> = (0..g.n_checks()).filter(|&c| induced_degree[c] % 2 == 1).collect();
    let even_checks: Vec<usize> =
        (0..g.n_checks()).filter(|&c| induced_degree[c] > 0 && induced_degree[c] % 2 == 0).collect();
    let mut cond_a_violators = Vec::new();
    let mut cond_b_violators = Vec::new();
    for v in 0..g.n_vars() {
        let nbrs = g.var_neighbors(v);
        let odd = nbrs.iter().filter(|&&c| induced_degree[c] % 2 == 1).count();
        if member.get(v) {
            let even = nbrs.len() - odd;
            if even < nbrs.len().div_ceil(2) {
                cond_a_violators.push(v);
            }
        } else if odd > nbrs.len() / 2 {
            cond_b_violators.push(v);
        }
    }
    let fixed_point_parallel = Decoder::Parallel(g).is_fixed_point(&member)?;
    let fixed_point_serial = Decoder::Serial(g).is_fixed_point(&member)?;
    Ok(TrappingReport {
        set: set.clone(),
        a_vars: set.len(),
        b_checks: odd_checks.len(),
        cond_a: cond_a_violators.is_empty(),
        cond_b: cond_b_violators.is_empty(),
        fixed_point_parallel,
        fixed_point_serial,
        odd_checks,
        even_checks,
        cond_a_violators,
        cond_b_violators,
    })
}

/// Whether one round of `decoder` leaves `x` unchanged.
pub fn is_fixed_point(decoder: &Decoder<'_>, x: &BitWord) -> Result<bool> {
    decoder.is_fixed_point(x)
}

/// Whether decoding the pattern on `set` ends anywhere but the zero codeword.
pub fn failure_set_check(decoder: &Decoder<'_>, set: &NodeSet, max_rounds: usize) -> Result<bool> {
    let out = decoder.decode(set.to_word_checked(decoder.n_vars())?, max_rounds)?;
    Ok(!(out.status == Status::Codeword && out.final_word.is_zero()))
}

/// Where initial error patterns for [`critical_number`] are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidatePool {
    /// Subsets of the target set.
    SubsetsOfTarget,
    /// Subsets of the target together with every variable sharing a check
    /// with it.
    TargetAndNeighborhood,
    /// Any variables, up to the given weight.
    AllVariables { max_weight: usize },
}

/// When a decoding run counts as ending in the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Landing {
    /// A fixed point whose support equals the target.
    #[default]
    Exact,
    /// A fixed point whose support contains the target.
    Contains,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalNumberResult {
    /// Least initiating weight found, `None` when none was found.
    pub value: Option<usize>,
    pub witness: Option<NodeSet>,
    /// Variables the patterns were drawn from.
    pub pool: NodeSet,
    pub patterns_tried: u128,
    /// The search stopped on the budget; a missing value is then not a claim
    /// of nonexistence.
    pub budget_exhausted: bool,
}

fn pool_members(g: &TannerGraph, target: &NodeSet, pool: CandidatePool) -> NodeSet {
    match pool {
        CandidatePool::SubsetsOfTarget => target.clone(),
        CandidatePool::AllVariables { .. } => NodeSet::full(g.n_vars()),
        CandidatePool::TargetAndNeighborhood => {
            let mut mask = target.mask(g.n_vars());
            for v in target.iter() {
                for &c in g.var_neighbors(v) {
                    for &u in g.check_neighbors(c) {
                        mask[u] = true;
                    }
                }
            }
            NodeSet::from_sorted((0..g.n_vars()).filter(|&v| mask[v]).collect())
        }
    }
}

/// The least number of initially corrupt variables, drawn from `pool`, from
/// which `decoder` ends in a fixed point supported on `target`.
///
/// Weights are tried in increasing order and patterns within a weight in
/// colexicographic order over the pool, so the witness is reproducible.
pub fn critical_number(
    decoder: &Decoder<'_>,
    target: &NodeSet,
    pool: CandidatePool,
    landing: Landing,
    max_rounds: usize,
    budget: u128,
) -> Result<CriticalNumberResult> {
    let n = decoder.n_vars();
    let target_word = target.to_word_checked(n)?;
    let members = pool_members(decoder.graph(), target, pool);
    let max_weight = match pool {
        CandidatePool::AllVariables { max_weight } => max_weight.min(target.len()),
        _ => target.len(),
    };
    let mut tried = 0u128;
    let lands = |word: &BitWord, status: Status| match landing {
        Landing::Exact => *word == target_word && (status == Status::FixedPoint || target.is_empty()),
        Landing::Contains => status == Status::FixedPoint && target.iter().all(|v| word.get(v)),
    };
    for w in 0..=max_weight {
        for combo in Combinations::new(members.len(), w) {
            if tried >= budget {
                return Ok(CriticalNumberResult {
                    value: None,
                    witness: None,
                    pool: members,
                    patterns_tried: tried,
                    budget_exhausted: true,
                });
            }
            tried += 1;
            let support: Vec<usize> = combo.iter().map(|&i| members.as_slice()[i]).collect();
            let out = decoder.decode(BitWord::from_support(n, &support), max_rounds)?;
            if lands(&out.final_word, out.status) {
                return Ok(CriticalNumberResult {
                    value: Some(w),
                    witness: Some(NodeSet::from_sorted(support)),
                    pool: members,
                    patterns_tried: tried,
                    budget_exhausted: false,
                });
            }
        }
    }
    Ok(CriticalNumberResult { value: None, witness: None, pool: members, patterns_tried: tried, budget_exhausted: false })
}

/// Number of patterns [`critical_number`] may try for a pool of `pool_len`
/// variables and a target of `target_len`.
pub fn critical_search_size(pool_len: usize, max_weight: usize) -> u128 {
    binomial_sum(pool_len, 0, max_weight)
}
