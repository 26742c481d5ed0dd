//! Exhaustive subset-expansion certification.
//!
//! Subsets are enumerated depth-first in lexicographic order with a running
//! per-check counter, so every subset costs one incremental update. Work can
//! be split by the smallest element of the subset ([`scan_leading`]) and the
//! partial results merged ([`merge_rows`]) in any grouping: the merge keeps
//! the lexicographically first witness, so the outcome is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{gldpc_beta_threshold, moore_bound};
use crate::combinations::binomial_sum;
use crate::graph::{NodeSet, TannerGraph};
use crate::{Error, Rational, Result};

/// Default cap on the number of subsets examined.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// `|N(S)| > δ|S|`
    Strict,
    /// `|N(S)| ≥ δ|S|`
    NonStrict,
}

/// Worst case among subsets of one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRecord {
    pub size: usize,
    pub min_neighbors: usize,
    /// Lexicographically first subset attaining the minimum.
    pub witness: NodeSet,
}

impl SizeRecord {
    fn holds(&self, delta: Rational, cmp: Comparison) -> bool {
        let have = Rational::from_integer(self.min_neighbors as i128);
        let need = delta * Rational::from_integer(self.size as i128);
        match cmp {
            Comparison::Strict => have > need,
            Comparison::NonStrict => have >= need,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionReport {
    pub k_max: usize,
    pub delta: Rational,
    /// The comparison the verdict uses.
    pub comparison: Comparison,
    pub rows: Vec<SizeRecord>,
    pub strict_pass: bool,
    pub non_strict_pass: bool,
    pub subsets_examined: u128,
}

impl ExpansionReport {
    fn new(k_max: usize, delta: Rational, comparison: Comparison, rows: Vec<SizeRecord>, subsets_examined: u128) -> Self {
        let strict_pass = rows.iter().all(|r| r.holds(delta, Comparison::Strict));
        let non_strict_pass = rows.iter().all(|r| r.holds(delta, Comparison::NonStrict));
        ExpansionReport { k_max, delta, comparison, rows, strict_pass, non_strict_pass, subsets_examined }
    }

    /// Verdict under the requested comparison.
    pub fn passed(&self) -> bool {
        match self.comparison {
            Comparison::Strict => self.strict_pass,
            Comparison::NonStrict => self.non_strict_pass,
        }
    }

    /// Smallest size whose worst case violates the requested comparison.
    pub fn first_violation(&self) -> Option<&SizeRecord> {
        self.rows.iter().find(|r| !r.holds(self.delta, self.comparison))
    }
}

/// Number of distinct checks adjacent to `s`.
pub fn neighborhood_size(g: &TannerGraph, s: &NodeSet) -> Result<usize> {
    if let Some(&last) = s.as_slice().last() {
        if last >= g.n_vars() {
            return Err(Error::IndexOutOfRange { index: last, len: g.n_vars() });
        }
    }
    let mut seen = vec![false; g.n_checks()];
    let mut count = 0;
    for v in s.iter() {
        for &c in g.var_neighbors(v) {
            if !core::mem::replace(&mut seen[c], true) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Number of subsets of size `1..=k_max` of `n` elements.
pub fn subset_count(n: usize, k_max: usize) -> u128 {
    binomial_sum(n, 1, k_max)
}

struct Scan<'a> {
    g: &'a TannerGraph,
    k_max: usize,
    counts: Vec<u32>,
    distinct: usize,
    stack: Vec<usize>,
    best: Vec<Option<(usize, Vec<usize>)>>,
    examined: u128,
}

impl<'a> Scan<'a> {
    fn new(g: &'a TannerGraph, k_max: usize) -> Self {
        Scan {
            g,
            k_max,
            counts: vec![0; g.n_checks()],
            distinct: 0,
            stack: Vec::with_capacity(k_max),
            best: vec![None; k_max + 1],
            examined: 0,
        }
    }

    fn push(&mut self, v: usize) {
        for &c in self.g.var_neighbors(v) {
            if self.counts[c] == 0 {
                self.distinct += 1;
            }
            self.counts[c] += 1;
        }
        self.stack.push(v);
    }

    fn pop(&mut self) {
        let v = self.stack.pop().expect("non-empty stack");
        for &c in self.g.var_neighbors(v) {
            self.counts[c] -= 1;
            if self.counts[c] == 0 {
                self.distinct -= 1;
            }
        }
    }

    fn record(&mut self) {
        self.examined += 1;
        let slot = &mut self.best[self.stack.len()];
        if slot.as_ref().map_or(true, |(m, _)| self.distinct < *m) {
            *slot = Some((self.distinct, self.stack.clone()));
        }
    }

    fn extend(&mut self, from: usize) {
        self.record();
        if self.stack.len() == self.k_max {
            return;
        }
        for v in from..self.g.n_vars() {
            self.push(v);
            self.extend(v + 1);
            self.pop();
        }
    }

    fn into_rows(self) -> Vec<Option<SizeRecord>> {
        self.best
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(size, b)| {
                b.map(|(min_neighbors, w)| SizeRecord { size, min_neighbors, witness: NodeSet::from_sorted(w) })
            })
            .collect()
    }
}

/// Per-size worst cases over the subsets of size `1..=k_max` whose smallest
/// element is `lead`. Entry `s − 1` is `None` when no such subset of size `s`
/// exists. Returns the rows and the number of subsets examined.
pub fn scan_leading(g: &TannerGraph, k_max: usize, lead: usize) -> (Vec<Option<SizeRecord>>, u128) {
    let mut scan = Scan::new(g, k_max);
    if k_max > 0 && lead < g.n_vars() {
        scan.push(lead);
        scan.extend(lead + 1);
        scan.pop();
    }
    let examined = scan.examined;
    (scan.into_rows(), examined)
}

/// Merges `later` into `acc`, where every subset behind `later` comes after
/// every subset behind `acc` lexicographically.
pub fn merge_rows(acc: &mut [Option<SizeRecord>], later: Vec<Option<SizeRecord>>) {
    for (a, b) in acc.iter_mut().zip(later) {
        let Some(b) = b else { continue };
        if a.as_ref().map_or(true, |a| b.min_neighbors < a.min_neighbors) {
            *a = Some(b);
        }
    }
}

/// Checks every subset of size `1..=k_max` against `|N(S)| > δ|S|` (or `≥`).
///
/// Refuses with [`Error::BudgetExceeded`] when the subset count exceeds
/// `budget`.
pub fn verify_expansion(
    g: &TannerGraph,
    k_max: usize,
    delta: Rational,
    comparison: Comparison,
    budget: u128,
) -> Result<ExpansionReport> {
    if k_max > g.n_vars() {
        return Err(Error::Domain("k_max exceeds the number of variables"));
    }
    let needed = subset_count(g.n_vars(), k_max);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut rows = vec![None; k_max];
    let mut examined = 0;
    for lead in 0..g.n_vars() {
        let (part, count) = scan_leading(g, k_max, lead);
        merge_rows(&mut rows, part);
        examined += count;
    }
    Ok(finish(k_max, delta, comparison, rows, examined))
}

/// Builds a report from merged rows.
pub fn finish(
    k_max: usize,
    delta: Rational,
    comparison: Comparison,
    rows: Vec<Option<SizeRecord>>,
    subsets_examined: u128,
) -> ExpansionReport {
    ExpansionReport::new(k_max, delta, comparison, rows.into_iter().flatten().collect(), subsets_examined)
}

/// Parameters of an expansion certificate: how far to enumerate and the
/// factor to beat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificatePlan {
    pub k_max: usize,
    pub delta: Rational,
}

fn girth_half(g: &TannerGraph) -> Option<usize> {
    g.girth().map(|girth| girth / 2)
}

fn plan_for(g: &TannerGraph, moore_degree: Rational, delta: Rational) -> Result<CertificatePlan> {
    let k_max = match girth_half(g) {
        None => g.n_vars(),
        Some(g_half) => moore_bound(moore_degree, g_half)?.guaranteed().min(g.n_vars()),
    };
    Ok(CertificatePlan { k_max, delta })
}

/// For a γ-left-regular graph (γ ≥ 4) of girth `2g'`: every set of fewer than
/// `n₀(γ/2, g')` variables should have more than `3γ/4` checks per variable.
pub fn ldpc_expansion_plan(g: &TannerGraph) -> Result<CertificatePlan> {
    let gamma = g.left_degree().ok_or(Error::NotLeftRegular)?;
    if gamma < 4 {
        return Err(Error::Domain("expansion certificate needs column weight >= 4"));
    }
    plan_for(g, Rational::new(gamma as i128, 2), Rational::new(3 * gamma as i128, 4))
}

/// For a γ-left-regular graph of girth `2g'` carrying a `t`-error-correcting
/// sub-code: every set of fewer than `n₀(γt/(t+1), g')` variables should have
/// more than `γ(t+2)/(2(t+1))` checks per variable.
pub fn gldpc_expansion_plan(g: &TannerGraph, t: usize) -> Result<CertificatePlan> {
    let gamma = g.left_degree().ok_or(Error::NotLeftRegular)?;
    if t == 0 {
        return Err(Error::Domain("sub-code must correct at least one error"));
    }
    let d = Rational::new((gamma * t) as i128, (t + 1) as i128);
    if d < Rational::from_integer(2) {
        return Err(Error::Domain("expansion certificate needs gamma*t/(t+1) >= 2"));
    }
    plan_for(g, d, gldpc_beta_threshold(t) * Rational::from_integer(gamma as i128))
}

/// Runs the LDPC expansion certificate with strict comparison.
pub fn certify_ldpc_expansion(g: &TannerGraph, budget: u128) -> Result<ExpansionReport> {
    let plan = ldpc_expansion_plan(g)?;
    verify_expansion(g, plan.k_max, plan.delta, Comparison::Strict, budget)
}

/// Runs the GLDPC expansion certificate with strict comparison.
pub fn certify_gldpc_expansion(g: &TannerGraph, t: usize, budget: u128) -> Result<ExpansionReport> {
    let plan = gldpc_expansion_plan(g, t)?;
    verify_expansion(g, plan.k_max, plan.delta, Comparison::Strict, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_vertex_incidence, gamma_augment, GeneralGraph};

    fn augmented_cycle() -> TannerGraph {
        let cyc = edge_vertex_incidence(&GeneralGraph::cycle(4).unwrap());
        gamma_augment(&cyc, 4).unwrap().graph
    }

    #[test]
    fn neighborhood_examples() {
        let g = augmented_cycle();
        assert_eq!(neighborhood_size(&g, &NodeSet::new(vec![0], 4).unwrap()).unwrap(), 4);
        assert_eq!(neighborhood_size(&g, &NodeSet::full(4)).unwrap(), 12);
        assert!(neighborhood_size(&g, &NodeSet::from_sorted(vec![9])).is_err());
    }

    #[test]
    fn equality_construction() {
        let g = augmented_cycle();
        let three = Rational::from_integer(3);
        let strict = verify_expansion(&g, 4, three, Comparison::Strict, DEFAULT_BUDGET).unwrap();
        assert!(!strict.passed());
        assert!(strict.non_strict_pass);
        assert_eq!(strict.first_violation().unwrap().size, 4);
        assert_eq!(strict.rows[3].min_neighbors, 12);
        assert_eq!(strict.subsets_examined, 15);
        let non = verify_expansion(&g, 4, three, Comparison::NonStrict, DEFAULT_BUDGET).unwrap();
        assert!(non.passed());
    }

    #[test]
    fn budget_refusal() {
        let g = augmented_cycle();
        assert_eq!(
            verify_expansion(&g, 4, Rational::from_integer(1), Comparison::Strict, 10),
            Err(Error::BudgetExceeded { needed: 15, budget: 10 })
        );
    }

    #[test]
    fn witness_is_lex_first() {
        let g = augmented_cycle();
        let r = verify_expansion(&g, 2, Rational::from_integer(1), Comparison::Strict, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.rows[0].witness.as_slice(), &[0]);
        // Adjacent pairs share a check: {0,1} is the first.
        assert_eq!((r.rows[1].min_neighbors, r.rows[1].witness.as_slice()), (7, &[0usize, 1][..]));
    }

    #[test]
    fn plans() {
        let g = augmented_cycle();
        // Girth 8, γ=4: n₀(2,4) = 4, so sets of at most 3.
        assert_eq!(ldpc_expansion_plan(&g).unwrap(), CertificatePlan { k_max: 3, delta: Rational::from_integer(3) });
        assert!(certify_ldpc_expansion(&g, DEFAULT_BUDGET).unwrap().passed());
        assert_eq!(gldpc_expansion_plan(&g, 1).unwrap().k_max, 3);
        let petersen = edge_vertex_incidence(&GeneralGraph::petersen());
        assert!(ldpc_expansion_plan(&petersen).is_err());
        assert!(gldpc_expansion_plan(&petersen, 1).is_err());
    }
}
