//! Exhaustive and sampled error-pattern sweeps against the zero codeword.
//!
//! Patterns of each weight are enumerated in colex order. The work for one
//! weight is split into blocks sharing the same largest index, decoded on the
//! rayon pool, and merged so that the recorded first failure is always the
//! colex-least one regardless of the thread count.

use rand::seq::index::sample;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use tanner_core::bounds::{gldpc_guarantee, ldpc_guarantee};
use tanner_core::combinations::{binomial, binomial_sum, next_colex};
use tanner_core::decode::{Algorithm, BitWord, Decoder, Status};
use tanner_core::graph::TannerGraph;
use tanner_core::{Error, Result};

use crate::format::{write_alist, write_subcode};

/// Name of the generator behind sampled sweeps, as printed in reports.
pub const SAMPLE_RNG: &str = "ChaCha8Rng (rand_chacha 0.3, seed_from_u64)";

/// Round cap used when the caller has no preference.
pub const DEFAULT_MAX_ROUNDS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    /// `count` patterns per weight drawn uniformly without replacement of
    /// positions.
    Sample { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub pattern: Vec<usize>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub weight: usize,
    pub patterns_tried: u128,
    pub failures: u128,
    pub first_failure: Option<Failure>,
}

impl WeightRow {
    fn empty(weight: usize) -> Self {
        WeightRow { weight, patterns_tried: 0, failures: 0, first_failure: None }
    }

    /// Combines two partial rows; `later` covers patterns after `self`'s.
    fn merge(mut self, later: WeightRow) -> WeightRow {
        self.patterns_tried += later.patterns_tried;
        self.failures += later.failures;
        if self.first_failure.is_none() {
            self.first_failure = later.first_failure;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub code_id: String,
    pub algorithm: Algorithm,
    pub mode: SweepMode,
    pub max_rounds: usize,
    pub rows: Vec<WeightRow>,
    /// Largest weight the bounds promise to correct, if they apply.
    pub guarantee: Option<usize>,
    pub verdict: Verdict,
}

impl SweepReport {
    pub fn total_failures(&self) -> u128 {
        self.rows.iter().map(|r| r.failures).sum()
    }

    /// Re-decodes every recorded failure and confirms it fails the same way.
    pub fn replay(&self, decoder: &Decoder<'_>) -> Result<bool> {
        for f in self.rows.iter().filter_map(|r| r.first_failure.as_ref()) {
            let outcome = decoder.decode(BitWord::try_from_support(decoder.n_vars(), &f.pattern)?, self.max_rounds)?;
            if !outcome.final_word.is_zero() && outcome.status == f.status {
                continue;
            }
            return Ok(false);
        }
        Ok(true)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "code {}  algorithm {}  mode {}\nguarantee: {}\n",
            self.code_id,
            self.algorithm.as_str(),
            mode_label(&self.mode),
            self.guarantee.map_or("none".to_owned(), |g| format!("every weight <= {g}")),
        );
        out.push_str("weight      tried   failures  first failure\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:>6} {:>10} {:>10}  {}\n",
                r.weight,
                r.patterns_tried,
                r.failures,
                r.first_failure.as_ref().map_or("-".to_owned(), |f| format!("{:?} ({})", f.pattern, f.status.as_str())),
            ));
        }
        out.push_str(&format!("verdict: {}\n", verdict_label(self.verdict)));
        out
    }

    pub fn render_lines(&self) -> String {
        let mut out = format!("code={}\nalgorithm={}\nmode={}\n", self.code_id, self.algorithm.as_str(), mode_label(&self.mode));
        out.push_str(&format!("guarantee={}\n", self.guarantee.map_or("none".to_owned(), |g| g.to_string())));
        for r in &self.rows {
            let first = r.first_failure.as_ref().map_or("none".to_owned(), |f| join(&f.pattern));
            out.push_str(&format!("weight={} tried={} failures={} first_failure={first}\n", r.weight, r.patterns_tried, r.failures));
        }
        out.push_str(&format!("verdict={}\n", verdict_label(self.verdict)));
        out
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn mode_label(mode: &SweepMode) -> String {
    match mode {
        SweepMode::Exhaustive => "exhaustive".to_owned(),
        SweepMode::Sample { count, seed } => format!("sample count={count} seed={seed} rng={SAMPLE_RNG}"),
    }
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::Consistent => "consistent",
        Verdict::Violated => "violated",
    }
}

/// First 16 hex digits of the SHA-256 of the code's alist text, followed by
/// the sub-code spec for GLDPC codes.
pub fn code_identity(decoder: &Decoder<'_>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(write_alist(decoder.graph()));
    if let Decoder::Gldpc(code) = decoder {
        hasher.update(write_subcode(code.subcode()));
    }
    hasher.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// The weight the bounds module promises the decoder corrects on this
/// graph, or `None` when no bound applies (irregular graph, forest, degree
/// too small).
pub fn claimed_guarantee(decoder: &Decoder<'_>) -> Option<usize> {
    let g = decoder.graph();
    let gamma = g.left_degree()?;
    let girth = g.girth()?;
    let bound = match decoder {
        Decoder::Parallel(_) | Decoder::Serial(_) => ldpc_guarantee(gamma, girth),
        Decoder::Gldpc(code) => gldpc_guarantee(gamma, code.subcode().radius(), girth),
    };
    bound.ok().map(|b| b.guaranteed())
}

fn decode_fails(decoder: &Decoder<'_>, n: usize, pattern: &[usize], max_rounds: usize) -> Result<Option<Status>> {
    let outcome = decoder.decode(BitWord::try_from_support(n, pattern)?, max_rounds)?;
    Ok((!outcome.final_word.is_zero()).then_some(outcome.status))
}

/// All weight-`w` patterns whose largest index is `top`, in colex order.
fn scan_block(decoder: &Decoder<'_>, w: usize, top: usize, max_rounds: usize) -> Result<WeightRow> {
    let n = decoder.n_vars();
    let mut row = WeightRow::empty(w);
    let mut prefix: Vec<usize> = (0..w - 1).collect();
    let mut pattern = Vec::with_capacity(w);
    loop {
        pattern.clear();
        pattern.extend_from_slice(&prefix);
        pattern.push(top);
        row.patterns_tried += 1;
        if let Some(status) = decode_fails(decoder, n, &pattern, max_rounds)? {
            row.failures += 1;
            if row.first_failure.is_none() {
                row.first_failure = Some(Failure { pattern: pattern.clone(), status });
            }
        }
        if !next_colex(&mut prefix, top) {
            return Ok(row);
        }
    }
}

fn sweep_exhaustive(decoder: &Decoder<'_>, w: usize, max_rounds: usize) -> Result<WeightRow> {
    let n = decoder.n_vars();
    if w > n {
        return Ok(WeightRow::empty(w));
    }
    (w - 1..n)
        .into_par_iter()
        .map(|top| scan_block(decoder, w, top, max_rounds))
        .try_reduce(|| WeightRow::empty(w), |a, b| Ok(a.merge(b)))
}

fn sweep_sampled(decoder: &Decoder<'_>, w: usize, count: u64, rng: &mut ChaCha8Rng, max_rounds: usize) -> Result<WeightRow> {
    let n = decoder.n_vars();
    if w > n {
        return Ok(WeightRow::empty(w));
    }
    let patterns: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let mut p = sample(rng, n, w).into_vec();
            p.sort_unstable();
            p
        })
        .collect();
    patterns
        .par_iter()
        .map(|p| {
            let mut row = WeightRow::empty(w);
            row.patterns_tried = 1;
            if let Some(status) = decode_fails(decoder, n, p, max_rounds)? {
                row.failures = 1;
                row.first_failure = Some(Failure { pattern: p.clone(), status });
            }
            Ok(row)
        })
        .try_reduce(|| WeightRow::empty(w), |a, b| Ok(a.merge(b)))
}

/// Decodes every pattern of weight `1..=w_max` (or `count` samples of each
/// weight) and checks the outcome against [`claimed_guarantee`]. A pattern
/// fails when the decoder does not return the zero word.
///
/// Exhaustive mode refuses with [`Error::BudgetExceeded`] when the total
/// number of patterns exceeds `budget`.
pub fn sweep_guarantee(
    decoder: &Decoder<'_>,
    w_max: usize,
    mode: SweepMode,
    max_rounds: usize,
    budget: u128,
) -> Result<SweepReport> {
    let n = decoder.n_vars();
    let needed = match mode {
        SweepMode::Exhaustive => binomial_sum(n, 1, w_max.min(n)),
        SweepMode::Sample { count, .. } => (count as u128).saturating_mul(w_max as u128),
    };
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut rng = match mode {
        SweepMode::Sample { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
        SweepMode::Exhaustive => None,
    };
    let mut rows = Vec::with_capacity(w_max);
    for w in 1..=w_max {
        let row = match (&mode, rng.as_mut()) {
            (SweepMode::Sample { count, .. }, Some(rng)) => sweep_sampled(decoder, w, *count, rng, max_rounds)?,
            _ => sweep_exhaustive(decoder, w, max_rounds)?,
        };
        rows.push(row);
    }
    let guarantee = claimed_guarantee(decoder);
    let limit = guarantee.unwrap_or(0);
    let violated = rows.iter().any(|r| r.weight <= limit && r.failures > 0);
    Ok(SweepReport {
        code_id: code_identity(decoder),
        algorithm: decoder.algorithm(),
        mode,
        max_rounds,
        rows,
        guarantee,
        verdict: if violated { Verdict::Violated } else { Verdict::Consistent },
    })
}

/// Number of patterns an exhaustive sweep up to `w_max` decodes on `g`.
pub fn exhaustive_pattern_count(g: &TannerGraph, w_max: usize) -> u128 {
    (1..=w_max).map(|w| binomial(g.n_vars(), w)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use tanner_core::graph::{edge_vertex_incidence, GeneralGraph};

    fn colex_all(n: usize, w: usize) -> Vec<Vec<usize>> {
        tanner_core::combinations::Combinations::new(n, w).collect()
    }

    #[test]
    fn empty_sweep_is_consistent() {
        let g = edge_vertex_incidence(&GeneralGraph::petersen());
        let d = Decoder::Parallel(&g);
        let r = sweep_guarantee(&d, 0, SweepMode::Exhaustive, 10, u128::MAX).unwrap();
        assert!(r.rows.is_empty());
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn first_failure_is_colex_least() {
        // Degree-2 variables on a cycle: any single error leaves both checks
        // unsatisfied and is flipped back, while adjacent pairs get stuck.
        let g = edge_vertex_incidence(&GeneralGraph::cycle(6).unwrap());
        let d = Decoder::Parallel(&g);
        let r = sweep_guarantee(&d, 3, SweepMode::Exhaustive, 20, u128::MAX).unwrap();
        for row in &r.rows {
            assert_eq!(row.patterns_tried, binomial(6, row.weight));
            let expected = colex_all(6, row.weight)
                .into_iter()
                .find(|p| decode_fails(&d, 6, p, 20).unwrap().is_some());
            assert_eq!(row.first_failure.as_ref().map(|f| f.pattern.clone()), expected);
        }
        assert!(r.replay(&d).unwrap());
    }

    #[test]
    fn thread_count_does_not_change_the_report() {
        let g = edge_vertex_incidence(&GeneralGraph::petersen());
        let d = Decoder::Serial(&g);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| sweep_guarantee(&d, 3, SweepMode::Exhaustive, 20, u128::MAX).unwrap())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn sampling_is_seeded() {
        let g = edge_vertex_incidence(&GeneralGraph::petersen());
        let d = Decoder::Parallel(&g);
        let mode = SweepMode::Sample { count: 30, seed: 9 };
        let a = sweep_guarantee(&d, 4, mode, 20, u128::MAX).unwrap();
        assert_eq!(a, sweep_guarantee(&d, 4, mode, 20, u128::MAX).unwrap());
        assert!(a.rows.iter().all(|r| r.patterns_tried == 30));
        assert!(a.render_lines().contains("ChaCha8Rng"));
    }

    #[test]
    fn budget_is_enforced() {
        let g = edge_vertex_incidence(&GeneralGraph::petersen());
        let err = sweep_guarantee(&Decoder::Parallel(&g), 3, SweepMode::Exhaustive, 20, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert_eq!(exhaustive_pattern_count(&g, 3), 10 + 45 + 120);
    }
}
