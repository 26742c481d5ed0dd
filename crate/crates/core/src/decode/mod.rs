//! Hard-decision bit-flipping decoders.
//!
//! All decoders share one driver loop that stops on a codeword, on a fixed
//! point (a round that changes nothing), on a revisited word (oscillation) or
//! at the round cap.

mod gldpc;
mod subcode;
mod word;

pub use gldpc::{CheckMessage, GldpcCode};
pub use subcode::SubCode;
pub use word::BitWord;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::TannerGraph;
use crate::{Error, Result};

/// How a decoding run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Codeword,
    FixedPoint,
    Oscillation,
    IterationCap,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Codeword => "codeword",
            Status::FixedPoint => "fixed_point",
            Status::Oscillation => "oscillation",
            Status::IterationCap => "iteration_cap",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub final_word: BitWord,
    pub status: Status,
    pub rounds_used: usize,
    pub per_round_flip_counts: Vec<usize>,
}

/// Shared iteration loop. `step` performs one round (or one serial pass).
fn drive<C, S>(start: BitWord, max_rounds: usize, is_codeword: C, mut step: S) -> DecodeOutcome
where
    C: Fn(&BitWord) -> bool,
    S: FnMut(&BitWord) -> BitWord,
{
    let mut word = start;
    let mut seen = BTreeSet::new();
    let mut flips = Vec::new();
    seen.insert(word.clone());
    let status = loop {
        if is_codeword(&word) {
            break Status::Codeword;
        }
        if flips.len() >= max_rounds {
            break Status::IterationCap;
        }
        let next = step(&word);
        let changed = word.distance(&next);
        if changed == 0 {
            break Status::FixedPoint;
        }
        flips.push(changed);
        word = next;
        if !seen.insert(word.clone()) {
            break Status::Oscillation;
        }
    };
    DecodeOutcome { final_word: word, status, rounds_used: flips.len(), per_round_flip_counts: flips }
}

fn check_len(g: &TannerGraph, x: &BitWord) -> Result<()> {
    if x.len() != g.n_vars() {
        return Err(Error::LengthMismatch { expected: g.n_vars(), found: x.len() });
    }
    Ok(())
}

/// One bit per check: `true` when the check is unsatisfied.
pub fn syndrome(g: &TannerGraph, x: &BitWord) -> Result<Vec<bool>> {
    check_len(g, x)?;
    Ok(syndrome_unchecked(g, x))
}

fn syndrome_unchecked(g: &TannerGraph, x: &BitWord) -> Vec<bool> {
    g.checks().iter().map(|nbrs| nbrs.iter().filter(|&&v| x.get(v)).count() % 2 == 1).collect()
}

fn is_ldpc_codeword(g: &TannerGraph, x: &BitWord) -> bool {
    g.checks().iter().all(|nbrs| nbrs.iter().filter(|&&v| x.get(v)).count() % 2 == 0)
}

/// One parallel round: every variable in strictly more unsatisfied than
/// satisfied checks flips, all decided from the incoming word.
pub fn parallel_bf_round(g: &TannerGraph, x: &BitWord) -> Result<BitWord> {
    check_len(g, x)?;
    Ok(parallel_round_unchecked(g, x))
}

fn parallel_round_unchecked(g: &TannerGraph, x: &BitWord) -> BitWord {
    let syn = syndrome_unchecked(g, x);
    let mut out = x.clone();
    for v in 0..g.n_vars() {
        let nbrs = g.var_neighbors(v);
        let unsat = nbrs.iter().filter(|&&c| syn[c]).count();
        if 2 * unsat > nbrs.len() {
            out.flip(v);
        }
    }
    out
}

pub fn parallel_bf_decode(g: &TannerGraph, x: BitWord, max_rounds: usize) -> Result<DecodeOutcome> {
    check_len(g, &x)?;
    Ok(drive(x, max_rounds, |w| is_ldpc_codeword(g, w), |w| parallel_round_unchecked(g, w)))
}

/// One serial pass in `order`: a variable flips on the spot if it is in
/// strictly more unsatisfied than satisfied checks at that moment.
fn serial_pass(g: &TannerGraph, x: &BitWord, order: &[usize]) -> BitWord {
    let mut syn = syndrome_unchecked(g, x);
    let mut out = x.clone();
    for &v in order {
        let nbrs = g.var_neighbors(v);
        let unsat = nbrs.iter().filter(|&&c| syn[c]).count();
        if 2 * unsat > nbrs.len() {
            out.flip(v);
            for &c in nbrs {
                syn[c] = !syn[c];
            }
        }
    }
    out
}

/// Serial bit flipping sweeping variables in ascending index order.
pub fn serial_bf_decode(g: &TannerGraph, x: BitWord, max_passes: usize) -> Result<DecodeOutcome> {
    let order: Vec<usize> = (0..g.n_vars()).collect();
    serial_bf_decode_with_order(g, x, max_passes, &order)
}

/// Serial bit flipping with an explicit sweep order (a permutation of the
/// variables).
pub fn serial_bf_decode_with_order(
    g: &TannerGraph,
    x: BitWord,
    max_passes: usize,
    order: &[usize],
) -> Result<DecodeOutcome> {
    check_len(g, &x)?;
    let mut seen = vec![false; g.n_vars()];
    for &v in order {
        if v >= g.n_vars() || core::mem::replace(&mut seen[v], true) {
            return Err(Error::Domain("serial order must be a permutation of the variables"));
        }
    }
    if order.len() != g.n_vars() {
        return Err(Error::Domain("serial order must be a permutation of the variables"));
    }
    Ok(drive(x, max_passes, |w| is_ldpc_codeword(g, w), |w| serial_pass(g, w, order)))
}

/// Decoding algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Parallel,
    Serial,
    Gldpc,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Parallel => "parallel",
            Algorithm::Serial => "serial",
            Algorithm::Gldpc => "gldpc",
        }
    }
}

/// A decoder bound to its code.
#[derive(Debug, Clone, Copy)]
pub enum Decoder<'a> {
    Parallel(&'a TannerGraph),
    Serial(&'a TannerGraph),
    Gldpc(&'a GldpcCode),
}

impl<'a> Decoder<'a> {
    pub fn graph(&self) -> &'a TannerGraph {
        match self {
            Decoder::Parallel(g) | Decoder::Serial(g) => g,
            Decoder::Gldpc(c) => c.graph(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.graph().n_vars()
    }

    pub fn algorithm(&self) -> Algorithm {
        match self {
            Decoder::Parallel(_) => Algorithm::Parallel,
            Decoder::Serial(_) => Algorithm::Serial,
            Decoder::Gldpc(_) => Algorithm::Gldpc,
        }
    }

    fn check(&self, x: &BitWord) -> Result<()> {
        check_len(self.graph(), x)
    }

    /// One round (a full pass for the serial decoder).
    pub fn round(&self, x: &BitWord) -> Result<BitWord> {
        self.check(x)?;
        Ok(match self {
            Decoder::Parallel(g) => parallel_round_unchecked(g, x),
            Decoder::Serial(g) => {
                let order: Vec<usize> = (0..g.n_vars()).collect();
                serial_pass(g, x, &order)
            }
            Decoder::Gldpc(c) => c.round_unchecked(x),
        })
    }

    pub fn is_codeword(&self, x: &BitWord) -> Result<bool> {
        self.check(x)?;
        Ok(match self {
            Decoder::Parallel(g) | Decoder::Serial(g) => is_ldpc_codeword(g, x),
            Decoder::Gldpc(c) => c.is_codeword_unchecked(x),
        })
    }

    pub fn decode(&self, x: BitWord, max_rounds: usize) -> Result<DecodeOutcome> {
        match self {
            Decoder::Parallel(g) => parallel_bf_decode(g, x, max_rounds),
            Decoder::Serial(g) => serial_bf_decode(g, x, max_rounds),
            Decoder::Gldpc(c) => c.decode(x, max_rounds),
        }
    }

    /// `true` when one round leaves the word unchanged.
    pub fn is_fixed_point(&self, x: &BitWord) -> Result<bool> {
        Ok(self.round(x)? == *x)
    }
}
