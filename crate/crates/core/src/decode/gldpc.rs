use alloc::vec;
use alloc::vec::Vec;

use super::{drive, BitWord, DecodeOutcome, SubCode};
use crate::graph::{NodeSet, TannerGraph};
use crate::{Error, Result};

/// What one check sends in a round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckMessage {
    /// The local word decoded; flip messages go to these variables (possibly
    /// none).
    Flips(Vec<usize>),
    /// No codeword within the radius; nothing is sent.
    Failure,
}

impl CheckMessage {
    pub fn flips(&self) -> &[usize] {
        match self {
            CheckMessage::Flips(v) => v,
            CheckMessage::Failure => &[],
        }
    }
}

/// A generalized LDPC code: every check constrains its ordered neighbourhood
/// to lie in the sub-code, coordinate `j` being the `j`-th neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GldpcCode {
    graph: TannerGraph,
    subcode: SubCode,
}

impl GldpcCode {
    /// Binds a right-regular graph to a sub-code of matching length.
    pub fn new(graph: TannerGraph, subcode: SubCode) -> Result<Self> {
        for c in 0..graph.n_checks() {
            if graph.check_degree(c) != subcode.len() {
                return Err(Error::CheckDegreeMismatch {
                    check: c,
                    degree: graph.check_degree(c),
                    expected: subcode.len(),
                });
            }
        }
        Ok(GldpcCode { graph, subcode })
    }

    pub fn graph(&self) -> &TannerGraph {
        &self.graph
    }

    pub fn subcode(&self) -> &SubCode {
        &self.subcode
    }

    pub fn n_vars(&self) -> usize {
        self.graph.n_vars()
    }

    fn check_len(&self, x: &BitWord) -> Result<()> {
        if x.len() != self.n_vars() {
            return Err(Error::LengthMismatch { expected: self.n_vars(), found: x.len() });
        }
        Ok(())
    }

    /// Packed local word seen by check `c`.
    fn local(&self, c: usize, x: &BitWord) -> u32 {
        self.graph.check_neighbors(c).iter().enumerate().fold(0, |acc, (j, &v)| acc | (u32::from(x.get(v)) << j))
    }

    fn message(&self, c: usize, x: &BitWord) -> CheckMessage {
        let y = self.local(c, x);
        match self.subcode.decode_packed(y) {
            None => CheckMessage::Failure,
            Some(cw) => {
                let diff = cw ^ y;
                let nbrs = self.graph.check_neighbors(c);
                CheckMessage::Flips((0..nbrs.len()).filter(|&j| diff >> j & 1 == 1).map(|j| nbrs[j]).collect())
            }
        }
    }

    /// The message every check would send on `x`.
    pub fn check_messages(&self, x: &BitWord) -> Result<Vec<CheckMessage>> {
        self.check_len(x)?;
        Ok((0..self.graph.n_checks()).map(|c| self.message(c, x)).collect())
    }

    pub(crate) fn is_codeword_unchecked(&self, x: &BitWord) -> bool {
        (0..self.graph.n_checks()).all(|c| self.subcode.contains_packed(self.local(c, x)))
    }

    pub fn is_codeword(&self, x: &BitWord) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.is_codeword_unchecked(x))
    }

    pub(crate) fn round_unchecked(&self, x: &BitWord) -> BitWord {
        let mut received = vec![0usize; self.n_vars()];
        for c in 0..self.graph.n_checks() {
            for &v in self.message(c, x).flips() {
                received[v] += 1;
            }
        }
        let mut out = x.clone();
        for (v, &count) in received.iter().enumerate() {
            if 2 * count > self.graph.var_degree(v) {
                out.flip(v);
            }
        }
        out
    }

    /// One round: checks decode their neighbourhoods and send flip messages;
    /// a variable flips when it receives more than half its degree in flips.
    pub fn round(&self, x: &BitWord) -> Result<BitWord> {
        self.check_len(x)?;
        Ok(self.round_unchecked(x))
    }

    pub fn decode(&self, x: BitWord, max_rounds: usize) -> Result<DecodeOutcome> {
        self.check_len(&x)?;
        Ok(drive(x, max_rounds, |w| self.is_codeword_unchecked(w), |w| self.round_unchecked(w)))
    }

    /// Checks that flip a correct variable or fail to flip a corrupt one,
    /// with corruption measured against `reference`.
    pub fn confused_checks(&self, x: &BitWord, reference: &BitWord) -> Result<NodeSet> {
        self.check_len(x)?;
        self.check_len(reference)?;
        let confused = (0..self.graph.n_checks())
            .filter(|&c| {
                let msg = self.message(c, x);
                let flips = msg.flips();
                self.graph.check_neighbors(c).iter().any(|&v| {
                    let corrupt = x.get(v) != reference.get(v);
                    corrupt != flips.contains(&v)
                })
            })
            .collect();
        Ok(NodeSet::from_sorted(confused))
    }

    /// Packed binary parity-check rows of the whole code: each sub-code
    /// parity check placed on each check's neighbourhood.
    pub fn parity_rows(&self) -> Vec<Vec<u64>> {
        let words = self.n_vars().div_ceil(64);
        let mut out = Vec::new();
        for nbrs in self.graph.checks() {
            for &p in self.subcode.parity_checks() {
                let mut row = vec![0u64; words];
                for (j, &v) in nbrs.iter().enumerate() {
                    if p >> j & 1 == 1 {
                        row[v / 64] |= 1 << (v % 64);
                    }
                }
                out.push(row);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_vertex_incidence, GeneralGraph};

    /// Single check over seven variables carrying Hamming(7,4).
    fn one_check() -> GldpcCode {
        let g = TannerGraph::new(7, vec![(0..7).collect()]).unwrap();
        GldpcCode::new(g, SubCode::hamming_7_4()).unwrap()
    }

    #[test]
    fn assemble_checks_degree() {
        let g = edge_vertex_incidence(&GeneralGraph::complete(4));
        assert!(matches!(
            GldpcCode::new(g, SubCode::hamming_7_4()),
            Err(Error::CheckDegreeMismatch { expected: 7, .. })
        ));
        let code = one_check();
        let out = code.decode(BitWord::zeros(7), 5).unwrap();
        assert_eq!(out.status, super::super::Status::Codeword);
    }

    #[test]
    fn messages_and_confusion() {
        let code = one_check();
        let zero = BitWord::zeros(7);
        assert!(code.confused_checks(&zero, &zero).unwrap().is_empty());
        let one = BitWord::from_support(7, &[2]);
        assert_eq!(code.check_messages(&one).unwrap(), vec![CheckMessage::Flips(vec![2])]);
        assert!(code.confused_checks(&one, &zero).unwrap().is_empty());
        // Two errors decode to a weight-3 codeword and flip a correct bit.
        let two = BitWord::from_support(7, &[0, 1]);
        let msgs = code.check_messages(&two).unwrap();
        assert_eq!(msgs[0].flips().len(), 1);
        assert!(!two.get(msgs[0].flips()[0]));
        assert_eq!(code.confused_checks(&two, &zero).unwrap().as_slice(), &[0]);
    }

    #[test]
    fn parity_rows_define_the_code() {
        let code = one_check();
        let rows = code.parity_rows();
        assert_eq!(rows.len(), 3);
        assert_eq!(crate::gf2::kernel_basis(&rows, 7).len(), 4);
    }
}
