use alloc::vec;
use alloc::vec::Vec;

use crate::decode::BitWord;
use crate::{Error, Result};

/// A sorted, duplicate-free set of variable-node indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet(Vec<usize>);

impl NodeSet {
    /// Sorts and deduplicates `indices`, rejecting any index `>= n`.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(NodeSet(indices))
    }

    pub fn empty() -> Self {
        NodeSet(Vec::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        NodeSet((0..n).collect())
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        NodeSet(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &i in &self.0 {
            m[i] = true;
        }
        m
    }

    /// The word of length `n` supported on this set.
    pub fn to_word(&self, n: usize) -> BitWord {
        BitWord::from_support(n, &self.0)
    }
}

impl NodeSet {
    /// Like [`NodeSet::to_word`], but errors when an index is `>= n`.
    pub fn to_word_checked(&self, n: usize) -> crate::Result<BitWord> {
        BitWord::try_from_support(n, &self.0)
    }
}

impl From<NodeSet> for Vec<usize> {
    fn from(s: NodeSet) -> Vec<usize> {
        s.0
    }
}
