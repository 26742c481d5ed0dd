use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::BitXor;

use crate::{Error, Result};

/// A binary word of fixed length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord(Vec<bool>);

impl BitWord {
    pub fn zeros(n: usize) -> Self {
        BitWord(vec![false; n])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitWord(bits)
    }

    /// Word of length `n` with ones exactly at `support`.
    ///
    /// # Panics
    /// If an index is `>= n`. Use [`BitWord::try_from_support`] for untrusted
    /// input.
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        Self::try_from_support(n, support).expect("support index out of range")
    }

    pub fn try_from_support(n: usize, support: &[usize]) -> Result<Self> {
        let mut bits = vec![false; n];
        for &i in support {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            bits[i] = true;
        }
        Ok(BitWord(bits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        self.0[i] = bit;
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i] = !self.0[i];
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Indices of the ones, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)).collect()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| !b)
    }

    /// Hamming distance; the words must have equal length.
    pub fn distance(&self, other: &BitWord) -> usize {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl BitXor<&BitWord> for &BitWord {
    type Output = BitWord;

    fn bitxor(self, rhs: &BitWord) -> BitWord {
        assert_eq!(self.len(), rhs.len(), "xor of words with different lengths");
        BitWord(self.0.iter().zip(&rhs.0).map(|(a, b)| a ^ b).collect())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

/// Renders as a string of `0` and `1`.
impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn support_round_trip() {
        let w = BitWord::from_support(6, &[4, 1, 4]);
        assert_eq!(w.support(), vec![1, 4]);
        assert_eq!(w.weight(), 2);
        assert_eq!(w.to_string(), "010010");
        assert!(BitWord::try_from_support(3, &[3]).is_err());
    }

    #[test]
    fn xor_and_distance() {
        let a = BitWord::from_support(5, &[0, 2]);
        let b = BitWord::from_support(5, &[2, 3]);
        assert_eq!((&a ^ &b).support(), vec![0, 3]);
        assert_eq!(a.distance(&b), 2);
        assert!((&a ^ &a).is_zero());
    }
}
