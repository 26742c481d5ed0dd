use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinations::Combinations;
use crate::{gf2, Error, Result};

/// Longest supported sub-code block length.
pub const MAX_SUBCODE_LEN: usize = 16;

const FAIL: u32 = u32::MAX;

/// A short binary linear code with a bounded-distance decoder.
///
/// Words are packed into `u32` with coordinate `j` at bit `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubCode {
    len: usize,
    generator: Vec<u32>,
    parity: Vec<u32>,
    codewords: Vec<u32>,
    d_min: usize,
    radius: usize,
    table: Vec<u32>,
}

fn pack(bits: &[bool]) -> u32 {
    bits.iter().enumerate().fold(0, |acc, (j, &b)| acc | (u32::from(b) << j))
}

impl SubCode {
    /// Builds the code spanned by `generator` rows of length `len`.
    /// Dependent rows are allowed; the span is what counts.
    pub fn from_generator(len: usize, generator: &[Vec<bool>]) -> Result<Self> {
        if len == 0 || len > MAX_SUBCODE_LEN {
            return Err(Error::Domain("sub-code length must be in 1..=16"));
        }
        for row in generator {
            if row.len() != len {
                return Err(Error::LengthMismatch { expected: len, found: row.len() });
            }
        }
        let rows: Vec<u32> = generator.iter().map(|r| pack(r)).collect();
        let mut span = BTreeSet::new();
        span.insert(0u32);
        for &r in &rows {
            let extra: Vec<u32> = span.iter().map(|&w| w ^ r).collect();
            span.extend(extra);
        }
        let codewords: Vec<u32> = span.into_iter().collect();
        let d_min = codewords.iter().filter(|&&w| w != 0).map(|w| w.count_ones() as usize).min();
        let Some(d_min) = d_min else {
            return Err(Error::Domain("sub-code must contain a non-zero codeword"));
        };
        let radius = (d_min - 1) / 2;
        let parity = {
            let packed: Vec<Vec<u64>> = rows.iter().map(|&r| vec![u64::from(r)]).collect();
            gf2::kernel_basis(&packed, len).into_iter().map(|k| k[0] as u32).collect()
        };
        let mut table = vec![FAIL; 1 << len];
        for &c in &codewords {
            for w in 0..=radius {
                for flips in Combinations::new(len, w) {
                    let e = flips.iter().fold(0u32, |acc, &j| acc | 1 << j);
                    table[(c ^ e) as usize] = c;
                }
            }
        }
        Ok(SubCode { len, generator: rows, parity, codewords, d_min, radius, table })
    }

    /// Builds the code from a generator given as packed rows (bit `j` is
    /// coordinate `j`).
    pub fn from_packed_generator(len: usize, rows: &[u32]) -> Result<Self> {
        let unpacked: Vec<Vec<bool>> = rows.iter().map(|&r| (0..len).map(|j| r >> j & 1 == 1).collect()).collect();
        if rows.iter().any(|&r| len < 32 && r >> len != 0) {
            return Err(Error::Domain("generator row has bits beyond the block length"));
        }
        Self::from_generator(len, &unpacked)
    }

    /// The [7,4,3] Hamming code.
    pub fn hamming_7_4() -> Self {
        Self::from_generator(7, &rows(&["1000110", "0100011", "0010111", "0001101"])).expect("valid generator")
    }

    /// The [8,4,4] extended Hamming code.
    pub fn extended_hamming_8_4() -> Self {
        Self::from_generator(8, &rows(&["10001101", "01000111", "00101011", "00011110"])).expect("valid generator")
    }

    /// The [n, n−1, 2] single parity-check code. Its radius is 0, so as a
    /// sub-code it never sends flip messages.
    pub fn single_parity_check(len: usize) -> Result<Self> {
        let gen: Vec<Vec<bool>> = (0..len.saturating_sub(1))
            .map(|i| (0..len).map(|j| j == i || j == len - 1).collect())
            .collect();
        Self::from_generator(len, &gen)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.codewords.len().trailing_zeros() as usize
    }

    pub fn d_min(&self) -> usize {
        self.d_min
    }

    /// Correction radius `t = ⌊(d_min − 1)/2⌋`.
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Packed generator rows as supplied.
    pub fn generator(&self) -> &[u32] {
        &self.generator
    }

    /// Packed parity-check rows spanning the dual code.
    pub fn parity_checks(&self) -> &[u32] {
        &self.parity
    }

    /// All codewords, packed, ascending.
    pub fn codewords(&self) -> &[u32] {
        &self.codewords
    }

    pub fn contains_packed(&self, y: u32) -> bool {
        self.codewords.binary_search(&y).is_ok()
    }

    /// The unique codeword within distance `t` of packed `y`, if any.
    pub fn decode_packed(&self, y: u32) -> Option<u32> {
        let c = *self.table.get(y as usize)?;
        (c != FAIL).then_some(c)
    }

    /// Bounded-distance decoding of a length-ρ word.
    pub fn decode(&self, y: &[bool]) -> Result<Option<Vec<bool>>> {
        if y.len() != self.len {
            return Err(Error::LengthMismatch { expected: self.len, found: y.len() });
        }
        Ok(self.decode_packed(pack(y)).map(|c| (0..self.len).map(|j| c >> j & 1 == 1).collect()))
    }
}

fn rows(text: &[&str]) -> Vec<Vec<bool>> {
    text.iter().map(|r| r.bytes().map(|b| b == b'1').collect()).collect()
}
