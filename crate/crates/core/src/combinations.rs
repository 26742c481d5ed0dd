//! k-subsets of `0..n` in colexicographic order.
//!
//! Colex order sorts combinations by their largest element first, so the
//! combinations whose maximum is `m` form one contiguous block. Sweeps use
//! this to split work into independent ranges and still report the
//! colex-least counterexample.

use alloc::vec::Vec;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step.
        let num = (n - i) as u128;
        acc = match acc.checked_mul(num) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `Σ_{s=lo..=hi} C(n, s)`, saturating.
pub fn binomial_sum(n: usize, lo: usize, hi: usize) -> u128 {
    (lo..=hi).fold(0u128, |acc, s| acc.saturating_add(binomial(n, s)))
}

/// Advances `comb` (strictly increasing, entries `< n`) to its colex successor.
/// Returns `false` when `comb` was the last combination.
pub fn next_colex(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in 0..k {
        let limit = if i + 1 < k { comb[i + 1] } else { n };
        if comb[i] + 1 < limit {
            comb[i] += 1;
            for (j, slot) in comb[..i].iter_mut().enumerate() {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// Iterator over all k-subsets of `0..n` in colex order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (0..k).collect(), fresh: true, done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else if !next_colex(&mut self.current, self.n) {
            self.done = true;
            return None;
        }
        Some(self.current.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(100, 5), 75_287_520);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial_sum(4, 0, 4), 16);
    }

    #[test]
    fn colex_order_and_count() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(Combinations::new(9, 4).count() as u128, binomial(9, 4));
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
