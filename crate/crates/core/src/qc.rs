//! Quasi-cyclic Tanner graphs from circulant-permutation exponent matrices.
//!
//! An `r × c` exponent matrix `A` and a lift `L` give a graph with `c·L`
//! variables and `r·L` checks: check `i·L + k` is adjacent to variable
//! `j·L + (k + A[i][j]) mod L`. Every such graph is `r`-left-regular and
//! `c`-right-regular. A 4-cycle exists iff some alternating sum of four
//! entries over two rows and two columns vanishes mod `L`; a 6-cycle iff
//! some alternating sum of six entries over three rows and three columns
//! does.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::TannerGraph;
use crate::{Error, Result};

/// Builds the lifted graph. Check neighbour lists are ascending.
pub fn quasi_cyclic(exponents: &[Vec<usize>], lift: usize) -> Result<TannerGraph> {
    let cols = exponents.first().map_or(0, Vec::len);
    if lift == 0 || exponents.iter().any(|row| row.len() != cols) {
        return Err(Error::Domain("exponent matrix must be rectangular and the lift positive"));
    }
    let mut checks = Vec::with_capacity(exponents.len() * lift);
    for row in exponents {
        for k in 0..lift {
            let mut nbrs: Vec<usize> = row.iter().enumerate().map(|(j, &a)| j * lift + (k + a) % lift).collect();
            nbrs.sort_unstable();
            checks.push(nbrs);
        }
    }
    TannerGraph::new(cols * lift, checks)
}

/// Search limits for [`search_exponents`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QcSearch {
    pub seed: u64,
    /// Cap on backtracking nodes per restart.
    pub max_steps: u64,
    pub restarts: u64,
}

impl Default for QcSearch {
    fn default() -> Self {
        QcSearch { seed: 0, max_steps: 2_000_000, restarts: 8 }
    }
}

struct Exponents {
    rows: usize,
    cols: usize,
    lift: i64,
    girth: usize,
    a: Vec<Vec<Option<i64>>>,
}

impl Exponents {
    fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.a[i][j]
    }

    /// Whether the entry at `(r0, c0)` closes a forbidden cycle with the
    /// entries assigned so far.
    fn conflicts(&self, r0: usize, c0: usize) -> bool {
        let l = self.lift;
        let x = self.get(r0, c0).expect("entry assigned");
        for k in (0..self.rows).filter(|&k| k != r0) {
            for m in (0..self.cols).filter(|&m| m != c0) {
                if let (Some(y), Some(z), Some(w)) = (self.get(r0, m), self.get(k, m), self.get(k, c0)) {
                    if (x - y + z - w).rem_euclid(l) == 0 {
                        return true;
                    }
                }
            }
        }
        if self.girth <= 6 {
            return false;
        }
        for i2 in (0..self.rows).filter(|&i| i != r0) {
            for i3 in (0..self.rows).filter(|&i| i != r0 && i != i2) {
                for j2 in (0..self.cols).filter(|&j| j != c0) {
                    for j3 in (0..self.cols).filter(|&j| j != c0 && j != j2) {
                        let terms = [self.get(r0, j2), self.get(i2, j2), self.get(i2, j3), self.get(i3, j3), self.get(i3, c0)];
                        if let [Some(b), Some(c), Some(d), Some(e), Some(f)] = terms {
                            if (x - b + c - d + e - f).rem_euclid(l) == 0 {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn fill(&mut self, pos: usize, steps: &mut u64, max_steps: u64, rng: &mut ChaCha8Rng) -> bool {
        if pos == self.rows * self.cols {
            return true;
        }
        if *steps >= max_steps {
            return false;
        }
        *steps += 1;
        let (i, j) = (pos % self.rows, pos / self.rows);
        // The first row and column can be normalised to zero.
        let candidates: Vec<i64> = if i == 0 || j == 0 {
            vec![0]
        } else {
            let off = rng.gen_range(0..self.lift);
            (0..self.lift).map(|t| (t + off) % self.lift).collect()
        };
        for v in candidates {
            self.a[i][j] = Some(v);
            if !self.conflicts(i, j) && self.fill(pos + 1, steps, max_steps, rng) {
                return true;
            }
        }
        self.a[i][j] = None;
        false
    }
}

/// Backtracking search for an `rows × cols` exponent matrix whose lift has
/// girth at least `girth` (4, 6 or 8). Returns `None` when the budget runs
/// out.
pub fn search_exponents(rows: usize, cols: usize, lift: usize, girth: usize, search: QcSearch) -> Result<Option<Vec<Vec<usize>>>> {
    if !matches!(girth, 4 | 6 | 8) {
        return Err(Error::Domain("quasi-cyclic search supports girth 4, 6 or 8"));
    }
    if rows == 0 || cols == 0 || lift == 0 {
        return Err(Error::Domain("dimensions and lift must be positive"));
    }
    for restart in 0..search.restarts {
        let mut ex = Exponents { rows, cols, lift: lift as i64, girth, a: vec![vec![None; cols]; rows] };
        let mut rng = ChaCha8Rng::seed_from_u64(search.seed.wrapping_add(restart));
        let mut steps = 0;
        if ex.fill(0, &mut steps, search.max_steps, &mut rng) {
            let a = ex.a.into_iter().map(|row| row.into_iter().map(|x| x.expect("filled") as usize).collect()).collect();
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_shape() {
        let g = quasi_cyclic(&[vec![0, 0, 0], vec![0, 1, 2]], 5).unwrap();
        assert_eq!((g.n_vars(), g.n_checks()), (15, 10));
        assert_eq!((g.left_degree(), g.right_degree()), (Some(2), Some(3)));
        assert!(quasi_cyclic(&[vec![0, 0], vec![0]], 3).is_err());
    }

    #[test]
    fn all_zero_exponents_have_four_cycles() {
        assert_eq!(quasi_cyclic(&[vec![0, 0], vec![0, 0]], 4).unwrap().girth(), Some(4));
    }

    #[test]
    fn searched_matrices_meet_girth() {
        for (rows, cols, lift, girth) in [(3, 4, 7, 6), (3, 4, 9, 8), (4, 4, 15, 8)] {
            let a = search_exponents(rows, cols, lift, girth, QcSearch::default()).unwrap().unwrap();
            let g = quasi_cyclic(&a, lift).unwrap();
            assert!(g.girth().unwrap() >= girth, "{rows}x{cols} lift {lift}");
        }
    }
}
