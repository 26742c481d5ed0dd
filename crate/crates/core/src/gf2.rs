//! Dense GF(2) linear algebra on packed `u64` rows.

use alloc::vec;
use alloc::vec::Vec;

/// Bit `j` of a packed row.
pub fn get(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Reduced row echelon form; returns the non-zero rows and their pivots.
fn rref(rows: &[Vec<u64>], ncols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| get(&m[i], col)) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && get(row, col) {
                xor_into(row, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<u64>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : row·x = 0 for every row}` over `ncols` coordinates.
pub fn kernel_basis(rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    let words = ncols.div_ceil(64);
    let (m, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = vec![0u64; words];
            x[free / 64] |= 1 << (free % 64);
            for (row, &p) in m.iter().zip(&pivots) {
                if get(row, free) {
                    x[p / 64] |= 1 << (p % 64);
                }
            }
            x
        })
        .collect()
}
