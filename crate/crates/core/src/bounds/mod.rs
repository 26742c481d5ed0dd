//! Moore bound, cage orders and the correction thresholds built from them.
//!
//! Everything here is exact: values are [`Rational`]s and every threshold
//! carries the largest integer strictly below it, so callers never redo the
//! strict-inequality bookkeeping.

mod bipartite;
mod cage;

pub use bipartite::{bipartite_cage_order, bipartite_lower_bound, BipartiteCageOrder, BipartiteSearch};
pub use cage::{cage_order, cage_witness, CageOrder};

use num_traits::{CheckedAdd, CheckedMul, ToPrimitive};

use crate::{Error, Rational, Result};

/// Which formula produced a [`BoundValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Moore,
    CageUpper,
    LdpcGuarantee,
    GldpcGuarantee,
}

/// A threshold and the largest integer strictly below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub value: Rational,
    pub floor_int: i128,
    pub kind: BoundKind,
}

impl BoundValue {
    fn new(value: Rational, kind: BoundKind) -> Self {
        let floor_int = value.ceil().to_integer() - 1;
        BoundValue { value, floor_int, kind }
    }

    /// `floor_int` as a count, saturating; negative values map to 0.
    pub fn guaranteed(&self) -> usize {
        self.floor_int.max(0).to_usize().unwrap_or(usize::MAX)
    }
}

fn checked_pow(base: Rational, exp: usize) -> Result<Rational> {
    let mut acc = Rational::from_integer(1);
    for _ in 0..exp {
        acc = acc.checked_mul(&base).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v as i128)
}

/// Moore bound `n₀(d, g)` for real degree `d ≥ 2`, with `r = ⌊g/2⌋`:
/// `1 + d·Σ_{i<r}(d−1)^i` for odd `g`, `2·Σ_{i<r}(d−1)^i` for even `g`.
pub fn moore_bound(d: Rational, g: usize) -> Result<BoundValue> {
    if d < int(2) {
        return Err(Error::Domain("Moore bound needs degree >= 2"));
    }
    if g < 2 {
        return Err(Error::Domain("Moore bound needs girth >= 2"));
    }
    let r = g / 2;
    let step = d - int(1);
    let mut sum = Rational::from_integer(0);
    let mut term = Rational::from_integer(1);
    for i in 0..r {
        sum = sum.checked_add(&term).ok_or(Error::Overflow)?;
        if i + 1 < r {
            term = term.checked_mul(&step).ok_or(Error::Overflow)?;
        }
    }
    let value = if g % 2 == 1 {
        d.checked_mul(&sum).and_then(|x| x.checked_add(&int(1))).ok_or(Error::Overflow)?
    } else {
        sum.checked_mul(&int(2)).ok_or(Error::Overflow)?
    };
    Ok(BoundValue::new(value, BoundKind::Moore))
}

/// Known upper bound `n_u(d, g)` on the order of a `(d, g)`-cage, `d ≥ 3`.
pub fn cage_upper_bound(d: usize, g: usize) -> Result<BoundValue> {
    if d < 3 {
        return Err(Error::Domain("cage upper bound needs degree >= 3"));
    }
    if g < 3 {
        return Err(Error::Domain("cage upper bound needs girth >= 3"));
    }
    let value = if d == 3 {
        let head = if g % 2 == 1 { Rational::new(4, 3) } else { Rational::new(2, 3) };
        checked_pow(int(2), g - 2)?
            .checked_mul(&Rational::new(29, 12))
            .and_then(|x| x.checked_add(&head))
            .ok_or(Error::Overflow)?
    } else if g % 2 == 1 {
        checked_pow(int(d - 1), g - 2)?.checked_mul(&int(2)).ok_or(Error::Overflow)?
    } else {
        checked_pow(int(d - 1), g - 3)?.checked_mul(&int(4)).ok_or(Error::Overflow)?
    };
    Ok(BoundValue::new(value, BoundKind::CageUpper))
}

fn half_girth(girth: usize) -> Result<usize> {
    if girth % 2 == 1 || girth < 4 {
        return Err(Error::Domain("Tanner graph girth must be even and >= 4"));
    }
    Ok(girth / 2)
}

/// Bit flipping on a γ-left-regular code of girth `2g'` corrects every
/// pattern of weight below `n₀(γ/2, g')/2`. Needs `γ ≥ 4`.
pub fn ldpc_guarantee(gamma: usize, girth: usize) -> Result<BoundValue> {
    if gamma < 4 {
        return Err(Error::Domain("LDPC guarantee needs column weight >= 4"));
    }
    let g_half = half_girth(girth)?;
    let n0 = moore_bound(Rational::new(gamma as i128, 2), g_half)?;
    Ok(BoundValue::new(n0.value / int(2), BoundKind::LdpcGuarantee))
}

/// Some γ-left-regular code of girth `2g'` fails on `n_c(⌈γ/2⌉, g')` errors.
pub fn ldpc_failure_bound(gamma: usize, girth: usize) -> Result<CageOrder> {
    if gamma == 0 {
        return Err(Error::Domain("column weight must be positive"));
    }
    let g_half = half_girth(girth)?;
    Ok(cage_order(gamma.div_ceil(2), g_half))
}

/// Parallel flip-message decoding of a GLDPC code whose sub-code corrects
/// `t` errors corrects every pattern of weight below `n₀(γt/(t+1), g')`.
pub fn gldpc_guarantee(gamma: usize, t: usize, girth: usize) -> Result<BoundValue> {
    if t == 0 {
        return Err(Error::Domain("sub-code must correct at least one error"));
    }
    let d = Rational::new((gamma * t) as i128, (t + 1) as i128);
    if d < int(2) {
        return Err(Error::Domain("GLDPC guarantee needs gamma*t/(t+1) >= 2"));
    }
    let g_half = half_girth(girth)?;
    let n0 = moore_bound(d, g_half)?;
    Ok(BoundValue::new(n0.value, BoundKind::GldpcGuarantee))
}

/// Expansion fraction `(t+2)/(2(t+1))` a GLDPC Tanner graph must exceed.
pub fn gldpc_beta_threshold(t: usize) -> Rational {
    Rational::new(t as i128 + 2, 2 * (t as i128 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn moore_values() {
        for g in 3..=12 {
            assert_eq!(moore_bound(int(2), g).unwrap().value, int(g));
        }
        assert_eq!(moore_bound(int(3), 5).unwrap().value, int(10));
        assert_eq!(moore_bound(int(3), 6).unwrap().value, int(14));
        assert_eq!(moore_bound(int(4), 5).unwrap().value, int(17));
        let frac = moore_bound(r(5, 2), 5).unwrap();
        assert_eq!(frac.value, r(29, 4));
        assert_eq!(frac.floor_int, 7);
        assert!(moore_bound(r(3, 2), 5).is_err());
    }

    #[test]
    fn floor_is_strict() {
        let b = moore_bound(int(3), 5).unwrap();
        assert_eq!(b.floor_int, 9);
        assert_eq!(b.guaranteed(), 9);
    }

    #[test]
    fn cage_upper_values() {
        assert_eq!(cage_upper_bound(3, 5).unwrap().value, r(62, 3));
        assert_eq!(cage_upper_bound(4, 5).unwrap().value, int(54));
        assert_eq!(cage_upper_bound(4, 6).unwrap().value, int(108));
        assert!(cage_upper_bound(2, 5).is_err());
    }

    #[test]
    fn ldpc_guarantee_values() {
        let a = ldpc_guarantee(4, 8).unwrap();
        assert_eq!((a.value, a.floor_int), (int(2), 1));
        let b = ldpc_guarantee(4, 16).unwrap();
        assert_eq!((b.value, b.floor_int), (int(4), 3));
        let c = ldpc_guarantee(5, 10).unwrap();
        assert_eq!((c.value, c.floor_int), (r(29, 8), 3));
        assert!(ldpc_guarantee(3, 8).is_err());
        assert!(ldpc_guarantee(4, 7).is_err());
    }

    #[test]
    fn failure_bound_values() {
        assert_eq!(ldpc_failure_bound(4, 8).unwrap(), CageOrder::Exact(4));
        assert_eq!(ldpc_failure_bound(3, 12).unwrap(), CageOrder::Exact(6));
        assert_eq!(ldpc_failure_bound(6, 10).unwrap(), CageOrder::Exact(10));
    }

    #[test]
    fn gldpc_values() {
        let a = gldpc_guarantee(4, 1, 12).unwrap();
        assert_eq!((a.value, a.floor_int), (int(6), 5));
        let b = gldpc_guarantee(6, 2, 10).unwrap();
        assert_eq!((b.value, b.floor_int), (int(17), 16));
        assert!(gldpc_guarantee(3, 1, 8).is_err());
        assert_eq!(gldpc_beta_threshold(1), r(3, 4));
        assert_eq!(gldpc_beta_threshold(2), r(2, 3));
    }

    #[test]
    fn beta_decreases_to_half() {
        let mut prev = gldpc_beta_threshold(1);
        for t in 2..=100 {
            let b = gldpc_beta_threshold(t);
            assert!(b < prev && b > r(1, 2));
            prev = b;
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(cage_upper_bound(1000, 400), Err(Error::Overflow));
    }
}
