//! Exact set calculus: sumsets, difference/product/quotient sets,
//! iterated folds and additive energy.
//!
//! All operations are pure functions on immutable `NumberSet` values and
//! compute exact answers; the only failure modes are the typed errors
//! below (element cap, division by zero).

use crate::rational::Rat;
use crate::set::NumberSet;
use num::{BigUint, One, Signed, Zero};
use std::collections::HashMap;

/// Default guard on intermediate sumset buffers (number of candidate
/// elements materialized by one pairwise operation).
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetCalcError {
    #[error("element cap exceeded: needed {needed}, cap {cap}")]
    CapExceeded { needed: u64, cap: u64 },
    #[error("division by zero: 0 is an element of the divisor set")]
    DivisionByZero,
}

fn pairwise(
    a: &NumberSet,
    b: &NumberSet,
    cap: u64,
    op: impl Fn(&Rat, &Rat) -> Rat,
) -> Result<NumberSet, SetCalcError> {
    let needed = a.len() as u64 * b.len() as u64;
    if needed > cap {
        return Err(SetCalcError::CapExceeded { needed, cap });
    }
    let mut out = Vec::with_capacity(needed as usize);
    for x in a.iter() {
        for y in b.iter() {
            out.push(op(x, y));
        }
    }
    Ok(NumberSet::from_vec(out))
}

/// `A + B = { a + b : a in A, b in B }`.
pub fn sumset(a: &NumberSet, b: &NumberSet) -> NumberSet {
    pairwise(a, b, u64::MAX, |x, y| x + y).unwrap()
}

pub fn sumset_capped(a: &NumberSet, b: &NumberSet, cap: u64) -> Result<NumberSet, SetCalcError> {
    pairwise(a, b, cap, |x, y| x + y)
}

/// `A - B = { a - b : a in A, b in B }`.
pub fn difference_set(a: &NumberSet, b: &NumberSet) -> NumberSet {
    pairwise(a, b, u64::MAX, |x, y| x - y).unwrap()
}

pub fn difference_set_capped(
    a: &NumberSet,
    b: &NumberSet,
    cap: u64,
) -> Result<NumberSet, SetCalcError> {
    pairwise(a, b, cap, |x, y| x - y)
}

/// `A . B = { a * b : a in A, b in B }`.
pub fn product_set(a: &NumberSet, b: &NumberSet) -> NumberSet {
    pairwise(a, b, u64::MAX, |x, y| x * y).unwrap()
}

/// `A / B = { a / b }`; fails if `0 in B`.
pub fn quotient_set(a: &NumberSet, b: &NumberSet) -> Result<NumberSet, SetCalcError> {
    if b.contains(&Rat::zero()) {
        return Err(SetCalcError::DivisionByZero);
    }
    pairwise(a, b, u64::MAX, |x, y| x / y)
}

/// `{ lambda * a : a in A }`.
pub fn dilate(a: &NumberSet, lambda: &Rat) -> NumberSet {
    NumberSet::from_vec(a.iter().map(|x| x * lambda).collect())
}

/// `{ a + tau : a in A }`.
pub fn translate(a: &NumberSet, tau: &Rat) -> NumberSet {
    // Translation preserves order, no re-sort needed.
    NumberSet::from_sorted_unchecked(a.iter().map(|x| x + tau).collect())
}

/// `hA`, the h-fold iterated sumset, computed by a left fold of pairwise
/// sumsets with dedup after every step. `h >= 1`.
pub fn hfold_sum(a: &NumberSet, h: u32, cap: u64) -> Result<NumberSet, SetCalcError> {
    assert!(h >= 1, "hfold_sum needs h >= 1");
    let mut acc = a.clone();
    for _ in 1..h {
        acc = sumset_capped(&acc, a, cap)?;
    }
    Ok(acc)
}

/// `A^(h)`, the h-fold product set. `h >= 1`.
pub fn hfold_product(a: &NumberSet, h: u32, cap: u64) -> Result<NumberSet, SetCalcError> {
    assert!(h >= 1, "hfold_product needs h >= 1");
    let mut acc = a.clone();
    for _ in 1..h {
        acc = pairwise(&acc, a, cap, |x, y| x * y)?;
    }
    Ok(acc)
}

/// `kA - lA`, with a 0-fold operand standing for `{0}`. `k + l >= 1`.
pub fn signed_fold(a: &NumberSet, k: u32, l: u32, cap: u64) -> Result<NumberSet, SetCalcError> {
    assert!(k + l >= 1, "signed_fold needs k + l >= 1");
    let zero = NumberSet::singleton(Rat::zero());
    let pos = if k == 0 { zero.clone() } else { hfold_sum(a, k, cap)? };
    let neg = if l == 0 { zero } else { hfold_sum(a, l, cap)? };
    pairwise(&pos, &neg, cap, |x, y| x - y)
}

/// Exact additive energy count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyCount {
    pub value: BigUint,
}

/// `E(A,B) = #{(a,b,a',b') : a+b = a'+b'}`, computed as the sum of
/// squared representation counts over `A + B`.
pub fn additive_energy(a: &NumberSet, b: &NumberSet) -> EnergyCount {
    let mut reps: HashMap<Rat, u64> = HashMap::new();
    for x in a.iter() {
        for y in b.iter() {
            *reps.entry(x + y).or_insert(0) += 1;
        }
    }
    let mut value = BigUint::zero();
    for count in reps.values() {
        let c = BigUint::from(*count);
        value += &c * &c;
    }
    EnergyCount { value }
}

/// Exact check of the inequality `|X+Y| * |(X-X) ∩ (Y-Y)| >= |X| * |Y|`,
/// returning the three sizes involved. The equality case
/// `|X+Y| = |X||Y|` holds whenever the difference-set intersection is
/// `{0}`.
pub fn easy_intersection_sizes(x: &NumberSet, y: &NumberSet) -> (usize, usize, usize) {
    let sum = sumset(x, y);
    let overlap = difference_set(x, x).intersect(&difference_set(y, y));
    (sum.len(), overlap.len(), x.len() * y.len())
}

/// `|A+A| / |A|` as an exact rational (the doubling constant used by
/// the Plünnecke-Ruzsa bound).
pub fn doubling_ratio(a: &NumberSet) -> Option<Rat> {
    if a.is_empty() {
        return None;
    }
    let s = sumset(a, a);
    Some(Rat::new(
        num::BigInt::from(s.len() as u64),
        num::BigInt::from(a.len() as u64),
    ))
}

/// Checks `|kA - lA| <= (|A+A|/|A|)^(k+l) * |A|` as an exact rational
/// comparison. Returns `(holds, lhs, rhs)`.
pub fn pluennecke_ruzsa_check(a: &NumberSet, k: u32, l: u32, cap: u64) -> (bool, u64, Rat) {
    let c = doubling_ratio(a).expect("non-empty set");
    let lhs = signed_fold(a, k, l, cap).expect("within cap").len() as u64;
    let rhs = c.pow((k + l) as i32) * Rat::from_integer(num::BigInt::from(a.len() as u64));
    let holds = Rat::from_integer(num::BigInt::from(lhs)) <= rhs;
    (holds, lhs, rhs)
}

impl EnergyCount {
    /// The Cauchy-Schwarz floor `ceil(|A|^2 |B|^2 / |A+B|)`.
    pub fn cauchy_schwarz_floor(a: &NumberSet, b: &NumberSet) -> BigUint {
        if a.is_empty() || b.is_empty() {
            return BigUint::zero();
        }
        let sum = sumset(a, b).len();
        let num = BigUint::from(a.len()) * BigUint::from(a.len()) * BigUint::from(b.len())
            * BigUint::from(b.len());
        let den = BigUint::from(sum);
        // ceil division
        (&num + &den - BigUint::one()) / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn gp2(n: usize) -> NumberSet {
        NumberSet::from_vec((0..n).map(|i| rat_int(1i64 << i)).collect())
    }

    #[test]
    fn sumset_basic() {
        let a = NumberSet::from_ints(&[1, 2]);
        let b = NumberSet::from_ints(&[10, 20]);
        assert_eq!(sumset(&a, &b), NumberSet::from_ints(&[11, 12, 21, 22]));
        // {0} is the additive identity
        let zero = NumberSet::from_ints(&[0]);
        assert_eq!(sumset(&zero, &b), b);
        // GP(2,4): 16 pairs dedup to 10 distinct sums
        assert_eq!(sumset(&gp2(4), &gp2(4)).len(), 10);
        // empty convention
        assert!(sumset(&a, &NumberSet::empty()).is_empty());
    }

    #[test]
    fn difference_basic() {
        let a = NumberSet::from_ints(&[1, 2]);
        assert_eq!(difference_set(&a, &a), NumberSet::from_ints(&[-1, 0, 1]));
        assert!(difference_set(&a, &NumberSet::empty()).is_empty());
        let sq = NumberSet::from_ints(&[1, 4, 9]);
        assert_eq!(
            difference_set(&sq, &sq),
            NumberSet::from_ints(&[-8, -5, -3, 0, 3, 5, 8])
        );
    }

    #[test]
    fn product_and_quotient() {
        let a = gp2(4);
        let p = product_set(&a, &a);
        assert_eq!(p.len(), 7); // 2n-1 for a GP
        assert_eq!(*p.max().unwrap(), rat_int(64));
        let one = NumberSet::from_ints(&[1]);
        assert_eq!(product_set(&one, &a), a);
        let zero = NumberSet::from_ints(&[0]);
        assert_eq!(product_set(&zero, &a), zero);

        let t = NumberSet::from_ints(&[1, 2, 4]);
        let q = quotient_set(&t, &t).unwrap();
        assert_eq!(
            q,
            NumberSet::from_vec(vec![rat(1, 4), rat(1, 2), rat_int(1), rat_int(2), rat_int(4)])
        );
        assert_eq!(quotient_set(&a, &one).unwrap(), a);
        assert_eq!(
            quotient_set(&one, &NumberSet::from_ints(&[0, 1])),
            Err(SetCalcError::DivisionByZero)
        );
    }

    #[test]
    fn hfold_examples() {
        let zo = NumberSet::from_ints(&[0, 1]);
        for h in 1..=6u32 {
            let s = hfold_sum(&zo, h, DEFAULT_CAP).unwrap();
            assert_eq!(s.len(), h as usize + 1);
        }
        // GP(2,5) pair sums are all distinct: 15 = 5*6/2
        assert_eq!(hfold_sum(&gp2(5), 2, DEFAULT_CAP).unwrap().len(), 15);
        // GP(2,4) 3-fold: 20 multisets minus 3 collisions
        assert_eq!(hfold_sum(&gp2(4), 3, DEFAULT_CAP).unwrap().len(), 17);

        assert_eq!(
            hfold_product(&NumberSet::from_ints(&[1, 2]), 3, DEFAULT_CAP).unwrap(),
            NumberSet::from_ints(&[1, 2, 4, 8])
        );
        assert_eq!(hfold_product(&gp2(3), 1, DEFAULT_CAP).unwrap(), gp2(3));
        assert_eq!(
            hfold_product(&zo, 2, DEFAULT_CAP).unwrap(),
            NumberSet::from_ints(&[0, 1])
        );
    }

    #[test]
    fn signed_fold_examples() {
        let a = NumberSet::from_ints(&[0, 1, 2]);
        assert_eq!(
            signed_fold(&a, 2, 1, DEFAULT_CAP).unwrap(),
            NumberSet::from_ints(&[-2, -1, 0, 1, 2, 3, 4])
        );
        assert_eq!(signed_fold(&a, 1, 0, DEFAULT_CAP).unwrap(), a);
        assert_eq!(
            signed_fold(&NumberSet::from_ints(&[0, 1]), 1, 1, DEFAULT_CAP).unwrap(),
            NumberSet::from_ints(&[-1, 0, 1])
        );
    }

    #[test]
    fn cap_is_enforced() {
        let a = NumberSet::from_ints(&[0, 1, 2, 3, 4]);
        let err = hfold_sum(&a, 3, 20).unwrap_err();
        assert!(matches!(err, SetCalcError::CapExceeded { .. }));
    }

    #[test]
    fn energy_examples() {
        let t = NumberSet::from_ints(&[1, 2, 3]);
        assert_eq!(additive_energy(&t, &t).value, BigUint::from(19u32));
        let x = NumberSet::from_ints(&[5]);
        let y = NumberSet::from_ints(&[7]);
        assert_eq!(additive_energy(&x, &y).value, BigUint::from(1u32));
    }

    #[test]
    fn dilate_translate() {
        let a = NumberSet::from_ints(&[1, 2]);
        assert_eq!(dilate(&a, &rat_int(3)), NumberSet::from_ints(&[3, 6]));
        assert_eq!(dilate(&a, &rat_int(1)), a);
        assert_eq!(dilate(&a, &rat_int(-1)), NumberSet::from_ints(&[-2, -1]));
        assert_eq!(
            translate(&NumberSet::from_ints(&[-1, 0, 1]), &rat_int(5)),
            NumberSet::from_ints(&[4, 5, 6])
        );
    }
}
