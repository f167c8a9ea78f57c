//! Sparse integer-coefficient polynomials and exact order of vanishing
//! at `x = 1`.
//!
//! The polynomials this crate builds from Tarry-Escott solutions carry
//! only coefficients in `{-1, +1}`; the representation is kept general
//! (arbitrary integers) because synthetic-division quotients are not
//! sign-restricted.

use crate::rational::Rat;
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial has no vanishing order")]
    ZeroPolynomial,
}

/// Sparse polynomial: exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedPolynomial {
    terms: BTreeMap<u64, BigInt>,
}

impl SignedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms(vec![(0, 1)])
    }

    /// `x^e`.
    pub fn monomial(e: u64) -> Self {
        Self::from_terms(vec![(e, 1)])
    }

    /// `x - 1`.
    pub fn x_minus_one() -> Self {
        Self::from_terms(vec![(1, 1), (0, -1)])
    }

    pub fn from_terms(terms: Vec<(u64, i64)>) -> Self {
        let mut map: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += BigInt::from(c);
        }
        map.retain(|_, c| !c.is_zero());
        SignedPolynomial { terms: map }
    }

    pub fn from_big_terms(terms: Vec<(u64, BigInt)>) -> Self {
        let mut map: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        SignedPolynomial { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn coefficient(&self, e: u64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().map_or(false, |c| c.is_one())
    }

    /// All stored coefficients in `{-1, +1}`.
    pub fn is_signed(&self) -> bool {
        self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn negate(&self) -> Self {
        SignedPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Negates the whole polynomial when the leading coefficient is -1;
    /// the order of vanishing is unaffected.
    pub fn monic_normalized(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) if c.is_negative() => self.negate(),
            _ => self.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let entry = map.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        map.retain(|_, c| !c.is_zero());
        SignedPolynomial { terms: map }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        // Horner over the sparse exponent gaps, highest power first.
        let mut acc = Rat::zero();
        let mut prev_exp: Option<u64> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev_exp {
                acc *= pow_rat(x, p - e);
            }
            acc += Rat::from_integer(c.clone());
            prev_exp = Some(*e);
        }
        if let Some(p) = prev_exp {
            acc *= pow_rat(x, p);
        }
        acc
    }

    /// `p(1)`: the plain coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient on division by `(x - 1)`; `None` if the remainder
    /// `p(1)` is nonzero.
    pub fn divide_by_x_minus_one(&self) -> Option<Self> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Synthetic division at root 1: quotient coefficients are the
        // running suffix sums of the dense coefficient vector.
        let deg = self.degree().unwrap();
        let mut quotient: Vec<(u64, BigInt)> = Vec::new();
        let mut carry = BigInt::zero();
        let mut prev_exp = deg + 1;
        for (e, c) in self.terms.iter().rev() {
            // carry is constant across the zero-coefficient gap
            if !carry.is_zero() {
                for exp in (*e..prev_exp.saturating_sub(1)).rev() {
                    quotient.push((exp, carry.clone()));
                }
            }
            carry += c;
            if *e > 0 && !carry.is_zero() {
                quotient.push((e - 1, carry.clone()));
            }
            prev_exp = *e;
        }
        debug_assert!(carry.is_zero(), "remainder must be zero");
        Some(Self::from_big_terms(quotient))
    }

    /// Largest `m` such that `(x-1)^m` divides the polynomial, computed
    /// by repeated exact synthetic division.
    pub fn vanishing_order(&self) -> Result<u32, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut order = 0u32;
        let mut current = self.clone();
        while let Some(q) = current.divide_by_x_minus_one() {
            order += 1;
            current = q;
        }
        Ok(order)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::from_big_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(*e)))
                .collect(),
        )
    }

    /// Vanishing order by the derivative test: the number of successive
    /// derivatives (starting from the polynomial itself) that vanish at
    /// `x = 1`. Kept as an independent oracle for the division route.
    pub fn vanishing_order_by_derivatives(&self) -> Result<u32, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut order = 0u32;
        let mut current = self.clone();
        while current.eval_at_one().is_zero() {
            order += 1;
            current = current.derivative();
        }
        Ok(order)
    }
}

fn pow_rat(x: &Rat, e: u64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut acc = Rat::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl fmt::Display for SignedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}x", mag)?,
                (_, true) => write!(f, "x^{}", e)?,
                (_, false) => write!(f, "{}x^{}", mag, e)?,
            }
        }
        Ok(())
    }
}
