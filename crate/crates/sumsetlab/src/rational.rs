//! Exact rational scalars.
//!
//! Every quantity in this crate is an arbitrary-precision fraction in
//! canonical form: numerator and denominator coprime, denominator
//! positive. `Rat` is backed by [`num::BigRational`], which maintains
//! that canonical form on construction, so equality, ordering and
//! hashing all agree with mathematical equality of fractions.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatError {
    #[error("empty token")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or an integer literal into canonical form.
pub fn parse_rat(token: &str) -> Result<Rat, ParseRatError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(ParseRatError::Empty);
    }
    match token.split_once('/') {
        None => {
            let n = BigInt::from_str(token)
                .map_err(|_| ParseRatError::BadInteger(token.to_string()))?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim())
                .map_err(|_| ParseRatError::BadInteger(token.to_string()))?;
            let q = BigInt::from_str(q.trim())
                .map_err(|_| ParseRatError::BadInteger(token.to_string()))?;
            if q.is_zero() {
                return Err(ParseRatError::ZeroDenominator(token.to_string()));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Canonical text form: `"p/q"`, or just `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest `j` with `2^j <= r`, for `r > 0`. This is the index of the
/// dyadic interval `[2^j, 2^{j+1})` containing `r`, computed purely on
/// integers (no logarithms).
pub fn dyadic_exponent(r: &Rat) -> i64 {
    assert!(r.is_positive(), "dyadic exponent needs a positive value");
    let p = r.numer();
    let q = r.denom();
    let mut j = p.bits() as i64 - q.bits() as i64;
    // p.bits()-q.bits() is within 1 of the true exponent; fix up exactly.
    while !le_pow2(j, p, q) {
        j -= 1;
    }
    while le_pow2(j + 1, p, q) {
        j += 1;
    }
    j
}

/// Exact test `2^j <= p/q` for positive `p`, `q`.
fn le_pow2(j: i64, p: &BigInt, q: &BigInt) -> bool {
    if j >= 0 {
        q << (j as usize) <= *p
    } else {
        *q <= p << ((-j) as usize)
    }
}

/// Smallest non-negative integer `r` with `r^k >= n` (the exact value of
/// `ceil(n^(1/k))` for positive integers).
pub fn integer_root_ceil(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if n <= 1 {
        return n;
    }
    let n_big = BigInt::from(n);
    let mut lo: u64 = 1; // lo^k < n
    let mut hi: u64 = 2;
    while BigInt::from(hi).pow(k) < n_big {
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if BigInt::from(mid).pow(k) < n_big {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Exact comparison `lhs >= n^(1/k) * rhs`, i.e. `lhs^k >= n * rhs^k`,
/// over non-negative integers.
pub fn ge_root_multiple(lhs: u64, n: u64, k: u32, rhs: u64) -> bool {
    BigInt::from(lhs).pow(k) >= BigInt::from(n) * BigInt::from(rhs).pow(k)
}

/// Serde adapter: rationals as canonical `"p/q"` strings.
pub mod rat_string {
    use super::{format_rat, parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        parse_rat(&text).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Vec<Rat>`.
pub mod rat_string_vec {
    use super::{format_rat, parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rat(t).map_err(D::Error::custom))
            .collect()
    }
}

/// Sign helper: `-1`, `0` or `1` as a plain integer.
pub fn sign_of(r: &Rat) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rat("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rat("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rat(" 7 ").unwrap(), rat_int(7));
        assert_eq!(format_rat(&parse_rat("-10/4").unwrap()), "-5/2");
        assert_eq!(format_rat(&rat_int(-3)), "-3");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(matches!(
            parse_rat("1/0"),
            Err(ParseRatError::ZeroDenominator(_))
        ));
        assert!(matches!(parse_rat(""), Err(ParseRatError::Empty)));
        assert!(matches!(parse_rat("x"), Err(ParseRatError::BadInteger(_))));
    }

    #[test]
    fn dyadic_exponent_exact() {
        assert_eq!(dyadic_exponent(&rat_int(1)), 0);
        assert_eq!(dyadic_exponent(&rat_int(2)), 1);
        assert_eq!(dyadic_exponent(&rat_int(3)), 1);
        assert_eq!(dyadic_exponent(&rat_int(4)), 2);
        assert_eq!(dyadic_exponent(&rat(3, 2)), 0);
        assert_eq!(dyadic_exponent(&rat(1, 2)), -1);
        assert_eq!(dyadic_exponent(&rat(1, 3)), -2);
        assert_eq!(dyadic_exponent(&rat(7, 8)), -1);
        assert_eq!(dyadic_exponent(&rat_int(1024)), 10);
        assert_eq!(dyadic_exponent(&rat(1023, 1024)), -1);
    }

    #[test]
    fn integer_roots() {
        assert_eq!(integer_root_ceil(27, 3), 3);
        assert_eq!(integer_root_ceil(28, 3), 4);
        assert_eq!(integer_root_ceil(26, 3), 3);
        assert_eq!(integer_root_ceil(1, 5), 1);
        assert_eq!(integer_root_ceil(0, 5), 0);
        assert_eq!(integer_root_ceil(32, 5), 2);
        assert_eq!(integer_root_ceil(33, 5), 3);
        // ceil(16^(1/9)) = 2 since 1^9 < 16 <= 2^9
        assert_eq!(integer_root_ceil(16, 9), 2);
    }
}
