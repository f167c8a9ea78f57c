//! Finite sets of exact rationals.
//!
//! `NumberSet` keeps its elements strictly sorted and duplicate-free;
//! every constructor re-canonicalizes, so two sets are equal iff they
//! contain the same rationals.

use crate::rational::{format_rat, parse_rat, Rat};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NumberSet {
    elems: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetFileError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        source: crate::rational::ParseRatError,
    },
}

impl NumberSet {
    pub fn empty() -> Self {
        NumberSet { elems: Vec::new() }
    }

    pub fn singleton(x: Rat) -> Self {
        NumberSet { elems: vec![x] }
    }

    /// Builds the set from arbitrary elements, sorting and removing
    /// duplicates.
    pub fn from_vec(mut elems: Vec<Rat>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        NumberSet { elems }
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Self::from_vec(ints.iter().map(|&n| crate::rational::rat_int(n)).collect())
    }

    /// Assumes `elems` is already strictly increasing. Debug builds check.
    pub(crate) fn from_sorted_unchecked(elems: Vec<Rat>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        NumberSet { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.elems
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.elems.first()
    }

    pub fn max(&self) -> Option<&Rat> {
        self.elems.last()
    }

    pub fn is_subset_of(&self, other: &NumberSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn intersect(&self, other: &NumberSet) -> NumberSet {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        NumberSet::from_sorted_unchecked(
            small
                .iter()
                .filter(|x| large.contains(x))
                .cloned()
                .collect(),
        )
    }

    pub fn union(&self, other: &NumberSet) -> NumberSet {
        let mut v = self.elems.clone();
        v.extend_from_slice(&other.elems);
        NumberSet::from_vec(v)
    }

    /// Parses the set text format: one element per line, `p/q` or an
    /// integer literal, `#` starts a comment, blank lines ignored.
    pub fn parse_text(text: &str) -> Result<Self, SetFileError> {
        let mut elems = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let r = parse_rat(line).map_err(|source| SetFileError::Parse {
                line: idx + 1,
                source,
            })?;
            elems.push(r);
        }
        Ok(Self::from_vec(elems))
    }

    /// Canonical writer form: sorted, one element per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.elems {
            out.push_str(&format_rat(e));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for NumberSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rat(e))?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Rat> for NumberSet {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        Self::from_vec(iter.into_iter().collect())
    }
}

impl Serialize for NumberSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.elems.iter().map(format_rat))
    }
}

impl<'de> Deserialize<'de> for NumberSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let texts = Vec::<String>::deserialize(d)?;
        let elems = texts
            .iter()
            .map(|t| parse_rat(t).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(NumberSet::from_vec(elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn canonical_on_construction() {
        let s = NumberSet::from_vec(vec![rat_int(3), rat_int(1), rat(2, 1), rat(6, 2)]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.as_slice(), &[rat_int(1), rat_int(2), rat_int(3)]);
    }

    #[test]
    fn text_round_trip() {
        let text = "# a comment\n 1/2 \n\n-3\n7 # trailing\n2/4\n";
        let s = NumberSet::parse_text(text).unwrap();
        assert_eq!(s.as_slice(), &[rat_int(-3), rat(1, 2), rat_int(7)]);
        assert_eq!(s.to_text(), "-3\n1/2\n7\n");
        assert_eq!(NumberSet::parse_text(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = NumberSet::parse_text("1\n2\n1/0\n").unwrap_err();
        match err {
            SetFileError::Parse { line, .. } => assert_eq!(line, 3),
        }
    }

    #[test]
    fn intersect_and_subset() {
        let a = NumberSet::from_ints(&[1, 2, 3, 4]);
        let b = NumberSet::from_ints(&[3, 4, 5]);
        assert_eq!(a.intersect(&b), NumberSet::from_ints(&[3, 4]));
        assert!(NumberSet::from_ints(&[2, 4]).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
        assert!(NumberSet::empty().is_subset_of(&a));
    }
}
