use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Longest permutation representable; values are stored as `u8`.
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid token {0:?}")]
    InvalidToken(String),
    #[error("not a permutation of 1..{len}: {reason}")]
    NotAPermutation { len: usize, reason: &'static str },
    #[error("permutation longer than {MAX_LEN}")]
    TooLong,
    #[error("{0}")]
    Syntax(String),
}

/// A permutation of `{1, …, n}` in one-line notation.
///
/// The empty permutation is allowed and is the identity of the direct sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation, checking that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<u8>) -> Result<Self, ParseError> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(ParseError::TooLong);
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(ParseError::NotAPermutation { len: n, reason: "value out of range" });
            }
            if core::mem::replace(&mut seen[v], true) {
                return Err(ParseError::NotAPermutation { len: n, reason: "repeated value" });
            }
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees the permutation invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Permutation { values: (1..=n as u8).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The one-line notation, 1-based values.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    /// `π^r = π_n ⋯ π_1`.
    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    /// `π^c` with `c(x) = n + 1 − x`.
    pub fn complement(&self) -> Self {
        let n1 = self.len() as u8 + 1;
        Permutation { values: self.values.iter().map(|&v| n1 - v).collect() }
    }

    /// Group-theoretic inverse `π^{-1}`.
    pub fn inverse(&self) -> Self {
        let mut values = alloc::vec![0u8; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u8 + 1;
        }
        Permutation { values }
    }

    /// `self ⊕ other`: `other` is appended with every value shifted by `|self|`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        assert!(self.len() + other.len() <= MAX_LEN, "direct sum too long");
        let m = self.len() as u8;
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|&v| v + m));
        Permutation { values }
    }

    /// The standardisation of an arbitrary sequence of distinct values.
    pub fn standardize(seq: &[u8]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut values = alloc::vec![0u8; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u8 + 1;
        }
        Permutation::from_vec_unchecked(values)
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n).values) }
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: cur })
    }
}

fn next_lex(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Digits when `n <= 9`, comma-separated values otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    /// Accepts `"45213"` or `"10,3,1,…"`. The empty string (or `ε`) is the
    /// empty permutation.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Permutation::empty());
        }
        let mut values = Vec::new();
        if s.contains(',') {
            for tok in s.split(',') {
                let tok = tok.trim();
                let v: u8 = tok.parse().map_err(|_| ParseError::InvalidToken(tok.into()))?;
                values.push(v);
            }
        } else {
            for ch in s.chars() {
                let d = ch.to_digit(10).ok_or_else(|| ParseError::InvalidToken(ch.into()))?;
                values.push(d as u8);
            }
        }
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn direct_sum_worked_example() {
        assert_eq!(p("13425").direct_sum(&p("2431")), p("134257986"));
        assert_eq!(Permutation::empty().direct_sum(&p("312")), p("312"));
        assert_eq!(p("312").direct_sum(&Permutation::empty()), p("312"));
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("45123").reverse(), p("32154"));
        assert_eq!(p("12354").reverse().complement(), p("21345"));
        assert_eq!(p("2431").inverse(), p("4132"));
        assert_eq!(Permutation::identity(6).inverse(), Permutation::identity(6));
    }

    #[test]
    fn parse_and_display() {
        assert!("1224".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        assert!("13a".parse::<Permutation>().is_err());
        let long: Permutation = "10,3,1,2,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(p("561423").to_string(), "561423");
        assert!(p("").is_empty());
    }

    #[test]
    fn all_permutations_in_lex_order() {
        let s3: Vec<_> = Permutation::all(3).map(|q| q.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(6).count(), 720);
    }

    #[test]
    fn standardize_sequence() {
        assert_eq!(Permutation::standardize(&[5, 1, 4]), p("312"));
    }
}
