use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::pattern::{Constraint, Matcher, MAX_PATTERN_LEN};
use crate::perm::{ParseError, Permutation};

/// A finite set of classical patterns, possibly of mixed lengths.
///
/// Ordering (used for canonical symmetry classes) is lexicographic on the
/// sorted member lists, members compared lexicographically as words.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self, ParseError> {
        let patterns: BTreeSet<_> = patterns.into_iter().collect();
        for p in &patterns {
            if p.is_empty() {
                return Err(ParseError::Syntax("patterns must be nonempty".to_string()));
            }
            if p.len() > MAX_PATTERN_LEN {
                return Err(ParseError::TooLong);
            }
        }
        Ok(PatternSet { patterns })
    }

    pub fn empty() -> Self {
        PatternSet::default()
    }

    pub fn singleton(p: Permutation) -> Self {
        assert!(!p.is_empty() && p.len() <= MAX_PATTERN_LEN);
        let mut patterns = BTreeSet::new();
        patterns.insert(p);
        PatternSet { patterns }
    }

    pub(crate) fn from_set_unchecked(patterns: BTreeSet<Permutation>) -> Self {
        PatternSet { patterns }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.patterns.iter()
    }

    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        self.patterns.contains(p)
    }

    /// Length of the shortest member, if any.
    pub fn min_len(&self) -> Option<usize> {
        self.patterns.iter().map(Permutation::len).min()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.patterns.iter().map(Permutation::len).max()
    }

    fn map(&self, f: impl Fn(&Permutation) -> Permutation) -> Self {
        PatternSet { patterns: self.patterns.iter().map(f).collect() }
    }

    /// `S^r`
    pub fn reverse(&self) -> Self {
        self.map(Permutation::reverse)
    }

    /// `S^c`
    pub fn complement(&self) -> Self {
        self.map(Permutation::complement)
    }

    /// `S^i`
    pub fn inverse(&self) -> Self {
        self.map(Permutation::inverse)
    }

    /// `S_1 ⊕ S_2 = {s_1 ⊕ s_2}`.
    pub fn direct_sum(&self, other: &PatternSet) -> Self {
        let mut patterns = BTreeSet::new();
        for a in &self.patterns {
            for b in &other.patterns {
                patterns.insert(a.direct_sum(b));
            }
        }
        PatternSet { patterns }
    }

    pub fn union(&self, other: &PatternSet) -> Self {
        PatternSet { patterns: self.patterns.union(&other.patterns).cloned().collect() }
    }

    /// Compiled matchers, one per member.
    pub fn matchers(&self) -> Vec<Matcher> {
        self.patterns.iter().map(Matcher::new).collect()
    }

    /// True iff no member occurs in `w`.
    pub fn avoided_by(&self, w: &Permutation) -> bool {
        self.patterns
            .iter()
            .all(|p| !Matcher::new(p).contains(w.values(), Constraint::default()))
    }
}

/// True iff no pattern of `set` occurs in `w`.
pub fn avoids_all(set: &PatternSet, w: &Permutation) -> bool {
    set.avoided_by(w)
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let long = self.patterns.iter().any(|p| p.len() > 9);
        let sep = if long { ";" } else { "," };
        f.write_str("{")?;
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

impl FromStr for PatternSet {
    type Err = ParseError;

    /// `"12345,12354"`, `"{123, 213}"`, or `;`-separated members when a
    /// member needs the comma notation (`"10,1,2,…;21"`). `"{}"` is empty.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut s = s.trim();
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            s = inner.trim();
        }
        if s.is_empty() || s == "∅" {
            return Ok(PatternSet::empty());
        }
        let members: Vec<Permutation> = if s.contains(';') {
            s.split(';').map(|t| t.parse()).collect::<Result<_, _>>()?
        } else {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse())
                .collect::<Result<_, _>>()?
        };
        PatternSet::new(members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn set_semantics() {
        assert_eq!(set("12354,12345,12345"), set("{12345, 12354}"));
        assert_eq!(set("12345,12354").len(), 2);
        assert_eq!(set("{}").len(), 0);
        assert_eq!(set("312,21").to_string(), "{21,312}");
    }

    #[test]
    fn set_symmetries() {
        assert_eq!(set("45123,45213").reverse(), set("32154,31254"));
        assert_eq!(set("12345,12354").reverse().complement(), set("12345,21345"));
    }

    #[test]
    fn set_direct_sum() {
        assert_eq!(set("123,213").direct_sum(&set("12")), set("12345,21345"));
        assert_eq!(set("12,21").direct_sum(&set("321")), set("12543,21543"));
    }

    #[test]
    fn avoidance() {
        let s = set("12345,12354");
        for w in Permutation::all(4) {
            assert!(avoids_all(&s, &w));
        }
        assert!(!avoids_all(&s, &"12345".parse().unwrap()));
        assert!(!avoids_all(&set("312,321,231"), &"41523".parse().unwrap()));
        assert!(avoids_all(&PatternSet::empty(), &"41523".parse().unwrap()));
    }
}
