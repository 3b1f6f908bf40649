//! Counting `|Av_n(S)|` on the generating tree obtained by inserting a new
//! maximum into every gap.
//!
//! Deleting the maximum of an avoider leaves an avoider, so every avoider of
//! length `n` has exactly one parent of length `n − 1`. A child can only
//! contain a pattern through the new maximum, which must then play the
//! pattern's own maximum; the matcher is pinned accordingly.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::pattern::{Constraint, Matcher};
use crate::set::PatternSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("count overflowed 64 bits at n = {n}")]
    Overflow { n: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Depth-first above [`AUTO_DEPTH_FIRST_ABOVE`], breadth-first otherwise.
    #[default]
    Auto,
    /// Keeps the whole frontier of one length in memory.
    BreadthFirst,
    /// Streams the tree with one word per depth.
    DepthFirst,
}

pub const AUTO_DEPTH_FIRST_ABOVE: usize = 10;

/// The generating tree of `Av(S)`.
#[derive(Clone, Debug)]
pub struct AvoidanceTree {
    matchers: Vec<Matcher>,
}

impl AvoidanceTree {
    pub fn new(set: &PatternSet) -> Self {
        AvoidanceTree { matchers: set.matchers() }
    }

    /// Would inserting the new maximum at gap `g` of `w` create an occurrence?
    fn blocked(&self, w: &[u8], g: usize) -> bool {
        self.matchers
            .iter()
            .any(|m| m.contains(w, Constraint { cap: u8::MAX, pin: Some((m.max_position(), g)) }))
    }

    /// Children of the avoider `w`, in gap order.
    pub fn children(&self, w: &[u8]) -> Vec<Vec<u8>> {
        let top = w.len() as u8 + 1;
        let mut out = Vec::new();
        let mut child = Vec::with_capacity(w.len() + 1);
        for g in 0..=w.len() {
            child.clear();
            child.extend_from_slice(&w[..g]);
            child.push(top);
            child.extend_from_slice(&w[g..]);
            if !self.blocked(&child, g) {
                out.push(child.clone());
            }
        }
        out
    }

    /// All avoiders of length `n`, in tree order.
    pub fn level(&self, n: usize) -> Vec<Vec<u8>> {
        let mut frontier = vec![Vec::new()];
        for _ in 0..n {
            frontier = frontier.iter().flat_map(|w| self.children(w)).collect();
        }
        frontier
    }

    /// Counts of descendants of `root` (itself included) by length, for
    /// lengths `0..=n_max`. Lengths below `root.len()` are 0.
    pub fn subtree_counts(&self, root: &[u8], n_max: usize, strategy: Strategy) -> Result<Vec<u64>, CountError> {
        let mut counts = vec![0u64; n_max + 1];
        if root.len() > n_max {
            return Ok(counts);
        }
        let depth_first = match strategy {
            Strategy::Auto => n_max > AUTO_DEPTH_FIRST_ABOVE,
            Strategy::BreadthFirst => false,
            Strategy::DepthFirst => true,
        };
        if depth_first {
            let mut w = root.to_vec();
            self.dfs(&mut w, n_max, &mut counts)?;
        } else {
            let mut frontier = vec![root.to_vec()];
            for n in root.len()..=n_max {
                counts[n] = frontier.len() as u64;
                if n < n_max {
                    frontier = frontier.iter().flat_map(|w| self.children(w)).collect();
                }
            }
        }
        Ok(counts)
    }

    fn dfs(&self, w: &mut Vec<u8>, n_max: usize, counts: &mut [u64]) -> Result<(), CountError> {
        let n = w.len();
        counts[n] = counts[n].checked_add(1).ok_or(CountError::Overflow { n })?;
        if n == n_max {
            return Ok(());
        }
        let top = n as u8 + 1;
        for g in 0..=n {
            w.insert(g, top);
            if !self.blocked(w, g) {
                self.dfs(w, n_max, counts)?;
            }
            w.remove(g);
        }
        Ok(())
    }
}

/// `|Av_n(S)|` for every `n` in `0..=n_max`.
pub fn count_terms(set: &PatternSet, n_max: usize, strategy: Strategy) -> Result<Vec<u64>, CountError> {
    AvoidanceTree::new(set).subtree_counts(&[], n_max, strategy)
}

/// `|Av_n(S)|`.
pub fn count_avoiders(set: &PatternSet, n: usize) -> Result<u64, CountError> {
    Ok(count_terms(set, n, Strategy::Auto)?[n])
}

/// Adds per-length counts, detecting overflow.
pub fn add_counts(acc: &mut [u64], other: &[u64]) -> Result<(), CountError> {
    for (n, (a, b)) in acc.iter_mut().zip(other).enumerate() {
        *a = a.checked_add(*b).ok_or(CountError::Overflow { n })?;
    }
    Ok(())
}

/// `|Av_n(S)|` for `n = 1, 2, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSequence {
    pub set: PatternSet,
    /// `terms[0]` is the count for `n = 1`.
    pub terms: Vec<u64>,
}

impl CountSequence {
    pub fn compute(set: &PatternSet, n_max: usize) -> Result<Self, CountError> {
        let terms = count_terms(set, n_max, Strategy::Auto)?;
        Ok(CountSequence::from_terms_from_zero(set.clone(), &terms))
    }

    /// Drops the `n = 0` entry of a `0..=n_max` table.
    pub fn from_terms_from_zero(set: PatternSet, terms: &[u64]) -> Self {
        CountSequence { set, terms: terms.iter().skip(1).copied().collect() }
    }

    /// The count for length `n >= 1`.
    pub fn term(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.terms.get(i).copied())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
