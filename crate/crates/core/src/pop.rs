//! Partially ordered patterns.
//!
//! A POP of size `k` is a strict partial order on the positions `1..=k`. An
//! occurrence in `w` is an index tuple `i_1 < … < i_k` with `w[i_a] < w[i_b]`
//! whenever `a <_P b`; incomparable positions are unconstrained.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::pattern::MAX_PATTERN_LEN;
use crate::perm::Permutation;
use crate::set::PatternSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PopError {
    #[error("POP size must be in 1..={MAX_PATTERN_LEN}, got {0}")]
    Size(usize),
    #[error("position {0} out of range")]
    Position(usize),
    #[error("relation contains a cycle through position {0}")]
    Cycle(usize),
    #[error("malformed POP notation: {0}")]
    Syntax(alloc::string::String),
}

/// A strict partial order on positions, stored transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pop {
    size: usize,
    /// Bit `a` of `less[b]` is set iff `a <_P b` (0-based positions).
    less: Vec<u32>,
}

impl Pop {
    /// Builds a POP from generator pairs `(a, b)` meaning `a <_P b`, 1-based.
    /// The transitive closure is computed here; cycles are rejected.
    pub fn new(size: usize, generators: &[(usize, usize)]) -> Result<Self, PopError> {
        if size == 0 || size > MAX_PATTERN_LEN {
            return Err(PopError::Size(size));
        }
        let mut less = alloc::vec![0u32; size];
        for &(a, b) in generators {
            for x in [a, b] {
                if x == 0 || x > size {
                    return Err(PopError::Position(x));
                }
            }
            less[b - 1] |= 1 << (a - 1);
        }
        // Warshall: if a < m and m < b then a < b.
        for m in 0..size {
            for b in 0..size {
                if less[b] & (1 << m) != 0 {
                    less[b] |= less[m];
                }
            }
        }
        for x in 0..size {
            if less[x] & (1 << x) != 0 {
                return Err(PopError::Cycle(x + 1));
            }
        }
        Ok(Pop { size, less })
    }

    /// The chain realising a classical pattern: `a <_P b` iff `p_a < p_b`.
    pub fn from_pattern(p: &Permutation) -> Self {
        let v = p.values();
        let mut gens = Vec::new();
        for a in 0..v.len() {
            for b in 0..v.len() {
                if v[a] < v[b] {
                    gens.push((a + 1, b + 1));
                }
            }
        }
        Pop::new(v.len(), &gens).expect("a permutation induces a total order")
    }

    /// The chain `1 < 2 < … < k`.
    pub fn chain(k: usize) -> Self {
        Pop::from_pattern(&Permutation::identity(k))
    }

    pub fn antichain(k: usize) -> Self {
        Pop::new(k, &[]).expect("valid size")
    }

    /// Position `top` lies above every other position, nothing else is related.
    pub fn single_max(k: usize, top: usize) -> Result<Self, PopError> {
        if top == 0 || top > k {
            return Err(PopError::Position(top));
        }
        let gens: Vec<_> = (1..=k).filter(|&j| j != top).map(|j| (j, top)).collect();
        Pop::new(k, &gens)
    }

    /// Position `bottom` lies below every other position, nothing else is related.
    pub fn single_min(k: usize, bottom: usize) -> Result<Self, PopError> {
        if bottom == 0 || bottom > k {
            return Err(PopError::Position(bottom));
        }
        let gens: Vec<_> = (1..=k).filter(|&j| j != bottom).map(|j| (bottom, j)).collect();
        Pop::new(k, &gens)
    }

    /// Position `k` below positions `1..k-1`: avoiders have no entry with
    /// `k - 1` larger entries to its left.
    pub fn last_below_all(k: usize) -> Self {
        Pop::single_min(k, k).expect("k >= 1")
    }

    /// The 3-position valley: position 2 below positions 1 and 3, i.e. `{213, 312}`.
    pub fn valley() -> Self {
        Pop::single_min(3, 2).expect("valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `a <_P b`, 1-based.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[b - 1] & (1 << (a - 1)) != 0
    }

    /// The closed relation as sorted 1-based pairs.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.size {
            for b in 1..=self.size {
                if self.less(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Covering pairs of the order (the Hasse diagram edges).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !(1..=self.size).any(|m| self.less(a, m) && self.less(m, b)))
            .collect()
    }

    /// `{σ ∈ S_k : σ_a < σ_b for every a <_P b}`.
    pub fn to_pattern_set(&self) -> PatternSet {
        let rel = self.relations();
        let members: BTreeSet<_> = Permutation::all(self.size)
            .filter(|s| {
                let v = s.values();
                rel.iter().all(|&(a, b)| v[a - 1] < v[b - 1])
            })
            .collect();
        PatternSet::from_set_unchecked(members)
    }

    pub fn occurrences(&self, w: &Permutation) -> u64 {
        let mut count = 0u64;
        self.walk(w.values(), 0, 0, &mut [0usize; MAX_PATTERN_LEN], &mut |_| {
            count += 1;
            false
        });
        count
    }

    pub fn occurs_in(&self, w: &Permutation) -> bool {
        self.walk(w.values(), 0, 0, &mut [0usize; MAX_PATTERN_LEN], &mut |_| true)
    }

    fn walk<F: FnMut(&[usize]) -> bool>(
        &self,
        w: &[u8],
        b: usize,
        start: usize,
        idx: &mut [usize; MAX_PATTERN_LEN],
        visit: &mut F,
    ) -> bool {
        let k = self.size;
        if b == k {
            return visit(&idx[..k]);
        }
        if w.len() < k || start > w.len() - (k - b) {
            return false;
        }
        let mut lo = 0u8;
        let mut hi = u8::MAX;
        for a in 0..b {
            let va = w[idx[a]];
            if self.less[b] & (1 << a) != 0 {
                lo = lo.max(va);
            }
            if self.less[a] & (1 << b) != 0 {
                hi = hi.min(va);
            }
        }
        for i in start..=w.len() - (k - b) {
            let v = w[i];
            if v <= lo || v >= hi {
                continue;
            }
            idx[b] = i;
            if self.walk(w, b + 1, i + 1, idx, visit) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for Pop {
    /// `"k; a<b, c<d"` listing the covering relations.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.size)?;
        for (i, (a, b)) in self.covers().into_iter().enumerate() {
            write!(f, "{}{a}<{b}", if i == 0 { " " } else { ", " })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pop({self})")
    }
}

impl FromStr for Pop {
    type Err = PopError;

    /// `"3; 3<1"`, `"5; 1<2, 2<3"`; `a>b` is accepted as `b<a`.
    fn from_str(s: &str) -> Result<Self, PopError> {
        let syntax = |m: &str| PopError::Syntax(m.to_string());
        let (size, rest) = match s.split_once(';') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        let size: usize = size.trim().parse().map_err(|_| syntax("expected size before ';'"))?;
        let mut gens = Vec::new();
        for rel in rest.split(',').map(str::trim).filter(|r| !r.is_empty()) {
            let (a, b, flip) = if let Some((a, b)) = rel.split_once('<') {
                (a, b, false)
            } else if let Some((a, b)) = rel.split_once('>') {
                (a, b, true)
            } else {
                return Err(syntax(rel));
            };
            let a: usize = a.trim().parse().map_err(|_| syntax(rel))?;
            let b: usize = b.trim().parse().map_err(|_| syntax(rel))?;
            gens.push(if flip { (b, a) } else { (a, b) });
        }
        Pop::new(size, &gens)
    }
}

/// A POP with one apex above all other positions and no other relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FanPop {
    size: usize,
    apex: usize,
}

impl FanPop {
    pub fn new(size: usize, apex: usize) -> Result<Self, PopError> {
        if size == 0 || size > MAX_PATTERN_LEN {
            return Err(PopError::Size(size));
        }
        if apex == 0 || apex > size {
            return Err(PopError::Position(apex));
        }
        Ok(FanPop { size, apex })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 1-based apex position.
    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn to_pop(&self) -> Pop {
        Pop::single_max(self.size, self.apex).expect("validated")
    }

    pub fn patterns(&self) -> PatternSet {
        self.to_pop().to_pattern_set()
    }

    /// Recognises a pattern set equal to some fan's set.
    pub fn from_pattern_set(set: &PatternSet) -> Option<Self> {
        let k = set.max_len()?;
        if set.min_len() != Some(k) {
            return None;
        }
        (1..=k).map(|a| FanPop { size: k, apex: a }).find(|f| f.patterns() == *set)
    }
}
