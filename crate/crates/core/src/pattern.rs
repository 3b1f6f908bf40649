//! Classical pattern occurrences.
//!
//! The search picks indices `i_1 < … < i_k` left to right. For every pattern
//! position we precompute the earlier positions holding its nearest smaller and
//! nearest larger value, so a candidate only has to be compared against two
//! already chosen entries to keep the partial subsequence order-isomorphic to
//! the pattern prefix.

use alloc::vec::Vec;

use crate::perm::Permutation;

/// Longest pattern the matcher accepts.
pub const MAX_PATTERN_LEN: usize = 16;

const NONE: u8 = u8::MAX;

/// A pattern compiled for incremental matching.
#[derive(Clone, Debug)]
pub struct Matcher {
    pattern: Permutation,
    below: [u8; MAX_PATTERN_LEN],
    above: [u8; MAX_PATTERN_LEN],
    max_pos: usize,
}

/// Extra restrictions on which index tuples count as occurrences.
#[derive(Clone, Copy, Debug)]
pub struct Constraint {
    /// Only entries with value `<= cap` may be used.
    pub cap: u8,
    /// Pattern position `.0` (0-based) must sit at word index `.1`.
    pub pin: Option<(usize, usize)>,
}

impl Default for Constraint {
    fn default() -> Self {
        Constraint { cap: u8::MAX, pin: None }
    }
}

impl Matcher {
    pub fn new(pattern: &Permutation) -> Self {
        let k = pattern.len();
        assert!((1..=MAX_PATTERN_LEN).contains(&k), "pattern length {k} unsupported");
        let p = pattern.values();
        let mut below = [NONE; MAX_PATTERN_LEN];
        let mut above = [NONE; MAX_PATTERN_LEN];
        for j in 0..k {
            let mut lo: Option<usize> = None;
            let mut hi: Option<usize> = None;
            for m in 0..j {
                if p[m] < p[j] && lo.is_none_or(|l| p[m] > p[l]) {
                    lo = Some(m);
                }
                if p[m] > p[j] && hi.is_none_or(|h| p[m] < p[h]) {
                    hi = Some(m);
                }
            }
            below[j] = lo.map_or(NONE, |x| x as u8);
            above[j] = hi.map_or(NONE, |x| x as u8);
        }
        let max_pos = p.iter().position(|&v| v as usize == k).unwrap();
        Matcher { pattern: pattern.clone(), below, above, max_pos }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    /// Always false: patterns have length at least 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// 0-based position of the pattern's largest entry.
    pub fn max_position(&self) -> usize {
        self.max_pos
    }

    /// Visits every occurrence (0-based index tuple) satisfying `c`.
    /// The visitor returns `true` to stop the walk; the return value reports
    /// whether it was stopped.
    pub fn for_each<F>(&self, w: &[u8], c: Constraint, mut visit: F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        let k = self.len();
        if k > w.len() {
            return false;
        }
        if let Some((t, g)) = c.pin {
            if t >= k || g >= w.len() || g < t || w.len() - g < k - t || w[g] > c.cap {
                return false;
            }
        }
        let mut idx = [0usize; MAX_PATTERN_LEN];
        self.walk(w, c, 0, 0, &mut idx, &mut visit)
    }

    fn walk<F>(&self, w: &[u8], c: Constraint, j: usize, start: usize, idx: &mut [usize; MAX_PATTERN_LEN], visit: &mut F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        let k = self.len();
        if j == k {
            return visit(&idx[..k]);
        }
        let n = w.len();
        let (from, to) = match c.pin {
            Some((t, g)) if j == t => {
                if g < start {
                    return false;
                }
                (g, g)
            }
            Some((t, g)) if j < t => (start, g - (t - j)),
            _ => (start, n - (k - j)),
        };
        if from > to {
            return false;
        }
        let lo = match self.below[j] {
            NONE => 0,
            m => w[idx[m as usize]],
        };
        // inclusive upper bound
        let hi = match self.above[j] {
            NONE => c.cap,
            m => c.cap.min(w[idx[m as usize]] - 1),
        };
        for i in from..=to {
            let v = w[i];
            if v <= lo || v > hi {
                continue;
            }
            idx[j] = i;
            if self.walk(w, c, j + 1, i + 1, idx, visit) {
                return true;
            }
        }
        false
    }

    pub fn count(&self, w: &[u8], c: Constraint) -> u64 {
        let mut total = 0u64;
        self.for_each(w, c, |_| {
            total += 1;
            false
        });
        total
    }

    pub fn contains(&self, w: &[u8], c: Constraint) -> bool {
        self.for_each(w, c, |_| true)
    }

    /// Is there an occurrence whose last entry is the last entry of `w` and
    /// whose values are all `<= cap`?
    pub fn contains_ending_at_last(&self, w: &[u8], cap: u8) -> bool {
        if w.is_empty() {
            return false;
        }
        self.contains(w, Constraint { cap, pin: Some((self.len() - 1, w.len() - 1)) })
    }
}

/// Number of occurrences of `p` in `w`.
pub fn pattern_occurrences(p: &Permutation, w: &Permutation) -> u64 {
    Matcher::new(p).count(w.values(), Constraint::default())
}

/// All occurrences of `p` in `w`, as 1-based index tuples in lexicographic order.
pub fn occurrence_list(p: &Permutation, w: &Permutation) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    Matcher::new(p).for_each(w.values(), Constraint::default(), |idx| {
        out.push(idx.iter().map(|i| i + 1).collect());
        false
    });
    out
}

/// Whether `w` contains `p` (stops at the first occurrence).
pub fn contains(p: &Permutation, w: &Permutation) -> bool {
    Matcher::new(p).contains(w.values(), Constraint::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(pattern_occurrences(&p("123"), &p("31425")), 3);
        let occ: Vec<Vec<u8>> = occurrence_list(&p("123"), &p("31425"))
            .into_iter()
            .map(|t| t.iter().map(|&i| p("31425").values()[i - 1]).collect())
            .collect();
        assert_eq!(occ, [[3, 4, 5], [1, 4, 5], [1, 2, 5]]);
        // 514 512 513 523 614 612 613 623 423
        assert_eq!(pattern_occurrences(&p("312"), &p("561423")), 9);
        assert_eq!(pattern_occurrences(&p("12"), &p("1")), 0);
        assert_eq!(pattern_occurrences(&p("1"), &Permutation::empty()), 0);
    }

    #[test]
    fn capped_and_pinned_searches() {
        let w = p("561423");
        let m = Matcher::new(&p("123"));
        // 1,2,3 at indices 2,4,5 is the only 123 using values <= 3
        assert_eq!(m.count(w.values(), Constraint { cap: 3, pin: None }), 1);
        assert!(m.contains_ending_at_last(w.values(), 3));
        assert!(!m.contains_ending_at_last(&w.values()[..5], 2));
        // 312 with its 3 pinned at index 0 (value 5): pairs 14, 12, 13, 23 follow
        let m312 = Matcher::new(&p("312"));
        assert_eq!(m312.count(w.values(), Constraint { cap: u8::MAX, pin: Some((0, 0)) }), 4);
    }
}
