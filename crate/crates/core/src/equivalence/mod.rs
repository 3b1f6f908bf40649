//! Wilf and shape-Wilf equivalence: counting engines, comparison reports,
//! symbolic identities and trivial symmetry classes.

mod count;
mod expr;

use alloc::vec::Vec;
use core::fmt;

pub use count::{
    add_counts, count_avoiders, count_terms, AvoidanceTree, CountError, CountSequence, Strategy,
    AUTO_DEPTH_FIRST_ABOVE,
};
pub use expr::{identity_holds, symmetry_identity_check, Expr, ExprError, Symmetry};

use crate::ferrers::{count_fillings, enumerate_boards, FerrersBoard};
use crate::set::PatternSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivalenceKind {
    Wilf,
    ShapeWilf,
}

impl fmt::Display for EquivalenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceKind::Wilf => "wilf",
            EquivalenceKind::ShapeWilf => "shape-wilf",
        })
    }
}

/// Whether a comparison stops at the first divergent size.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Finish the size holding the first divergence, then stop.
    #[default]
    FailFast,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    /// Present for shape-Wilf rows.
    pub board: Option<FerrersBoard>,
    pub left: u64,
    pub right: u64,
}

impl CountRow {
    pub fn equal(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Counts agree for every size up to the given `n_max`.
    EqualUpTo(usize),
    Diverges,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub kind: EquivalenceKind,
    pub left: PatternSet,
    pub right: PatternSet,
    pub n_max: usize,
    pub rows: Vec<CountRow>,
    pub verdict: Verdict,
    pub first_divergence: Option<CountRow>,
}

impl EquivalenceReport {
    /// Builds a report from rows sorted by `n`, applying `mode`.
    pub fn from_rows(
        kind: EquivalenceKind,
        left: PatternSet,
        right: PatternSet,
        n_max: usize,
        rows: impl IntoIterator<Item = CountRow>,
        mode: Mode,
    ) -> Self {
        let mut kept = Vec::new();
        let mut first: Option<CountRow> = None;
        for row in rows {
            if mode == Mode::FailFast && first.as_ref().is_some_and(|d| d.n < row.n) {
                break;
            }
            if first.is_none() && !row.equal() {
                first = Some(row.clone());
            }
            kept.push(row);
        }
        let verdict = if first.is_some() { Verdict::Diverges } else { Verdict::EqualUpTo(n_max) };
        EquivalenceReport { kind, left, right, n_max, rows: kept, verdict, first_divergence: first }
    }

    /// A Wilf report from `0..=n_max` count tables of both sets.
    pub fn wilf_from_terms(left: PatternSet, right: PatternSet, l: &[u64], r: &[u64], mode: Mode) -> Self {
        let n_max = l.len().min(r.len()).saturating_sub(1);
        let rows = (1..=n_max).map(|n| CountRow { n, board: None, left: l[n], right: r[n] });
        EquivalenceReport::from_rows(EquivalenceKind::Wilf, left, right, n_max, rows, mode)
    }

    pub fn is_equal(&self) -> bool {
        matches!(self.verdict, Verdict::EqualUpTo(_))
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} vs {}: ", self.kind, self.left, self.right)?;
        match (&self.verdict, &self.first_divergence) {
            (Verdict::EqualUpTo(n), _) => write!(f, "equal up to n = {n}"),
            (Verdict::Diverges, Some(d)) => {
                write!(f, "diverges at n = {}", d.n)?;
                if let Some(b) = &d.board {
                    write!(f, " on board {b}")?;
                }
                write!(f, " ({} vs {})", d.left, d.right)
            }
            (Verdict::Diverges, None) => f.write_str("diverges"),
        }
    }
}

/// Compares `|Av_n(S1)|` and `|Av_n(S2)|` for `n = 1..=n_max`.
pub fn wilf_table(s1: &PatternSet, s2: &PatternSet, n_max: usize) -> Result<EquivalenceReport, CountError> {
    wilf_table_with(s1, s2, n_max, Mode::FailFast)
}

pub fn wilf_table_with(
    s1: &PatternSet,
    s2: &PatternSet,
    n_max: usize,
    mode: Mode,
) -> Result<EquivalenceReport, CountError> {
    let l = count_terms(s1, n_max, Strategy::Auto)?;
    let r = count_terms(s2, n_max, Strategy::Auto)?;
    Ok(EquivalenceReport::wilf_from_terms(s1.clone(), s2.clone(), &l, &r, mode))
}

/// Per-board counts of both sets on one board.
pub fn shape_wilf_row(s1: &PatternSet, s2: &PatternSet, n: usize, board: FerrersBoard) -> CountRow {
    let left = count_fillings(&board, s1);
    let right = count_fillings(&board, s2);
    CountRow { n, board: Some(board), left, right }
}

/// Compares the fillings avoiding `S1` and `S2` on every board with
/// `1..=n_max` columns.
pub fn shape_wilf_table(s1: &PatternSet, s2: &PatternSet, n_max: usize) -> EquivalenceReport {
    shape_wilf_table_with(s1, s2, n_max, Mode::FailFast)
}

pub fn shape_wilf_table_with(s1: &PatternSet, s2: &PatternSet, n_max: usize, mode: Mode) -> EquivalenceReport {
    let rows = (1..=n_max)
        .flat_map(|n| enumerate_boards(n).into_iter().map(move |b| (n, b)))
        .map(|(n, b)| shape_wilf_row(s1, s2, n, b));
    EquivalenceReport::from_rows(EquivalenceKind::ShapeWilf, s1.clone(), s2.clone(), n_max, rows, mode)
}

/// The eight images of `S` under the symmetries of the square, in the order
/// `S, S^r, S^c, S^rc, S^i, S^ir, S^ic, S^irc`.
pub fn symmetry_orbit(set: &PatternSet) -> [PatternSet; 8] {
    let i = set.inverse();
    [
        set.clone(),
        set.reverse(),
        set.complement(),
        set.reverse().complement(),
        i.clone(),
        i.reverse(),
        i.complement(),
        i.reverse().complement(),
    ]
}

/// The least member of the orbit of `S`; two sets are trivially
/// Wilf-equivalent iff these agree.
pub fn trivial_symmetry_class(set: &PatternSet) -> PatternSet {
    symmetry_orbit(set).into_iter().min().expect("orbit is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> PatternSet {
        s.parse().unwrap()
    }

    #[test]
    fn wilf_divergence_is_located() {
        let r = wilf_table(&set("123"), &set("12"), 3).unwrap();
        assert_eq!(r.verdict, Verdict::Diverges);
        let d = r.first_divergence.unwrap();
        assert_eq!((d.n, d.left, d.right), (2, 2, 1));
        assert_eq!(r.rows.len(), 2);
        let full = wilf_table_with(&set("123"), &set("12"), 3, Mode::Full).unwrap();
        assert_eq!(full.rows.len(), 3);
    }

    #[test]
    fn symmetric_sets_are_wilf_equal() {
        let s = set("1342,2431");
        let r = wilf_table(&s, &s.reverse(), 7).unwrap();
        assert_eq!(r.verdict, Verdict::EqualUpTo(7));
        assert_eq!(r.rows.len(), 7);
    }

    #[test]
    fn shape_wilf_rows_cover_every_board() {
        let r = shape_wilf_table(&set("123,213"), &set("312,321"), 5);
        assert!(r.is_equal());
        assert_eq!(r.rows.len(), 1 + 2 + 5 + 14 + 42);
    }

    #[test]
    fn shape_wilf_fail_fast_finishes_the_size() {
        let r = shape_wilf_table(&set("213,312"), &set("123,132"), 6);
        let d = r.first_divergence.clone().expect("known non-equivalent pair");
        assert!(r.rows.iter().all(|row| row.n <= d.n));
        let at_n = r.rows.iter().filter(|row| row.n == d.n).count();
        assert_eq!(at_n, enumerate_boards(d.n).len());
    }

    #[test]
    fn trivial_classes() {
        assert_eq!(trivial_symmetry_class(&set("21")), set("12"));
        let c = trivial_symmetry_class(&set("45123,45213"));
        assert_eq!(trivial_symmetry_class(&c), c);
        assert_ne!(c, trivial_symmetry_class(&set("12345,12354")));
    }
}
