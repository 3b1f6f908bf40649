//! Rayon drivers for the core engines. Results do not depend on scheduling:
//! subtree counts are summed and per-board results are collected in board
//! order.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use shapewilf_core::bijection::{verify_board, BijectionOracle, VerificationReport};
use shapewilf_core::equivalence::{
    add_counts, shape_wilf_row, AvoidanceTree, CountError, EquivalenceKind, EquivalenceReport, Mode, Strategy,
};
use shapewilf_core::ferrers::enumerate_boards;
use shapewilf_core::PatternSet;

/// Depth at which the generating tree is split into parallel subtrees.
const SPLIT_DEPTH: usize = 6;

/// `|Av_n(S)|` for `n` in `0..=n_max`, subtrees counted in parallel.
pub fn count_terms(set: &PatternSet, n_max: usize) -> Result<Vec<u64>, CountError> {
    let tree = AvoidanceTree::new(set);
    if n_max <= SPLIT_DEPTH {
        return tree.subtree_counts(&[], n_max, Strategy::BreadthFirst);
    }
    let mut counts = tree.subtree_counts(&[], SPLIT_DEPTH - 1, Strategy::BreadthFirst)?;
    counts.resize(n_max + 1, 0);
    let roots = tree.level(SPLIT_DEPTH);
    let deep = roots
        .par_iter()
        .map(|root| tree.subtree_counts(root, n_max, Strategy::DepthFirst))
        .try_reduce(
            || vec![0u64; n_max + 1],
            |mut a, b| {
                add_counts(&mut a, &b)?;
                Ok(a)
            },
        )?;
    add_counts(&mut counts, &deep)?;
    Ok(counts)
}

/// Counts for increasing `n` until `n_max` or until the budget is spent.
/// Always returns at least `0..=n_min`.
pub fn count_terms_within(
    set: &PatternSet,
    n_min: usize,
    n_max: usize,
    budget: Option<Duration>,
) -> Result<Vec<u64>, CountError> {
    let start = Instant::now();
    let mut n = n_min.min(n_max);
    let mut terms = count_terms(set, n)?;
    while n < n_max && budget.is_none_or(|b| start.elapsed() < b) {
        n += 1;
        terms = count_terms(set, n)?;
    }
    Ok(terms)
}

/// Wilf comparison with parallel counting.
pub fn wilf_table(s1: &PatternSet, s2: &PatternSet, n_max: usize, mode: Mode) -> Result<EquivalenceReport, CountError> {
    let (l, r) = rayon::join(|| count_terms(s1, n_max), || count_terms(s2, n_max));
    Ok(EquivalenceReport::wilf_from_terms(s1.clone(), s2.clone(), &l?, &r?, mode))
}

/// Shape-Wilf comparison with boards of one size counted in parallel.
pub fn shape_wilf_table(s1: &PatternSet, s2: &PatternSet, n_max: usize, mode: Mode) -> EquivalenceReport {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let level: Vec<_> =
            enumerate_boards(n).into_par_iter().map(|b| shape_wilf_row(s1, s2, n, b)).collect();
        let diverged = level.iter().any(|r| !r.equal());
        rows.extend(level);
        if diverged && mode == Mode::FailFast {
            break;
        }
    }
    EquivalenceReport::from_rows(EquivalenceKind::ShapeWilf, s1.clone(), s2.clone(), n_max, rows, mode)
}

/// [`verify_bijection`](shapewilf_core::bijection::verify_bijection) with
/// boards checked in parallel; the reported violation is the first in board
/// order.
pub fn verify_bijection(oracle: &dyn BijectionOracle, n_max: usize) -> VerificationReport {
    let mut report =
        VerificationReport { oracle: oracle.name(), n_max, boards_checked: 0, fillings_checked: 0, violation: None };
    for n in 1..=n_max {
        let results: Vec<_> = enumerate_boards(n).par_iter().map(|b| verify_board(oracle, b)).collect();
        for r in results {
            report.boards_checked += 1;
            match r {
                Ok(c) => report.fillings_checked += c,
                Err(v) => {
                    report.violation = Some(v);
                    return report;
                }
            }
        }
    }
    report
}
