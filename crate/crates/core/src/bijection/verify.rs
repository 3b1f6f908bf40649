//! Exhaustive board-by-board checking of a [`BijectionOracle`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use core::fmt;

use super::BijectionOracle;
use crate::ferrers::{count_fillings, enumerate_boards, enumerate_fillings, FerrersBoard, Filling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// The oracle returned an error.
    MapFailed,
    /// The image lives on a different board.
    Shape,
    /// The image contains a target pattern.
    Codomain,
    /// Two inputs share an image.
    Injectivity,
    /// Source and target classes have different sizes on this board.
    Count,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::MapFailed => "map failed",
            ViolationKind::Shape => "shape not preserved",
            ViolationKind::Codomain => "image not in target class",
            ViolationKind::Injectivity => "not injective",
            ViolationKind::Count => "class sizes differ",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub board: FerrersBoard,
    /// The offending input, when there is one.
    pub input: Option<Filling>,
    pub output: Option<Filling>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on board {}", self.kind, self.board)?;
        if let Some(i) = &self.input {
            write!(f, ": input {i}")?;
        }
        if let Some(o) = &self.output {
            write!(f, " -> {o}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub oracle: String,
    pub n_max: usize,
    pub boards_checked: u64,
    pub fillings_checked: u64,
    pub violation: Option<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: n <= {}, {} boards, {} fillings: ",
            self.oracle, self.n_max, self.boards_checked, self.fillings_checked
        )?;
        match &self.violation {
            None => f.write_str("PASS"),
            Some(v) => write!(f, "FAIL, {v}"),
        }
    }
}

/// Checks one board; returns the number of source fillings on success.
pub fn verify_board(oracle: &dyn BijectionOracle, board: &FerrersBoard) -> Result<u64, Violation> {
    let target = oracle.target_set();
    let violation = |kind, input: &Filling, output: Option<Filling>, detail: String| Violation {
        kind,
        board: board.clone(),
        input: Some(input.clone()),
        output,
        detail,
    };
    let mut images = BTreeSet::new();
    let mut checked = 0u64;
    for f in enumerate_fillings(board, oracle.source_set()) {
        checked += 1;
        let g = oracle.map(&f).map_err(|e| violation(ViolationKind::MapFailed, &f, None, format!("{e}")))?;
        if g.board() != board {
            return Err(violation(ViolationKind::Shape, &f, Some(g), String::new()));
        }
        if let Some(p) = target.iter().find(|p| g.contains(p)) {
            return Err(violation(ViolationKind::Codomain, &f, Some(g), format!("contains {p}")));
        }
        if !images.insert(g.clone()) {
            return Err(violation(ViolationKind::Injectivity, &f, Some(g), String::new()));
        }
    }
    let expected = count_fillings(board, target);
    if expected != checked {
        return Err(Violation {
            kind: ViolationKind::Count,
            board: board.clone(),
            input: None,
            output: None,
            detail: format!("{checked} source vs {expected} target fillings"),
        });
    }
    Ok(checked)
}

/// Runs [`verify_board`] over every board with `1..=n_max` columns, stopping
/// at the first violation.
pub fn verify_bijection(oracle: &dyn BijectionOracle, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport {
        oracle: oracle.name(),
        n_max,
        boards_checked: 0,
        fillings_checked: 0,
        violation: None,
    };
    for n in 1..=n_max {
        for board in enumerate_boards(n) {
            report.boards_checked += 1;
            match verify_board(oracle, &board) {
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
