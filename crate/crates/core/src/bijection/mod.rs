//! Constructive shape-preserving bijections between sets of pattern-avoiding
//! fillings, and a harness that checks them board by board.
//!
//! The recursive bijections all follow one scheme. A filling is taken apart
//! one line at a time (the top row with the column of its 1, or the rightmost
//! column with the row of its 1). For each level we record which of the
//! *valid* reinsertion slots the removed 1 occupied, counted left to right
//! (or bottom to top). The image is rebuilt from the empty board upwards by
//! inserting, at every level, into the slot of the same rank among the valid
//! slots for the target patterns. The two sides always have the same number
//! of valid slots, which is what makes the map a bijection.

mod engine;
pub mod fan;
pub mod rightmost;
pub mod transfer;
pub mod verify;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::ferrers::{BoardError, FerrersBoard, Filling};
use crate::perm::Permutation;
use crate::set::PatternSet;

pub use engine::{InsertionSlotRecord, Removed};
pub use fan::{fan_bijection, wedge_valley_bijection, TopRowBijection, TopRowRule, ValleyKind, WedgeValleyVariant};
pub use rightmost::{
    fan_to_figure3_bijection, figure3_to_fan_bijection, Figure3Bijection, RightColumnBijection, RightColumnRule,
};
pub use transfer::{direct_sum_transfer, Colouring, DirectSumTransfer};
pub use verify::{verify_bijection, verify_board, VerificationReport, Violation, ViolationKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("input {filling} contains the source pattern {pattern}")]
    Precondition { filling: Filling, pattern: Permutation },
    #[error("incompatible parameters: {0}")]
    Parameters(String),
    #[error("slot {slot} is not a valid {side} slot at level {level} (valid: {valid:?})")]
    Slot { level: usize, side: &'static str, slot: usize, valid: Vec<usize> },
    #[error("slot counts differ at level {level}: {source_count} source vs {target_count} target")]
    SlotCount { level: usize, source_count: usize, target_count: usize },
    #[error("inner oracle changed the board from {expected} to {got}")]
    OracleShape { expected: FerrersBoard, got: FerrersBoard },
    #[error("squashed red region is not a Ferrers board: {0}")]
    NotFerrers(BoardError),
    #[error(transparent)]
    Board(#[from] BoardError),
}

/// A shape-preserving map from `source_set`-avoiding fillings to
/// `target_set`-avoiding fillings.
pub trait BijectionOracle: Send + Sync {
    fn name(&self) -> String;
    fn source_set(&self) -> &PatternSet;
    fn target_set(&self) -> &PatternSet;
    fn map(&self, f: &Filling) -> Result<Filling, BijectionError>;

    /// Like [`map`](Self::map), also returning one record per recursion level
    /// when the construction has levels.
    fn map_traced(&self, f: &Filling) -> Result<(Filling, Vec<InsertionSlotRecord>), BijectionError> {
        self.map(f).map(|g| (g, Vec::new()))
    }
}

impl<B: BijectionOracle + ?Sized> BijectionOracle for Box<B> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn source_set(&self) -> &PatternSet {
        (**self).source_set()
    }
    fn target_set(&self) -> &PatternSet {
        (**self).target_set()
    }
    fn map(&self, f: &Filling) -> Result<Filling, BijectionError> {
        (**self).map(f)
    }
    fn map_traced(&self, f: &Filling) -> Result<(Filling, Vec<InsertionSlotRecord>), BijectionError> {
        (**self).map_traced(f)
    }
}

/// An oracle backed by a plain function; useful for controls and tests.
pub struct FnOracle<F> {
    pub name: String,
    pub source: PatternSet,
    pub target: PatternSet,
    pub map: F,
}

impl<F> BijectionOracle for FnOracle<F>
where
    F: Fn(&Filling) -> Result<Filling, BijectionError> + Send + Sync,
{
    fn name(&self) -> String {
        self.name.clone()
    }
    fn source_set(&self) -> &PatternSet {
        &self.source
    }
    fn target_set(&self) -> &PatternSet {
        &self.target
    }
    fn map(&self, f: &Filling) -> Result<Filling, BijectionError> {
        (self.map)(f)
    }
}

/// Returns the first member of `set` occurring in `f`.
pub(crate) fn check_avoids(f: &Filling, set: &PatternSet) -> Result<(), BijectionError> {
    match set.iter().find(|p| f.contains(p)) {
        Some(p) => Err(BijectionError::Precondition { filling: f.clone(), pattern: p.clone() }),
        None => Ok(()),
    }
}

impl fmt::Display for InsertionSlotRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (what, idx) = match self.removed {
            Removed::TopRow { column } => ("top row, column", column),
            Removed::RightColumn { row } => ("right column, row", row),
        };
        write!(
            f,
            "level {} board {} removed {} {} length {}: slot {} of {} (source {} -> target {})",
            self.level,
            self.board,
            what,
            idx,
            self.length,
            self.rank + 1,
            self.slot_count,
            self.source_slot + 1,
            self.target_slot + 1,
        )?;
        if self.fallback {
            f.write_str(" [fallback: no reference 1 below the top row, all slots used]")?;
        }
        Ok(())
    }
}
