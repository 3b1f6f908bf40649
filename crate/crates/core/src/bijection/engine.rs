use alloc::vec::Vec;

use super::BijectionError;
use crate::ferrers::{BoardError, FerrersBoard, Filling};
use crate::perm::Permutation;

/// What one level of a recursive construction removed from the source filling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Removed {
    /// The top row together with the column (1-based) of its 1.
    TopRow { column: usize },
    /// The rightmost column together with the row (1-based) of its 1.
    RightColumn { row: usize },
}

/// One level of a traced recursive bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionSlotRecord {
    /// 1 for the outermost level.
    pub level: usize,
    /// The board at this level, before the removal.
    pub board: FerrersBoard,
    pub removed: Removed,
    /// Length of the removed line (`ℓ`): top-row length or rightmost column height.
    pub length: usize,
    /// Rank of the slot among the valid ones, 0-based, left to right / bottom to top.
    pub rank: usize,
    pub slot_count: usize,
    /// 0-based gap (top row) or row index (rightmost column) on each side.
    pub source_slot: usize,
    pub target_slot: usize,
    /// Set when the slot rule found no reference 1 and admitted every slot.
    pub fallback: bool,
}

pub(crate) struct Slots {
    pub positions: Vec<usize>,
    pub fallback: bool,
}

impl Slots {
    pub fn plain(positions: Vec<usize>) -> Self {
        Slots { positions, fallback: false }
    }
}

/// Which reinsertion positions keep a filling inside the avoidance class.
pub(crate) trait SlotRule {
    /// `sub` is the filling with the line removed, `length` the line's length.
    fn slots(&self, sub: &Filling, length: usize) -> Slots;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Line {
    TopRow,
    RightColumn,
}

impl Line {
    /// Returns the smaller filling, the 0-based slot of the removed 1 and the
    /// line length.
    pub fn remove(self, f: &Filling) -> (Filling, usize, usize) {
        let m = f.columns();
        let heights = f.board().heights();
        let rows = f.rows();
        match self {
            Line::TopRow => {
                let top = m as u8;
                let length = f.board().row_length(m);
                let col = rows.iter().position(|&r| r == top).expect("filling has a 1 in its top row");
                let mut h = Vec::with_capacity(m - 1);
                let mut w = Vec::with_capacity(m - 1);
                for j in (0..m).filter(|&j| j != col) {
                    h.push(heights[j].min(top - 1));
                    w.push(rows[j]);
                }
                let sub = Filling::new_unchecked(FerrersBoard::from_heights_unchecked(h), w);
                (sub, col, length)
            }
            Line::RightColumn => {
                let r = rows[m - 1];
                let length = heights[m - 1] as usize;
                let h = heights[..m - 1].iter().map(|&x| x - 1).collect();
                let w = rows[..m - 1].iter().map(|&v| if v > r { v - 1 } else { v }).collect();
                let sub = Filling::new_unchecked(FerrersBoard::from_heights_unchecked(h), w);
                (sub, r as usize - 1, length)
            }
        }
    }

    /// Inverse of [`remove`](Self::remove) for the given enclosing board.
    pub fn insert(self, sub: &Filling, board: &FerrersBoard, slot: usize) -> Result<Filling, BoardError> {
        let rows = sub.rows();
        let w: Vec<u8> = match self {
            Line::TopRow => {
                let mut w = rows.to_vec();
                w.insert(slot, rows.len() as u8 + 1);
                w
            }
            Line::RightColumn => {
                let r = slot as u8 + 1;
                let mut w: Vec<u8> = rows.iter().map(|&v| if v >= r { v + 1 } else { v }).collect();
                w.push(r);
                w
            }
        };
        Filling::new(board.clone(), Permutation::new(w).expect("insertion keeps a permutation"))
    }

    fn removed(self, slot: usize) -> Removed {
        match self {
            Line::TopRow => Removed::TopRow { column: slot + 1 },
            Line::RightColumn => Removed::RightColumn { row: slot + 1 },
        }
    }
}

/// Peels `f` line by line, then rebuilds it with rank-matched target slots.
pub(crate) fn transport(
    f: &Filling,
    line: Line,
    source: &dyn SlotRule,
    target: &dyn SlotRule,
) -> Result<(Filling, Vec<InsertionSlotRecord>), BijectionError> {
    // chain[t] is the source filling at level t; chain[t + 1] has one line fewer.
    let mut chain = Vec::with_capacity(f.columns() + 1);
    let mut levels = Vec::with_capacity(f.columns());
    chain.push(f.clone());
    while chain.last().unwrap().columns() > 0 {
        let cur = chain.last().unwrap();
        let (sub, slot, length) = line.remove(cur);
        levels.push((cur.board().clone(), slot, length));
        chain.push(sub);
    }

    let mut image = Filling::empty();
    let mut records = Vec::with_capacity(levels.len());
    for (t, (board, slot, length)) in levels.into_iter().enumerate().rev() {
        let level = t + 1;
        let src = source.slots(&chain[t + 1], length);
        let dst = target.slots(&image, length);
        let rank = src.positions.iter().position(|&s| s == slot).ok_or_else(|| BijectionError::Slot {
            level,
            side: "source",
            slot,
            valid: src.positions.clone(),
        })?;
        if src.positions.len() != dst.positions.len() {
            return Err(BijectionError::SlotCount {
                level,
                source_count: src.positions.len(),
                target_count: dst.positions.len(),
            });
        }
        let target_slot = dst.positions[rank];
        image = line.insert(&image, &board, target_slot)?;
        records.push(InsertionSlotRecord {
            level,
            board,
            removed: line.removed(slot),
            length,
            rank,
            slot_count: src.positions.len(),
            source_slot: slot,
            target_slot,
            fallback: src.fallback || dst.fallback,
        });
    }
    records.reverse();
    Ok((image, records))
}
