//! Rightmost-column bijections between the fan with its apex last and the
//! POP whose last position lies below all others.
//!
//! Appending a rightmost column of height `ℓ` with its 1 in row `r` creates an
//! occurrence of the fan `{… k}` exactly when `r − 1 >= k − 1` (every lower row
//! already has its 1 further left and inside the board), and an occurrence of
//! the last-below-all POP exactly when `ℓ − r >= k − 1`. Both sides therefore
//! have `min(k − 1, ℓ)` valid rows: the lowest ones for the fan, the highest
//! ones for the other POP.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::engine::{transport, InsertionSlotRecord, Line, SlotRule, Slots};
use super::fan::TopRowBijection;
use super::{check_avoids, BijectionError, BijectionOracle};
use crate::ferrers::Filling;
use crate::pop::{FanPop, Pop};
use crate::set::PatternSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RightColumnRule {
    /// The fan of size `k` with apex `k`: the `k − 1` lowest rows are valid.
    BottomRows(usize),
    /// `σ_k < σ_j` for all `j < k`: the `k − 1` highest rows are valid.
    TopRows(usize),
}

impl RightColumnRule {
    pub fn size(self) -> usize {
        match self {
            RightColumnRule::BottomRows(k) | RightColumnRule::TopRows(k) => k,
        }
    }

    pub fn patterns(self) -> PatternSet {
        match self {
            RightColumnRule::BottomRows(k) => FanPop::new(k, k).expect("valid fan size").patterns(),
            RightColumnRule::TopRows(k) => Pop::last_below_all(k).to_pattern_set(),
        }
    }

    pub fn from_pattern_set(set: &PatternSet) -> Option<Self> {
        let k = set.max_len()?;
        [RightColumnRule::BottomRows(k), RightColumnRule::TopRows(k)]
            .into_iter()
            .find(|r| r.patterns() == *set)
    }
}

impl SlotRule for RightColumnRule {
    fn slots(&self, _sub: &Filling, length: usize) -> Slots {
        let n = (self.size() - 1).min(length);
        let positions = match *self {
            RightColumnRule::BottomRows(_) => (0..n).collect(),
            RightColumnRule::TopRows(_) => (length - n..length).collect(),
        };
        Slots::plain(positions)
    }
}

/// A rightmost-column bijection between two rules of the same size.
#[derive(Clone, Debug)]
pub struct RightColumnBijection {
    source: RightColumnRule,
    target: RightColumnRule,
    source_set: PatternSet,
    target_set: PatternSet,
}

impl RightColumnBijection {
    pub fn new(source: RightColumnRule, target: RightColumnRule) -> Result<Self, BijectionError> {
        if source.size() != target.size() {
            return Err(BijectionError::Parameters(format!(
                "sizes {} and {} differ",
                source.size(),
                target.size()
            )));
        }
        Ok(RightColumnBijection { source, target, source_set: source.patterns(), target_set: target.patterns() })
    }

    pub fn inverse(&self) -> Self {
        RightColumnBijection::new(self.target, self.source).expect("sizes already matched")
    }
}

impl BijectionOracle for RightColumnBijection {
    fn name(&self) -> String {
        format!("rightmost-column {}->{}", self.source_set, self.target_set)
    }

    fn source_set(&self) -> &PatternSet {
        &self.source_set
    }

    fn target_set(&self) -> &PatternSet {
        &self.target_set
    }

    fn map(&self, f: &Filling) -> Result<Filling, BijectionError> {
        self.map_traced(f).map(|(g, _)| g)
    }

    fn map_traced(&self, f: &Filling) -> Result<(Filling, Vec<InsertionSlotRecord>), BijectionError> {
        check_avoids(f, &self.source_set)?;
        transport(f, Line::RightColumn, &self.source, &self.target)
    }
}

/// Any fan of size `k` to the last-below-all POP of size `k` (or back):
/// a top-row move to the apex-`k` fan followed by the rightmost-column map.
#[derive(Clone, Debug)]
pub struct Figure3Bijection {
    fan: FanPop,
    to_figure3: bool,
    top: Option<TopRowBijection>,
    right: RightColumnBijection,
}

impl Figure3Bijection {
    pub fn new(fan: FanPop) -> Self {
        let k = fan.size();
        let last = FanPop::new(k, k).unwrap();
        let top = (fan.apex() != k).then(|| TopRowBijection::fan(fan, last).unwrap());
        let right =
            RightColumnBijection::new(RightColumnRule::BottomRows(k), RightColumnRule::TopRows(k)).unwrap();
        Figure3Bijection { fan, to_figure3: true, top, right }
    }

    pub fn inverse(&self) -> Self {
        Figure3Bijection {
            fan: self.fan,
            to_figure3: !self.to_figure3,
            top: self.top.as_ref().map(TopRowBijection::inverse),
            right: self.right.inverse(),
        }
    }

    pub fn fan(&self) -> FanPop {
        self.fan
    }
}

impl BijectionOracle for Figure3Bijection {
    fn name(&self) -> String {
        format!("figure3 {}->{}", self.source_set(), self.target_set())
    }

    fn source_set(&self) -> &PatternSet {
        match (&self.top, self.to_figure3) {
            (Some(t), true) => t.source_set(),
            _ => self.right.source_set(),
        }
    }

    fn target_set(&self) -> &PatternSet {
        match (&self.top, self.to_figure3) {
            (Some(t), false) => t.target_set(),
            _ => self.right.target_set(),
        }
    }

    fn map(&self, f: &Filling) -> Result<Filling, BijectionError> {
        self.map_traced(f).map(|(g, _)| g)
    }

    fn map_traced(&self, f: &Filling) -> Result<(Filling, Vec<InsertionSlotRecord>), BijectionError> {
        let mut trace = Vec::new();
        let mut cur = f.clone();
        let mut step = |b: &dyn BijectionOracle, cur: &mut Filling| -> Result<(), BijectionError> {
            let (g, t) = b.map_traced(cur)?;
            trace.extend(t);
            *cur = g;
            Ok(())
        };
        match (&self.top, self.to_figure3) {
            (Some(t), true) => {
                step(t, &mut cur)?;
                step(&self.right, &mut cur)?;
            }
            (Some(t), false) => {
                step(&self.right, &mut cur)?;
                step(t, &mut cur)?;
            }
            (None, _) => step(&self.right, &mut cur)?,
        }
        Ok((cur, trace))
    }
}

pub fn fan_to_figure3_bijection(f: &Filling, p1: FanPop) -> Result<Filling, BijectionError> {
    Figure3Bijection::new(p1).map(f)
}

/// Inverse of [`fan_to_figure3_bijection`] for the same fan.
pub fn figure3_to_fan_bijection(f: &Filling, p1: FanPop) -> Result<Filling, BijectionError> {
    Figure3Bijection::new(p1).inverse().map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_rows() {
        let e = Filling::empty();
        assert_eq!(RightColumnRule::BottomRows(3).slots(&e, 5).positions, [0, 1]);
        assert_eq!(RightColumnRule::TopRows(3).slots(&e, 5).positions, [3, 4]);
        assert_eq!(RightColumnRule::TopRows(4).slots(&e, 2).positions, [0, 1]);
    }

    #[test]
    fn recognises_both_sides() {
        let s: PatternSet = "231,321".parse().unwrap();
        assert_eq!(RightColumnRule::from_pattern_set(&s), Some(RightColumnRule::TopRows(3)));
        let s: PatternSet = "123,213".parse().unwrap();
        assert_eq!(RightColumnRule::from_pattern_set(&s), Some(RightColumnRule::BottomRows(3)));
    }

    #[test]
    fn round_trip_small() {
        let fan = FanPop::new(3, 2).unwrap();
        let f: Filling = "[4,4,4,3]/4321".parse().unwrap();
        let g = fan_to_figure3_bijection(&f, fan).unwrap();
        assert!(g.avoids(&Pop::last_below_all(3).to_pattern_set()));
        assert_eq!(g.board(), f.board());
        assert_eq!(figure3_to_fan_bijection(&g, fan).unwrap(), f);
    }
}
