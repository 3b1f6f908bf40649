//! Top-row bijections: fans to fans, and 3-element wedges to valley-like sets.
//!
//! Inserting a new top row whose 1 sits in a new column at gap `g` (0-based,
//! `g` columns to its left) can only create occurrences that use the new 1 as
//! their largest entry, and all columns of such an occurrence lie under the
//! top row. For a fan of size `k` with apex `a` this rules out exactly the
//! gaps with at least `a − 1` top-row columns on the left and `k − a` on the
//! right, leaving `min(k − 1, ℓ)` slots for a top row of length `ℓ`.
//!
//! For the valley-like sets `{213,312}`, `{132,213}` and `{231,312}` the valid
//! gaps depend on the filling below: let `c` be the (1-based) column, among
//! the top-row columns, holding the highest 1 below the top row. The two valid
//! gaps are then `{c−1, c}` (immediately left or right of `c`), `{0, c}` and
//! `{c−1, ℓ−1}` respectively.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::engine::{transport, InsertionSlotRecord, Line, SlotRule, Slots};
use super::{check_avoids, BijectionError, BijectionOracle};
use crate::ferrers::Filling;
use crate::pop::{FanPop, Pop};
use crate::set::PatternSet;

/// The three 3-pattern sets handled by the highest-1 slot rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValleyKind {
    /// `{213, 312}`, the valley POP.
    Valley,
    /// `{132, 213}`
    Set132_213,
    /// `{231, 312}`
    Set231_312,
}

impl ValleyKind {
    pub const ALL: [ValleyKind; 3] = [ValleyKind::Valley, ValleyKind::Set132_213, ValleyKind::Set231_312];

    pub fn patterns(self) -> PatternSet {
        match self {
            ValleyKind::Valley => Pop::valley().to_pattern_set(),
            ValleyKind::Set132_213 => "132,213".parse().unwrap(),
            ValleyKind::Set231_312 => "231,312".parse().unwrap(),
        }
    }
}

/// Slot rule for a top-row construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TopRowRule {
    Fan(FanPop),
    Valley(ValleyKind),
}

impl TopRowRule {
    pub fn patterns(&self) -> PatternSet {
        match self {
            TopRowRule::Fan(p) => p.patterns(),
            TopRowRule::Valley(v) => v.patterns(),
        }
    }

    pub fn from_pattern_set(set: &PatternSet) -> Option<Self> {
        if let Some(f) = FanPop::from_pattern_set(set) {
            return Some(TopRowRule::Fan(f));
        }
        ValleyKind::ALL.into_iter().find(|v| v.patterns() == *set).map(TopRowRule::Valley)
    }

    /// Number of valid slots once the top row is long enough.
    fn capacity(&self) -> usize {
        match self {
            TopRowRule::Fan(p) => p.size() - 1,
            TopRowRule::Valley(_) => 2,
        }
    }
}

impl SlotRule for TopRowRule {
    fn slots(&self, sub: &Filling, length: usize) -> Slots {
        match *self {
            TopRowRule::Fan(p) => {
                let (k, a) = (p.size(), p.apex());
                Slots::plain(
                    (0..length)
                        .filter(|&g| length < k || g + 1 < a || g + 1 + k - a > length)
                        .collect(),
                )
            }
            TopRowRule::Valley(kind) => {
                if length <= 1 {
                    return Slots::plain((0..length).collect());
                }
                let under_top = sub.rows().get(..length - 1).filter(|s| !s.is_empty());
                let Some(cols) = under_top else {
                    // No 1 below the top row inside its columns: admit every gap
                    // and let the trace flag it.
                    return Slots { positions: (0..length).collect(), fallback: true };
                };
                let (pos, _) = cols.iter().enumerate().max_by_key(|&(_, r)| *r).unwrap();
                let c = pos + 1;
                let positions = match kind {
                    ValleyKind::Valley => vec![c - 1, c],
                    ValleyKind::Set132_213 => vec![0, c],
                    ValleyKind::Set231_312 => vec![c - 1, length - 1],
                };
                Slots::plain(positions)
            }
        }
    }
}

/// A top-row bijection between two rules with matching slot counts.
#[derive(Clone, Debug)]
pub struct TopRowBijection {
    source: TopRowRule,
    target: TopRowRule,
    source_set: PatternSet,
    target_set: PatternSet,
}

impl TopRowBijection {
    pub fn new(source: TopRowRule, target: TopRowRule) -> Result<Self, BijectionError> {
        if source.capacity() != target.capacity() {
            return Err(BijectionError::Parameters(format!(
                "slot counts {} and {} differ",
                source.capacity(),
                target.capacity()
            )));
        }
        Ok(TopRowBijection { source, target, source_set: source.patterns(), target_set: target.patterns() })
    }

    pub fn fan(from: FanPop, to: FanPop) -> Result<Self, BijectionError> {
        if from.size() != to.size() {
            return Err(BijectionError::Parameters(format!(
                "fan sizes {} and {} differ",
                from.size(),
                to.size()
            )));
        }
        TopRowBijection::new(TopRowRule::Fan(from), TopRowRule::Fan(to))
    }

    /// Recognises both sides from their pattern sets.
    pub fn from_sets(source: &PatternSet, target: &PatternSet) -> Result<Self, BijectionError> {
        let rule = |s: &PatternSet| {
            TopRowRule::from_pattern_set(s)
                .ok_or_else(|| BijectionError::Parameters(format!("{s} is neither a fan nor a valley-like set")))
        };
        TopRowBijection::new(rule(source)?, rule(target)?)
    }

    /// The same construction with the sides swapped; it inverts `self`.
    pub fn inverse(&self) -> Self {
        TopRowBijection::new(self.target, self.source).expect("capacities already matched")
    }

    pub fn source(&self) -> TopRowRule {
        self.source
    }

    pub fn target(&self) -> TopRowRule {
        self.target
    }
}

impl BijectionOracle for TopRowBijection {
    fn name(&self) -> String {
        let kind = match (self.source, self.target) {
            (TopRowRule::Fan(_), TopRowRule::Fan(_)) => "fan",
            _ => "wedge-valley",
        };
        format!("{kind} {}->{}", self.source_set, self.target_set)
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
        transport(f, Line::TopRow, &self.source, &self.target)
    }
}

/// Maps a `p1`-avoiding filling to the `p2`-avoiding filling of the same board.
pub fn fan_bijection(f: &Filling, p1: FanPop, p2: FanPop) -> Result<Filling, BijectionError> {
    TopRowBijection::fan(p1, p2)?.map(f)
}

/// The three top-row constructions landing in the valley `{213, 312}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WedgeValleyVariant {
    /// `{123, 213}` (the wedge with apex 3) to `{213, 312}`.
    WedgeToValley,
    /// `{132, 213}` to `{213, 312}`.
    Set132_213ToValley,
    /// `{231, 312}` to `{213, 312}`.
    Set231_312ToValley,
}

impl WedgeValleyVariant {
    pub const ALL: [WedgeValleyVariant; 3] = [
        WedgeValleyVariant::WedgeToValley,
        WedgeValleyVariant::Set132_213ToValley,
        WedgeValleyVariant::Set231_312ToValley,
    ];

    pub fn bijection(self) -> TopRowBijection {
        let source = match self {
            WedgeValleyVariant::WedgeToValley => TopRowRule::Fan(FanPop::new(3, 3).unwrap()),
            WedgeValleyVariant::Set132_213ToValley => TopRowRule::Valley(ValleyKind::Set132_213),
            WedgeValleyVariant::Set231_312ToValley => TopRowRule::Valley(ValleyKind::Set231_312),
        };
        TopRowBijection::new(source, TopRowRule::Valley(ValleyKind::Valley)).unwrap()
    }
}

pub fn wedge_valley_bijection(f: &Filling, variant: WedgeValleyVariant) -> Result<Filling, BijectionError> {
    variant.bijection().map(f)
}
