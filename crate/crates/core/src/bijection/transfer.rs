//! Lifting a shape-preserving bijection for `S → S'` to one for
//! `S ⊕ T → S' ⊕ T`.
//!
//! A cell is red when some occurrence of a pattern of `T` lies strictly to its
//! north-east (inside the board). The red cells of a board form a Ferrers
//! shape hugging the south-west corner. The 1s sitting on red cells, with
//! their rows and columns squashed together, form a smaller filling; the
//! inner bijection is applied to it and the result is written back into the
//! same rows and columns.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{check_avoids, BijectionError, BijectionOracle};
use crate::ferrers::{contains_in_board, FerrersBoard, Filling};
use crate::perm::Permutation;
use crate::set::PatternSet;

/// The red region of a filling with respect to a suffix set `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    /// For each column, the highest red row (0 when none).
    red_height: Vec<u8>,
    /// Columns whose 1 is red, left to right.
    columns: Vec<usize>,
}

impl Colouring {
    pub fn of(f: &Filling, t: &PatternSet) -> Self {
        let matchers = t.matchers();
        let w = f.rows();
        let h = f.board().heights();
        let m = w.len();
        let mut red_height = Vec::with_capacity(m);
        let mut rows = Vec::with_capacity(m);
        let mut heights = Vec::with_capacity(m);
        for i in 0..m {
            // Red rows in column i form an interval 1..=r; find r from the top.
            let mut r = 0;
            for j in (1..=h[i]).rev() {
                rows.clear();
                heights.clear();
                for c in i + 1..m {
                    if w[c] > j {
                        rows.push(w[c]);
                        heights.push(h[c]);
                    }
                }
                if matchers.iter().any(|mt| contains_in_board(mt, &rows, &heights)) {
                    r = j;
                    break;
                }
            }
            red_height.push(r);
        }
        let columns = (0..m).filter(|&c| w[c] <= red_height[c]).collect();
        Colouring { red_height, columns }
    }

    /// `column` is 0-based, `row` 1-based.
    pub fn is_red(&self, column: usize, row: usize) -> bool {
        self.red_height.get(column).is_some_and(|&r| row >= 1 && row <= r as usize)
    }

    pub fn red_heights(&self) -> &[u8] {
        &self.red_height
    }

    /// 0-based columns whose 1 lies on a red cell.
    pub fn surviving_columns(&self) -> &[usize] {
        &self.columns
    }

    /// Rows (1-based, increasing) whose 1 lies on a red cell.
    pub fn surviving_rows(&self, f: &Filling) -> Vec<u8> {
        let mut r: Vec<u8> = self.columns.iter().map(|&c| f.rows()[c]).collect();
        r.sort_unstable();
        r
    }

    /// The squashed red filling.
    pub fn squash(&self, f: &Filling) -> Result<Filling, BijectionError> {
        let rows = self.surviving_rows(f);
        let rank = |v: u8| rows.iter().position(|&x| x == v).unwrap() as u8 + 1;
        let heights = self
            .columns
            .iter()
            .map(|&c| rows.iter().filter(|&&j| j <= self.red_height[c]).count() as u8)
            .collect();
        let board = FerrersBoard::new(heights).map_err(BijectionError::NotFerrers)?;
        let w = self.columns.iter().map(|&c| rank(f.rows()[c])).collect();
        let perm = Permutation::new(w).expect("ranks of distinct rows");
        Filling::new(board, perm).map_err(BijectionError::NotFerrers)
    }
}

/// `S ⊕ T → S' ⊕ T` built from an inner `S → S'` oracle.
pub struct DirectSumTransfer {
    t: PatternSet,
    inner: Box<dyn BijectionOracle>,
    source: PatternSet,
    target: PatternSet,
}

impl DirectSumTransfer {
    pub fn new(t: PatternSet, inner: Box<dyn BijectionOracle>) -> Result<Self, BijectionError> {
        if t.is_empty() {
            return Err(BijectionError::Parameters(String::from("suffix set is empty")));
        }
        let source = inner.source_set().direct_sum(&t);
        let target = inner.target_set().direct_sum(&t);
        Ok(DirectSumTransfer { t, inner, source, target })
    }

    pub fn suffix(&self) -> &PatternSet {
        &self.t
    }

    pub fn inner(&self) -> &dyn BijectionOracle {
        &*self.inner
    }
}

impl BijectionOracle for DirectSumTransfer {
    fn name(&self) -> String {
        format!("transfer ({}) (+) {}", self.inner.name(), self.t)
    }

    fn source_set(&self) -> &PatternSet {
        &self.source
    }

    fn target_set(&self) -> &PatternSet {
        &self.target
    }

    fn map(&self, f: &Filling) -> Result<Filling, BijectionError> {
        check_avoids(f, &self.source)?;
        transfer_with(f, &self.t, &*self.inner)
    }
}

fn transfer_with(f: &Filling, t: &PatternSet, inner: &dyn BijectionOracle) -> Result<Filling, BijectionError> {
    let colouring = Colouring::of(f, t);
    let squashed = colouring.squash(f)?;
    let image = inner.map(&squashed)?;
    if image.board() != squashed.board() {
        return Err(BijectionError::OracleShape { expected: squashed.board().clone(), got: image.board().clone() });
    }
    let rows = colouring.surviving_rows(f);
    let mut w = f.rows().to_vec();
    for (idx, &c) in colouring.surviving_columns().iter().enumerate() {
        w[c] = rows[image.rows()[idx] as usize - 1];
    }
    Ok(Filling::new(f.board().clone(), Permutation::new(w).expect("rows are permuted among themselves"))?)
}

/// One-shot transfer; `inner` must map `S`-avoiders to `S'`-avoiders.
pub fn direct_sum_transfer(
    f: &Filling,
    s: &PatternSet,
    s_prime: &PatternSet,
    t: &PatternSet,
    inner: &dyn BijectionOracle,
) -> Result<Filling, BijectionError> {
    if inner.source_set() != s || inner.target_set() != s_prime {
        return Err(BijectionError::Parameters(format!(
            "inner oracle maps {} to {}, not {s} to {s_prime}",
            inner.source_set(),
            inner.target_set()
        )));
    }
    check_avoids(f, &s.direct_sum(t))?;
    transfer_with(f, t, inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::TopRowBijection;
    use crate::pop::FanPop;

    #[test]
    fn colouring_of_a_square() {
        // 1s at rows 2,1,4,3 on a 4x4 square; T = {1}: red iff a 1 lies strictly NE
        let f: Filling = "[4,4,4,4]/2143".parse().unwrap();
        let c = Colouring::of(&f, &"1".parse().unwrap());
        assert_eq!(c.red_heights(), [3, 3, 2, 0]);
        assert_eq!(c.surviving_columns(), [0, 1]);
        assert_eq!(c.squash(&f).unwrap().to_string(), "[2,2]/21");
    }

    #[test]
    fn transfer_respects_the_inner_map() {
        let s: PatternSet = "123,213".parse().unwrap();
        let sp: PatternSet = "312,321".parse().unwrap();
        let t: PatternSet = "1".parse().unwrap();
        let inner = TopRowBijection::fan(FanPop::new(3, 3).unwrap(), FanPop::new(3, 1).unwrap()).unwrap();
        let f: Filling = "[4,4,4,4]/2143".parse().unwrap();
        let g = direct_sum_transfer(&f, &s, &sp, &t, &inner).unwrap();
        assert!(g.avoids(&sp.direct_sum(&t)));
        assert!(direct_sum_transfer(&f, &sp, &s, &t, &inner).is_err());
    }
}
