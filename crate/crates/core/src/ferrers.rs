//! Ferrers boards and their transversal fillings.
//!
//! A board is stored by its column heights `λ_1 ≥ … ≥ λ_m`; cell `(i, j)`
//! (column `i`, row `j`, both 1-based, rows counted from the bottom) belongs
//! to the board iff `j ≤ λ_i`. A filling places exactly one 1 in every row and
//! column and is stored as the word `w` with `w_i` the row of the 1 in
//! column `i`.
//!
//! A pattern occurs in a filling only if the whole submatrix spanned by the
//! occurrence lies inside the board. Because the board is closed under going
//! down or left, that is the case iff the top-right corner `(c_k, max row)`
//! is a cell.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::pattern::Matcher;
use crate::perm::{ParseError, Permutation, MAX_LEN};
use crate::set::PatternSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("column heights must be weakly decreasing (column {0})")]
    NotDecreasing(usize),
    #[error("column {0} has zero height")]
    EmptyColumn(usize),
    #[error("board has {rows} rows but {columns} columns")]
    RowCount { rows: usize, columns: usize },
    #[error("filling has {got} entries for {columns} columns")]
    LengthMismatch { got: usize, columns: usize },
    #[error("the 1 in column {column} (row {row}) lies outside the board (height {height})")]
    OutOfBoard { column: usize, row: usize, height: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    heights: Vec<u8>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<u8>) -> Result<Self, BoardError> {
        for (i, &h) in heights.iter().enumerate() {
            if h == 0 {
                return Err(BoardError::EmptyColumn(i + 1));
            }
            if i > 0 && h > heights[i - 1] {
                return Err(BoardError::NotDecreasing(i + 1));
            }
        }
        Ok(FerrersBoard { heights })
    }

    pub(crate) fn from_heights_unchecked(heights: Vec<u8>) -> Self {
        debug_assert!(FerrersBoard::new(heights.clone()).is_ok());
        FerrersBoard { heights }
    }

    /// The board with no cells.
    pub fn empty() -> Self {
        FerrersBoard { heights: Vec::new() }
    }

    /// The full `n × n` square.
    pub fn square(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        FerrersBoard { heights: alloc::vec![n as u8; n] }
    }

    /// `(n, n−1, …, 1)`, the smallest board with `n` columns admitting a filling.
    pub fn staircase(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        FerrersBoard { heights: (1..=n as u8).rev().collect() }
    }

    /// Converts row lengths listed from the top row down (the picture order
    /// of a Young diagram drawn bottom-left justified) into column heights.
    pub fn from_rows_top_down(rows: &[u8]) -> Result<Self, BoardError> {
        let bottom_up: Vec<u8> = rows.iter().rev().copied().collect();
        for i in 1..bottom_up.len() {
            if bottom_up[i] > bottom_up[i - 1] {
                return Err(BoardError::NotDecreasing(i + 1));
            }
        }
        let width = bottom_up.first().copied().unwrap_or(0);
        let heights = (1..=width)
            .map(|col| bottom_up.iter().filter(|&&len| len >= col).count() as u8)
            .collect();
        FerrersBoard::new(heights)
    }

    pub fn heights(&self) -> &[u8] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    pub fn rows(&self) -> usize {
        self.heights.first().copied().unwrap_or(0) as usize
    }

    /// Height of the 1-based column `i`.
    pub fn height(&self, i: usize) -> usize {
        self.heights[i - 1] as usize
    }

    /// Row length of the 1-based row `j`.
    pub fn row_length(&self, j: usize) -> usize {
        self.heights.iter().take_while(|&&h| h as usize >= j).count()
    }

    pub fn contains_cell(&self, column: usize, row: usize) -> bool {
        column >= 1 && row >= 1 && column <= self.columns() && row <= self.height(column)
    }

    pub fn cell_count(&self) -> usize {
        self.heights.iter().map(|&h| h as usize).sum()
    }

    /// Whether the board has a transversal: `λ_1 = m` and `λ_i ≥ m + 1 − i`.
    pub fn admits_filling(&self) -> bool {
        let m = self.columns();
        self.rows() == m && self.heights.iter().enumerate().all(|(i, &h)| h as usize >= m - i)
    }

    /// Number of fillings with no pattern restriction,
    /// `Π_{i=1}^{m} (λ_{m+1−i} − (i − 1))` clamped at zero.
    pub fn transversal_count(&self) -> u64 {
        if self.rows() != self.columns() {
            return 0;
        }
        let mut total = 1u64;
        for (i, &h) in self.heights.iter().rev().enumerate() {
            let choices = (h as i64) - i as i64;
            if choices <= 0 {
                return 0;
            }
            total *= choices as u64;
        }
        total
    }
}

/// All boards with `n` columns that admit at least one filling, in
/// descending lexicographic order of their heights.
pub fn enumerate_boards(n: usize) -> Vec<FerrersBoard> {
    fn rec(n: usize, heights: &mut Vec<u8>, out: &mut Vec<FerrersBoard>) {
        let i = heights.len();
        if i == n {
            out.push(FerrersBoard::from_heights_unchecked(heights.clone()));
            return;
        }
        let max = if i == 0 { n } else { heights[i - 1] as usize };
        let min = if i == 0 { n } else { n - i };
        for h in (min..=max).rev() {
            heights.push(h as u8);
            rec(n, heights, out);
            heights.pop();
        }
    }
    assert!(n <= MAX_LEN);
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FerrersBoard{self}")
    }
}

impl FromStr for FerrersBoard {
    type Err = BoardError;

    /// `"[6,6,5,4,3,3]"`, brackets optional.
    fn from_str(s: &str) -> Result<Self, BoardError> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(s);
        let heights = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|_| ParseError::InvalidToken(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        FerrersBoard::new(heights)
    }
}

/// A transversal of a Ferrers board.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    board: FerrersBoard,
    rows: Permutation,
}

impl Filling {
    /// Places `w_i` in column `i`. Fails on a size mismatch or at the first
    /// column whose 1 would fall outside the board.
    pub fn new(board: FerrersBoard, rows: Permutation) -> Result<Self, BoardError> {
        let m = board.columns();
        if rows.len() != m {
            return Err(BoardError::LengthMismatch { got: rows.len(), columns: m });
        }
        for (i, (&r, &h)) in rows.values().iter().zip(board.heights()).enumerate() {
            if r > h {
                return Err(BoardError::OutOfBoard { column: i + 1, row: r as usize, height: h as usize });
            }
        }
        if board.rows() != m {
            return Err(BoardError::RowCount { rows: board.rows(), columns: m });
        }
        Ok(Filling { board, rows })
    }

    pub(crate) fn new_unchecked(board: FerrersBoard, rows: Vec<u8>) -> Self {
        let f = Filling { board, rows: Permutation::from_vec_unchecked(rows) };
        debug_assert!(Filling::new(f.board.clone(), f.rows.clone()).is_ok());
        f
    }

    pub fn empty() -> Self {
        Filling { board: FerrersBoard::empty(), rows: Permutation::empty() }
    }

    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    /// The word `w`, `w_i` = row of the 1 in column `i`.
    pub fn permutation(&self) -> &Permutation {
        &self.rows
    }

    pub fn rows(&self) -> &[u8] {
        self.rows.values()
    }

    pub fn columns(&self) -> usize {
        self.board.columns()
    }

    /// In-board containment of `p`.
    pub fn contains(&self, p: &Permutation) -> bool {
        contains_in_board(&Matcher::new(p), self.rows(), self.board.heights())
    }

    /// True iff no pattern of `set` occurs in the board.
    pub fn avoids(&self, set: &PatternSet) -> bool {
        set.matchers()
            .iter()
            .all(|m| !contains_in_board(m, self.rows(), self.board.heights()))
    }
}

/// In-board containment for a word `rows` over columns with the given heights.
/// Occurrences are grouped by their last column `c`; the corner test then
/// caps every used row at `heights[c]`.
pub(crate) fn contains_in_board(m: &Matcher, rows: &[u8], heights: &[u8]) -> bool {
    let k = m.len();
    (k.max(1) - 1..rows.len()).any(|c| m.contains_ending_at_last(&rows[..=c], heights[c]))
}

/// Convenience wrapper matching [`Filling::contains`].
pub fn filling_contains(f: &Filling, p: &Permutation) -> bool {
    f.contains(p)
}

/// `filling_from_permutation`: see [`Filling::new`].
pub fn filling_from_permutation(board: &FerrersBoard, w: &Permutation) -> Result<Filling, BoardError> {
    Filling::new(board.clone(), w.clone())
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.board, self.rows)
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({self})")
    }
}

impl FromStr for Filling {
    type Err = BoardError;

    /// `"[6,6,5,4,3,3]/561423"`.
    fn from_str(s: &str) -> Result<Self, BoardError> {
        let (board, perm) = s
            .split_once('/')
            .ok_or_else(|| ParseError::Syntax("expected <board>/<permutation>".to_string()))?;
        Filling::new(board.parse()?, perm.parse()?)
    }
}

/// Depth-first stream of the fillings of a board avoiding a pattern set.
///
/// Columns are filled left to right, rows tried in ascending order. After
/// each placement only occurrences ending in the new column are searched.
pub struct Fillings {
    board: FerrersBoard,
    matchers: Vec<Matcher>,
    word: Vec<u8>,
    cursor: Vec<u8>,
    used: Vec<bool>,
    done: bool,
}

impl Fillings {
    pub fn new(board: &FerrersBoard, avoid: &PatternSet) -> Self {
        let m = board.columns();
        let done = board.rows() != m;
        Fillings {
            board: board.clone(),
            matchers: avoid.matchers(),
            word: Vec::with_capacity(m),
            cursor: alloc::vec![1; m + 1],
            used: alloc::vec![false; m + 1],
            done,
        }
    }

    fn admissible(&self) -> bool {
        let c = self.word.len() - 1;
        let cap = self.board.heights()[c];
        self.matchers.iter().all(|m| !m.contains_ending_at_last(&self.word, cap))
    }
}

impl Iterator for Fillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let m = self.board.columns();
        if m == 0 {
            self.done = true;
            return Some(Filling::empty());
        }
        loop {
            let c = self.word.len();
            let height = self.board.heights()[c];
            let mut placed = false;
            while self.cursor[c] <= height {
                let r = self.cursor[c];
                self.cursor[c] += 1;
                if self.used[r as usize] {
                    continue;
                }
                self.word.push(r);
                if self.admissible() {
                    self.used[r as usize] = true;
                    placed = true;
                    break;
                }
                self.word.pop();
            }
            if placed {
                if self.word.len() == m {
                    let out = Filling::new_unchecked(self.board.clone(), self.word.clone());
                    let r = self.word.pop().unwrap();
                    self.used[r as usize] = false;
                    return Some(out);
                }
                self.cursor[c + 1] = 1;
            } else {
                match self.word.pop() {
                    Some(r) => self.used[r as usize] = false,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// All fillings of `board` avoiding `avoid`, in the deterministic stream order.
pub fn enumerate_fillings(board: &FerrersBoard, avoid: &PatternSet) -> Fillings {
    Fillings::new(board, avoid)
}

/// `|F(S)|` for a single board.
pub fn count_fillings(board: &FerrersBoard, avoid: &PatternSet) -> u64 {
    Fillings::new(board, avoid).count() as u64
}

/// Per-board filling counts for every board of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoardCountTable {
    pub n: usize,
    pub entries: Vec<(FerrersBoard, u64)>,
}

impl BoardCountTable {
    pub fn compute(n: usize, avoid: &PatternSet) -> Self {
        let entries = enumerate_boards(n)
            .into_iter()
            .map(|b| {
                let c = count_fillings(&b, avoid);
                (b, c)
            })
            .collect();
        BoardCountTable { n, entries }
    }

    pub fn get(&self, board: &FerrersBoard) -> Option<u64> {
        self.entries.iter().find(|(b, _)| b == board).map(|&(_, c)| c)
    }
}
