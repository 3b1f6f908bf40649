//! Permutation patterns, partially ordered patterns (POPs), Ferrers board
//! fillings, and the constructive bijections behind a family of
//! shape-Wilf-equivalences.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs; IO, parallel drivers, OEIS access and the CLI live
//! in the `shapewilf` companion crate.
//!
//! Notation follows the usual conventions of the field: permutations are
//! 1-based words, `⊕` is the direct sum, `r`, `c`, `i` are reverse,
//! complement and inverse.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod bijection;
pub mod equivalence;
pub mod ferrers;
pub mod pattern;
pub mod perm;
pub mod pop;
pub mod set;

pub use ferrers::{FerrersBoard, Filling};
pub use perm::{ParseError, Permutation};
pub use pop::{FanPop, Pop, PopError};
pub use set::PatternSet;

/// A classical pattern is just a permutation of length `k >= 1`.
pub type Pattern = Permutation;
