//! Std companion of `shapewilf-core`: OEIS access, parallel drivers, report
//! formats, the named suites, and the pieces behind the `shapewilf` binary.

pub mod oeis;
pub mod oracles;
pub mod parallel;
pub mod report;
pub mod suite;

pub use shapewilf_core;
