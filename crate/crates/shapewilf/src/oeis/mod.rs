//! OEIS b-files: parsing, a cache-first client and value-aligned comparison
//! against computed counting sequences.

mod bfile;
mod client;
mod compare;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

pub use bfile::{parse_bfile, serialize_bfile, Entry};
pub use client::{
    default_cache_dir, HttpTransport, OeisClient, Transport, TransportError, BUNDLED_A224295, CACHE_DIR_ENV,
    DEFAULT_ENDPOINT, ENDPOINT_ENV,
};
pub use compare::{align_and_compare, ComparisonReport, Mismatch};

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("malformed OEIS id {0:?} (expected A followed by 6 digits)")]
    InvalidId(String),
    #[error("b-file parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0} is not cached, not bundled, and was not found")]
    NotFound(OeisId),
    #[error("{id} is not cached or bundled and the network is unavailable: {message}")]
    Unavailable { id: OeisId, message: String },
    #[error("comparison needs at least 3 computed terms, got {0}")]
    TooFewTerms(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An OEIS A-number such as `A224295`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OeisId(String);

impl OeisId {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `b224295.txt` for `A224295`.
    pub fn bfile_name(&self) -> String {
        format!("b{}.txt", &self.0[1..])
    }
}

impl FromStr for OeisId {
    type Err = OeisError;

    fn from_str(s: &str) -> Result<Self, OeisError> {
        let t = s.trim();
        let digits = t.strip_prefix('A').or_else(|| t.strip_prefix('a'));
        match digits {
            Some(d) if d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()) => Ok(OeisId(format!("A{d}"))),
            _ => Err(OeisError::InvalidId(s.to_string())),
        }
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Where a fetched sequence came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Cache,
    Network,
    Bundled,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Cache => "cache",
            Provenance::Network => "network",
            Provenance::Bundled => "bundled",
        })
    }
}

/// A parsed b-file together with the exact text it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub id: OeisId,
    pub entries: Vec<Entry>,
    pub provenance: Provenance,
    text: String,
}

impl Sequence {
    pub fn from_text(id: OeisId, text: String, provenance: Provenance) -> Result<Self, OeisError> {
        let entries = parse_bfile(&text)?;
        Ok(Sequence { id, entries, provenance, text })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn value_at(&self, index: i64) -> Option<&BigUint> {
        self.entries.iter().find(|e| e.index == index).map(|e| &e.value)
    }
}
