//! Building bijection oracles from names and pattern sets.

use shapewilf_core::bijection::{
    BijectionError, BijectionOracle, DirectSumTransfer, Figure3Bijection, TopRowBijection,
};
use shapewilf_core::{FanPop, PatternSet, Pop};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum BijectionName {
    /// Between two fans of the same size.
    Fan,
    /// Between a fan and the POP whose last position lies below all others.
    Figure3,
    /// Between {123,213}, {132,213} or {231,312} and the valley {213,312}.
    WedgeValley,
    /// Lifts one of the above from S -> S' to S(+)T -> S'(+)T.
    Transfer,
}

impl BijectionName {
    pub fn as_str(self) -> &'static str {
        match self {
            BijectionName::Fan => "fan",
            BijectionName::Figure3 => "figure3",
            BijectionName::WedgeValley => "wedge-valley",
            BijectionName::Transfer => "transfer",
        }
    }
}

fn fan(set: &PatternSet) -> Result<FanPop, BijectionError> {
    FanPop::from_pattern_set(set).ok_or_else(|| BijectionError::Parameters(format!("{set} is not the pattern set of a fan")))
}

fn is_last_below_all(set: &PatternSet) -> Option<usize> {
    let k = set.max_len()?;
    (Pop::last_below_all(k).to_pattern_set() == *set).then_some(k)
}

fn figure3(from: &PatternSet, to: &PatternSet) -> Result<Figure3Bijection, BijectionError> {
    let mismatch = || BijectionError::Parameters(format!("{from} -> {to} is not a fan / last-below-all pair"));
    if let (Some(f), Some(k)) = (FanPop::from_pattern_set(from), is_last_below_all(to)) {
        return if f.size() == k { Ok(Figure3Bijection::new(f)) } else { Err(mismatch()) };
    }
    if let (Some(k), Some(f)) = (is_last_below_all(from), FanPop::from_pattern_set(to)) {
        return if f.size() == k { Ok(Figure3Bijection::new(f).inverse()) } else { Err(mismatch()) };
    }
    Err(mismatch())
}

/// `from` and `to` are the sets of the map itself, or of the inner map for
/// `transfer`.
pub fn build_oracle(
    name: BijectionName,
    from: &PatternSet,
    to: &PatternSet,
    suffix: Option<&PatternSet>,
) -> Result<Box<dyn BijectionOracle>, BijectionError> {
    Ok(match name {
        BijectionName::Fan => Box::new(TopRowBijection::fan(fan(from)?, fan(to)?)?),
        BijectionName::Figure3 => Box::new(figure3(from, to)?),
        BijectionName::WedgeValley => Box::new(TopRowBijection::from_sets(from, to)?),
        BijectionName::Transfer => {
            let t = suffix.ok_or_else(|| BijectionError::Parameters("transfer needs a suffix set T".into()))?;
            let inner: Box<dyn BijectionOracle> = match figure3(from, to) {
                Ok(b) => Box::new(b),
                Err(_) => Box::new(TopRowBijection::from_sets(from, to)?),
            };
            Box::new(DirectSumTransfer::new(t.clone(), inner)?)
        }
    })
}
