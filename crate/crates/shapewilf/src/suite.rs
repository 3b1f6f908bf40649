//! Named suites of checks and their runner.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use shapewilf_core::equivalence::{Expr, Mode, Verdict};
use shapewilf_core::{PatternSet, Pop};

use crate::oeis::{align_and_compare, OeisClient, OeisId, Transport};
use crate::oracles::{build_oracle, BijectionName};
use crate::parallel;
use crate::report::{CheckKind, CheckRecord, Label};

/// Bumped whenever a suite's checks change.
pub const CATALOG_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum SuiteName {
    MainConjecture,
    Corollary13,
    ConjectureFanMinusOne,
    Conjecture13452,
    NegativeControls,
    All,
}

impl SuiteName {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::MainConjecture => "main-conjecture",
            SuiteName::Corollary13 => "corollary-13",
            SuiteName::ConjectureFanMinusOne => "conjecture-fan-minus-one",
            SuiteName::Conjecture13452 => "conjecture-13452",
            SuiteName::NegativeControls => "negative-controls",
            SuiteName::All => "all",
        }
    }

    pub const SINGLE: [SuiteName; 5] = [
        SuiteName::MainConjecture,
        SuiteName::Corollary13,
        SuiteName::ConjectureFanMinusOne,
        SuiteName::Conjecture13452,
        SuiteName::NegativeControls,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckSpec {
    /// Passes when the verdict matches `expect_equal`.
    Wilf { left: PatternSet, right: PatternSet, expect_equal: bool },
    ShapeWilf { left: PatternSet, right: PatternSet, expect_equal: bool },
    Bijection { name: BijectionName, from: PatternSet, to: PatternSet, suffix: Option<PatternSet> },
    Identity { lhs: String, rhs: String },
    /// Passes when all computed terms match (or, with `expect_match` false,
    /// when some term does not).
    Oeis { set: PatternSet, id: OeisId, expect_match: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub label: Label,
    pub spec: CheckSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteDefinition {
    pub name: SuiteName,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub wilf_n: usize,
    pub shape_n: usize,
    pub bijection_n: usize,
    /// Computed terms compared against OEIS.
    pub oeis_n: usize,
    /// With a time budget, OEIS comparisons keep adding terms up to this length.
    pub oeis_n_max: usize,
    pub time_budget: Option<Duration>,
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            wilf_n: 9,
            shape_n: 6,
            bijection_n: 5,
            oeis_n: 9,
            oeis_n_max: 13,
            time_budget: None,
            timings: false,
        }
    }
}

fn set(s: &str) -> PatternSet {
    s.parse().expect("catalog sets are well formed")
}

fn check(id: impl Into<String>, claim: impl Into<String>, label: Label, spec: CheckSpec) -> Check {
    Check { id: id.into(), claim: claim.into(), label, spec }
}

fn wilf(id: &str, left: &str, right: &str, label: Label) -> Check {
    let spec = CheckSpec::Wilf { left: set(left), right: set(right), expect_equal: true };
    check(id, format!("{} ~ {}", set(left), set(right)), label, spec)
}

fn shape_wilf(id: &str, left: &str, right: &str, label: Label) -> Check {
    let spec = CheckSpec::ShapeWilf { left: set(left), right: set(right), expect_equal: true };
    check(id, format!("{} ~s {}", set(left), set(right)), label, spec)
}

fn identity(id: &str, lhs: &str, rhs: &str) -> Check {
    let spec = CheckSpec::Identity { lhs: lhs.into(), rhs: rhs.into() };
    check(id, format!("{lhs} = {rhs}"), Label::Verification, spec)
}

fn a224295() -> OeisId {
    "A224295".parse().unwrap()
}

/// The 13 sets and their decompositions as direct sums and symmetries.
pub const COROLLARY_SETS: [(&str, &[&str]); 13] = [
    ("{12345,12354}", &["12⊕{123,132}", "({123,213}⊕12)^{rc}"]),
    ("{12354,12435}", &["12⊕{132,213}", "({132,213}⊕12)^{rc}"]),
    ("{12354,12453}", &["12⊕{132,231}", "({213,312}⊕12)^{rc}"]),
    ("{12354,21354}", &["{123,213}⊕21"]),
    ("{12435,12453}", &["12⊕{213,231}", "({132,231}⊕12)^{irc}"]),
    ("{12453,12534}", &["12⊕{231,312}", "({231,312}⊕12)^{rc}"]),
    ("{12453,12543}", &["12⊕{231,321}", "({312,321}⊕12)^{rc}"]),
    ("{12543,21543}", &["{12,21}⊕321"]),
    ("{13254,21354}", &["{132,213}⊕21"]),
    ("{13254,23154}", &["{132,231}⊕21"]),
    ("{21354,21453}", &["21⊕{132,231}", "({213,312}⊕21)^{rc}"]),
    ("{21453,21534}", &["21⊕{231,312}", "({231,312}⊕21)^{rc}"]),
    ("{21453,21543}", &["21⊕{231,321}", "({312,321}⊕21)^{rc}"]),
];

/// The chain reducing `{12,21}⊕321` to `{123,213}⊕12`; its one
/// non-identity step is `321 ~s 123`.
pub const MONOTONE_CHAIN: [(&str, &str); 3] = [
    ("{12,21}⊕321", "(321⊕{12,21})^{rc}"),
    ("(123⊕{12,21})^{rc}", "{12,21}⊕123"),
    ("{12,21}⊕123", "{123,213}⊕12"),
];

pub fn definition(name: SuiteName) -> Vec<SuiteDefinition> {
    use Label::*;
    let checks = match name {
        SuiteName::All => return SuiteName::SINGLE.iter().flat_map(|&s| definition(s)).collect(),
        SuiteName::MainConjecture => vec![
            shape_wilf("fan-core", "123,213", "312,321", Verification),
            shape_wilf("fan-core-plus-12", "12345,21345", "31245,32145", Verification),
            check(
                "transfer-bijection",
                "the red-cell transfer of the fan map {123,213} -> {312,321} is a shape-preserving bijection {12345,21345} -> {31245,32145}",
                Verification,
                CheckSpec::Bijection {
                    name: BijectionName::Transfer,
                    from: set("123,213"),
                    to: set("312,321"),
                    suffix: Some(set("12")),
                },
            ),
            shape_wilf("monotone-prefix", "12453,12543", "21453,21543", Verification),
            identity("monotone-prefix-rc-left", "{12453,12543}^{rc}", "{31245,32145}"),
            identity("monotone-prefix-rc-right", "{21453,21543}^{rc}", "{31254,32154}"),
            wilf("intermediate", "12345,21345", "31254,32154", Verification),
            wilf("main", "12345,12354", "45123,45213", Verification),
            check(
                "main-oeis",
                "Av_n({12345,12354}) is A224295",
                Verification,
                CheckSpec::Oeis { set: set("12345,12354"), id: a224295(), expect_match: true },
            ),
        ],
        SuiteName::Corollary13 => {
            let mut checks = Vec::new();
            for (i, (lhs, _)) in COROLLARY_SETS.iter().enumerate() {
                checks.push(wilf(&format!("set-{:02}", i + 1), lhs, "12345,12354", Verification));
            }
            for (i, (lhs, rhss)) in COROLLARY_SETS.iter().enumerate() {
                for (j, rhs) in rhss.iter().enumerate() {
                    checks.push(identity(&format!("decomposition-{:02}{}", i + 1, ['a', 'b'][j]), lhs, rhs));
                }
            }
            for (j, (lhs, rhs)) in MONOTONE_CHAIN.iter().enumerate() {
                checks.push(identity(&format!("monotone-chain-{}", j + 1), lhs, rhs));
            }
            checks
        }
        SuiteName::ConjectureFanMinusOne => [3usize, 4]
            .into_iter()
            .map(|k| {
                let left = Pop::last_below_all(k).to_pattern_set();
                let right = Pop::single_min(k, k - 1).unwrap().to_pattern_set();
                check(
                    format!("k-{k}"),
                    format!("position {k} below all others ~s position {} below all others (k = {k}): {left} ~s {right}", k - 1),
                    Evidence,
                    CheckSpec::ShapeWilf { left, right, expect_equal: true },
                )
            })
            .collect(),
        SuiteName::Conjecture13452 => vec![check(
            "oeis",
            "Av_n({13452,23451}) is A224295",
            Evidence,
            CheckSpec::Oeis { set: set("13452,23451"), id: a224295(), expect_match: true },
        )],
        SuiteName::NegativeControls => vec![
            check(
                "valley-vs-132-123",
                "{213,312} and {123,132} are not shape-Wilf-equivalent",
                Verification,
                CheckSpec::ShapeWilf { left: set("213,312"), right: set("123,132"), expect_equal: false },
            ),
            check(
                "catalan-vs-oeis",
                "Av_n({123}) is not A224295",
                Verification,
                CheckSpec::Oeis { set: set("123"), id: a224295(), expect_match: false },
            ),
        ],
    };
    vec![SuiteDefinition { name, checks }]
}

fn equivalence_outcome(report: &shapewilf_core::equivalence::EquivalenceReport, label: Label, expect_equal: bool) -> (String, bool, Option<String>) {
    let witness = report.first_divergence.as_ref().map(|d| match &d.board {
        Some(b) => format!("n = {}, board {b}: {} vs {}", d.n, d.left, d.right),
        None => format!("n = {}: {} vs {}", d.n, d.left, d.right),
    });
    let verdict = match (report.verdict, label) {
        (Verdict::EqualUpTo(n), Label::Evidence) => format!("conjecture consistent up to n = {n}"),
        (Verdict::EqualUpTo(n), Label::Verification) => format!("equal up to n = {n}"),
        (Verdict::Diverges, _) => format!("diverges ({})", witness.as_deref().unwrap_or("")),
    };
    (verdict, report.is_equal() == expect_equal, witness)
}

/// Runs one check.
pub fn run_check<T: Transport>(c: &Check, opts: &SuiteOptions, client: &OeisClient<T>) -> CheckRecord {
    let start = Instant::now();
    let mut params = BTreeMap::new();
    let (kind, verdict, passed, witness) = match &c.spec {
        CheckSpec::Wilf { left, right, expect_equal } => {
            params.insert("left".into(), left.to_string());
            params.insert("right".into(), right.to_string());
            params.insert("n_max".into(), opts.wilf_n.to_string());
            match parallel::wilf_table(left, right, opts.wilf_n, Mode::FailFast) {
                Ok(r) => {
                    let (v, p, w) = equivalence_outcome(&r, c.label, *expect_equal);
                    (CheckKind::Wilf, v, p, w)
                }
                Err(e) => (CheckKind::Wilf, format!("error: {e}"), false, None),
            }
        }
        CheckSpec::ShapeWilf { left, right, expect_equal } => {
            params.insert("left".into(), left.to_string());
            params.insert("right".into(), right.to_string());
            params.insert("n_max".into(), opts.shape_n.to_string());
            let r = parallel::shape_wilf_table(left, right, opts.shape_n, Mode::FailFast);
            let (v, p, w) = equivalence_outcome(&r, c.label, *expect_equal);
            (CheckKind::ShapeWilf, v, p, w)
        }
        CheckSpec::Bijection { name, from, to, suffix } => {
            params.insert("bijection".into(), name.as_str().into());
            params.insert("from".into(), from.to_string());
            params.insert("to".into(), to.to_string());
            if let Some(t) = suffix {
                params.insert("suffix".into(), t.to_string());
            }
            params.insert("n_max".into(), opts.bijection_n.to_string());
            match build_oracle(*name, from, to, suffix.as_ref()) {
                Ok(oracle) => {
                    let r = parallel::verify_bijection(&*oracle, opts.bijection_n);
                    let verdict = format!(
                        "{} on {} boards, {} fillings",
                        if r.passed() { "bijective" } else { "violation" },
                        r.boards_checked,
                        r.fillings_checked
                    );
                    (CheckKind::Bijection, verdict, r.passed(), r.violation.map(|v| v.to_string()))
                }
                Err(e) => (CheckKind::Bijection, format!("error: {e}"), false, None),
            }
        }
        CheckSpec::Identity { lhs, rhs } => {
            params.insert("lhs".into(), lhs.clone());
            params.insert("rhs".into(), rhs.clone());
            match (Expr::parse(lhs), Expr::parse(rhs)) {
                (Ok(l), Ok(r)) => {
                    let (l, r) = (l.evaluate(), r.evaluate());
                    if l == r {
                        (CheckKind::SymbolicIdentity, format!("holds: both sides are {l}"), true, None)
                    } else {
                        (CheckKind::SymbolicIdentity, "fails".into(), false, Some(format!("{l} != {r}")))
                    }
                }
                (Err(e), _) | (_, Err(e)) => (CheckKind::SymbolicIdentity, format!("error: {e}"), false, None),
            }
        }
        CheckSpec::Oeis { set, id, expect_match } => {
            params.insert("set".into(), set.to_string());
            params.insert("id".into(), id.to_string());
            let (verdict, passed, witness) = oeis_outcome(set, id, *expect_match, opts, client, &mut params);
            (CheckKind::OeisCompare, verdict, passed, witness)
        }
    };
    CheckRecord {
        suite: None,
        check: c.id.clone(),
        kind,
        label: c.label,
        claim: c.claim.clone(),
        parameters: params,
        verdict,
        passed,
        witness,
        wall_time_ms: opts.timings.then(|| start.elapsed().as_millis()),
    }
}

fn oeis_outcome<T: Transport>(
    set: &PatternSet,
    id: &OeisId,
    expect_match: bool,
    opts: &SuiteOptions,
    client: &OeisClient<T>,
    params: &mut BTreeMap<String, String>,
) -> (String, bool, Option<String>) {
    let seq = match client.fetch_sequence(id) {
        Ok(s) => s,
        Err(e) => return (format!("error: {e}"), false, None),
    };
    params.insert("provenance".into(), seq.provenance.to_string());
    let n_max = if opts.time_budget.is_some() { opts.oeis_n_max.max(opts.oeis_n) } else { opts.oeis_n };
    let terms = match parallel::count_terms_within(set, opts.oeis_n, n_max, opts.time_budget) {
        Ok(t) => t,
        Err(e) => return (format!("error: {e}"), false, None),
    };
    let computed = shapewilf_core::equivalence::CountSequence::from_terms_from_zero(set.clone(), &terms);
    params.insert("n_max".into(), computed.len().to_string());
    let report = match align_and_compare(&computed, &seq) {
        Ok(r) => r,
        Err(e) => return (format!("error: {e}"), false, None),
    };
    let offset = report.alignment_offset.map_or("none".to_string(), |o| o.to_string());
    let verdict = format!(
        "matched {} of {} computed terms (offset {offset}, {} published terms, {})",
        report.matched_prefix_length, report.computed_terms, report.published_terms, seq.provenance
    );
    let witness = report.first_mismatch.as_ref().map(|m| {
        let published = m.published.as_ref().map_or("none".to_string(), ToString::to_string);
        format!("n = {}: computed {} vs published {published}", m.n, m.computed)
    });
    (verdict, report.full_match() == expect_match, witness)
}

/// Runs the checks concurrently; records come back in suite order.
pub fn run_suite<T: Transport>(name: SuiteName, opts: &SuiteOptions, client: &OeisClient<T>) -> Vec<CheckRecord> {
    let jobs: Vec<(SuiteName, Check)> =
        definition(name).into_iter().flat_map(|d| d.checks.into_iter().map(move |c| (d.name, c))).collect();
    jobs.par_iter()
        .map(|(suite, c)| {
            let mut r = run_check(c, opts, client);
            r.suite = Some(suite.as_str().to_string());
            r
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        assert_eq!(definition(SuiteName::All).len(), 5);
        let cor = &definition(SuiteName::Corollary13)[0].checks;
        assert_eq!(cor.iter().filter(|c| matches!(c.spec, CheckSpec::Wilf { .. })).count(), 13);
        for suite in SuiteName::SINGLE {
            let d = definition(suite);
            let mut ids: Vec<_> = d[0].checks.iter().map(|c| c.id.clone()).collect();
            ids.sort();
            ids.dedup();
            assert_eq!(ids.len(), d[0].checks.len(), "{suite:?}");
        }
    }

    #[test]
    fn conjecture_suites_are_evidence() {
        for s in [SuiteName::ConjectureFanMinusOne, SuiteName::Conjecture13452] {
            assert!(definition(s)[0].checks.iter().all(|c| c.label == Label::Evidence));
        }
        assert!(definition(SuiteName::MainConjecture)[0].checks.iter().all(|c| c.label == Label::Verification));
    }

    #[test]
    fn fan_minus_one_sets() {
        let checks = &definition(SuiteName::ConjectureFanMinusOne)[0].checks;
        match &checks[0].spec {
            CheckSpec::ShapeWilf { left, right, .. } => {
                assert_eq!(left, &set("231,321"));
                assert_eq!(right, &set("213,312"));
            }
            other => panic!("{other:?}"),
        }
    }
}
