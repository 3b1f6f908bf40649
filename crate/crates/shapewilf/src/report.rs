//! Human tables, CSV and JSON-lines output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use shapewilf_core::equivalence::{CountRow, EquivalenceKind, EquivalenceReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    JsonLines,
}

/// What a finite check can establish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Label {
    /// Replays a proved statement.
    Verification,
    /// Supports an open conjecture up to some size.
    Evidence,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Verification => "VERIFICATION",
            Label::Evidence => "EVIDENCE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Count,
    Wilf,
    ShapeWilf,
    Bijection,
    SymbolicIdentity,
    OeisCompare,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Count => "count",
            CheckKind::Wilf => "wilf",
            CheckKind::ShapeWilf => "shape-wilf",
            CheckKind::Bijection => "bijection",
            CheckKind::SymbolicIdentity => "symbolic-identity",
            CheckKind::OeisCompare => "oeis-compare",
        }
    }
}

impl From<EquivalenceKind> for CheckKind {
    fn from(k: EquivalenceKind) -> Self {
        match k {
            EquivalenceKind::Wilf => CheckKind::Wilf,
            EquivalenceKind::ShapeWilf => CheckKind::ShapeWilf,
        }
    }
}

/// One machine-readable record per check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub check: String,
    pub kind: CheckKind,
    pub label: Label,
    pub claim: String,
    pub parameters: BTreeMap<String, String>,
    pub verdict: String,
    pub passed: bool,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl CheckRecord {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields")
}

/// Check records in suite order.
pub fn render_records(records: &[CheckRecord], format: Format) -> String {
    let timed = records.iter().any(|r| r.wall_time_ms.is_some());
    match format {
        Format::Table => {
            let mut out = String::new();
            for r in records {
                writeln!(out, "[{}] {} {} {}", r.label.as_str(), r.status(), r.kind.as_str(), r.check).unwrap();
                writeln!(out, "    claim:   {}", r.claim).unwrap();
                writeln!(out, "    verdict: {}", r.verdict).unwrap();
                if let Some(w) = &r.witness {
                    writeln!(out, "    witness: {w}").unwrap();
                }
                if let Some(t) = r.wall_time_ms {
                    writeln!(out, "    time:    {t} ms").unwrap();
                }
            }
            let passed = records.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} checks passed", records.len()).unwrap();
            out
        }
        Format::Csv => {
            let mut w = csv_writer();
            let mut header =
                vec!["suite", "check", "kind", "label", "claim", "parameters", "verdict", "passed", "witness"];
            if timed {
                header.push("wall_time_ms");
            }
            w.write_record(&header).unwrap();
            for r in records {
                let params = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
                let mut row = vec![
                    r.suite.clone().unwrap_or_default(),
                    r.check.clone(),
                    r.kind.as_str().to_string(),
                    r.label.as_str().to_string(),
                    r.claim.clone(),
                    params,
                    r.verdict.clone(),
                    r.passed.to_string(),
                    r.witness.clone().unwrap_or_default(),
                ];
                if timed {
                    row.push(r.wall_time_ms.map(|t| t.to_string()).unwrap_or_default());
                }
                w.write_record(&row).unwrap();
            }
            csv_finish(w)
        }
        Format::JsonLines => records.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect(),
    }
}

#[derive(Serialize)]
struct RowRecord {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    board: Option<String>,
    left_count: u64,
    right_count: u64,
    equal: bool,
}

fn row_record(r: &CountRow) -> RowRecord {
    RowRecord {
        n: r.n,
        board: r.board.as_ref().map(ToString::to_string),
        left_count: r.left,
        right_count: r.right,
        equal: r.equal(),
    }
}

/// The count table of an equivalence report followed by its summary record.
pub fn render_equivalence(report: &EquivalenceReport, record: &CheckRecord, format: Format) -> String {
    let shape = report.kind == EquivalenceKind::ShapeWilf;
    match format {
        Format::Table => {
            let mut out = String::new();
            let board_w = report.rows.iter().filter_map(|r| r.board.as_ref()).map(|b| b.to_string().len()).max();
            let board_w = board_w.unwrap_or(0).max(5);
            if shape {
                writeln!(out, "{:>3}  {:<board_w$}  {:>12}  {:>12}  equal", "n", "board", "left", "right").unwrap();
            } else {
                writeln!(out, "{:>3}  {:>14}  {:>14}  equal", "n", "left", "right").unwrap();
            }
            for r in &report.rows {
                let eq = if r.equal() { "yes" } else { "NO" };
                match &r.board {
                    Some(b) => writeln!(
                        out,
                        "{:>3}  {:<board_w$}  {:>12}  {:>12}  {eq}",
                        r.n,
                        b.to_string(),
                        r.left,
                        r.right
                    )
                    .unwrap(),
                    None => writeln!(out, "{:>3}  {:>14}  {:>14}  {eq}", r.n, r.left, r.right).unwrap(),
                }
            }
            writeln!(out, "{}", report).unwrap();
            out
        }
        Format::Csv => {
            let mut w = csv_writer();
            if shape {
                w.write_record(["n", "board", "left_count", "right_count", "equal"]).unwrap();
            } else {
                w.write_record(["n", "left_count", "right_count", "equal"]).unwrap();
            }
            for r in &report.rows {
                let mut row = vec![r.n.to_string()];
                if shape {
                    row.push(r.board.as_ref().map(ToString::to_string).unwrap_or_default());
                }
                row.extend([r.left.to_string(), r.right.to_string(), r.equal().to_string()]);
                w.write_record(&row).unwrap();
            }
            csv_finish(w)
        }
        Format::JsonLines => {
            let mut out: String =
                report.rows.iter().map(|r| serde_json::to_string(&row_record(r)).unwrap() + "\n").collect();
            out.push_str(&render_records(std::slice::from_ref(record), Format::JsonLines));
            out
        }
    }
}

/// `|Av_n(S)|` for `n = 1..`.
pub fn render_counts(set: &str, terms: &[u64], format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = format!("Av_n({set})\n{:>3}  {:>16}\n", "n", "count");
            for (i, t) in terms.iter().enumerate() {
                writeln!(out, "{:>3}  {:>16}", i + 1, t).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "count"]).unwrap();
            for (i, t) in terms.iter().enumerate() {
                w.write_record([(i + 1).to_string(), t.to_string()]).unwrap();
            }
            csv_finish(w)
        }
        Format::JsonLines => terms
            .iter()
            .enumerate()
            .map(|(i, t)| serde_json::json!({ "set": set, "n": i + 1, "count": t }).to_string() + "\n")
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use shapewilf_core::equivalence::{shape_wilf_table, wilf_table};

    fn record() -> CheckRecord {
        CheckRecord {
            suite: None,
            check: "x".into(),
            kind: CheckKind::Wilf,
            label: Label::Verification,
            claim: "{12} ~ {21}".into(),
            parameters: BTreeMap::new(),
            verdict: "equal".into(),
            passed: true,
            witness: None,
            wall_time_ms: None,
        }
    }

    #[test]
    fn wilf_csv_columns() {
        let r = wilf_table(&"12".parse().unwrap(), &"21".parse().unwrap(), 3).unwrap();
        let csv = render_equivalence(&r, &record(), Format::Csv);
        assert_eq!(csv, "n,left_count,right_count,equal\n1,1,1,true\n2,1,1,true\n3,1,1,true\n");
    }

    #[test]
    fn shape_wilf_csv_quotes_boards() {
        let r = shape_wilf_table(&"12".parse().unwrap(), &"21".parse().unwrap(), 2);
        let csv = render_equivalence(&r, &record(), Format::Csv);
        assert_eq!(csv.lines().next(), Some("n,board,left_count,right_count,equal"));
        assert!(csv.contains("2,\"[2,2]\",1,1,true"), "{csv}");
    }

    #[test]
    fn json_lines_omit_time_unless_measured() {
        let mut r = record();
        let line = render_records(&[r.clone()], Format::JsonLines);
        assert!(!line.contains("wall_time_ms"));
        assert!(line.contains("\"label\":\"VERIFICATION\""));
        r.wall_time_ms = Some(5);
        assert!(render_records(&[r], Format::JsonLines).contains("\"wall_time_ms\":5"));
    }
}
