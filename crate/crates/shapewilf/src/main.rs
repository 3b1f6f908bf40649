use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use shapewilf::oeis::{self, align_and_compare, OeisClient, OeisId};
use shapewilf::oracles::{build_oracle, BijectionName};
use shapewilf::parallel;
use shapewilf::report::{self, CheckKind, CheckRecord, Format, Label};
use shapewilf::suite::{run_suite, SuiteName, SuiteOptions};
use shapewilf_core::equivalence::{CountSequence, Mode};
use shapewilf_core::ferrers::{count_fillings, enumerate_boards, enumerate_fillings};
use shapewilf_core::{FerrersBoard, Filling, PatternSet};

const EXIT_DIVERGENCE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Pattern avoidance, Ferrers-board fillings and shape-Wilf-equivalence checks.
///
/// Exit status: 0 when every verdict is equal or every check passes, 1 on a
/// divergence or failed verification, 2 on a usage error.
#[derive(Parser)]
#[command(name = "shapewilf", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Use only the cache and the bundled snapshot for OEIS data.
    #[arg(long, global = true)]
    offline: bool,
    /// OEIS cache directory (default: $SHAPEWILF_CACHE_DIR or ~/.cache/shapewilf).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seconds to spend extending counts beyond their required length.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_budget: Option<f64>,
    /// Include wall-clock times in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EquivalenceArg {
    Wilf,
    ShapeWilf,
}

#[derive(Subcommand)]
enum Command {
    /// Print |Av_n(S)| for n = 1..N.
    CountAv {
        #[arg(long, value_parser = parse_set)]
        set: PatternSet,
        #[arg(long, default_value_t = 9)]
        n: usize,
    },
    /// Compare two sets for Wilf or shape-Wilf-equivalence.
    Check {
        kind: EquivalenceArg,
        #[arg(long, value_parser = parse_set)]
        left: PatternSet,
        #[arg(long, value_parser = parse_set)]
        right: PatternSet,
        /// Default 9 for wilf, 6 for shape-wilf.
        #[arg(long)]
        n: Option<usize>,
        /// Keep going past the first divergent size.
        #[arg(long)]
        full: bool,
    },
    /// Run a named suite of checks.
    Suite {
        name: SuiteName,
        #[arg(long, default_value_t = 9)]
        wilf_n: usize,
        #[arg(long, default_value_t = 6)]
        shape_n: usize,
        #[arg(long, default_value_t = 5)]
        bijection_n: usize,
        #[arg(long, default_value_t = 9)]
        oeis_n: usize,
        /// Upper length for OEIS comparisons extended under --time-budget.
        #[arg(long, default_value_t = 13)]
        oeis_n_max: usize,
    },
    /// Map one filling, or verify a bijection on all small boards.
    Bijection {
        name: BijectionName,
        /// Source set (of the inner map for transfer).
        #[arg(long, value_parser = parse_set)]
        from: PatternSet,
        /// Target set (of the inner map for transfer).
        #[arg(long, value_parser = parse_set)]
        to: PatternSet,
        /// The set T of a transfer S(+)T -> S'(+)T.
        #[arg(long, value_parser = parse_set)]
        suffix: Option<PatternSet>,
        /// A filling such as "[3,3,3]/321".
        #[arg(long, value_parser = parse_filling, conflicts_with = "verify", required_unless_present = "verify")]
        filling: Option<Filling>,
        /// Print one line per recursion level.
        #[arg(long)]
        trace: bool,
        /// Check every board with up to N columns.
        #[arg(long, value_name = "N")]
        verify: Option<usize>,
    },
    /// List the boards with n columns that admit a filling.
    Boards {
        #[arg(long)]
        n: usize,
        /// Count fillings avoiding this set (default: all fillings).
        #[arg(long, value_parser = parse_set)]
        avoid: Option<PatternSet>,
    },
    /// List the fillings of a board avoiding a set.
    Fillings {
        #[arg(long, value_parser = parse_board)]
        board: FerrersBoard,
        #[arg(long, value_parser = parse_set)]
        avoid: Option<PatternSet>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Fetch or compare OEIS b-files.
    #[command(subcommand)]
    Oeis(OeisCommand),
}

#[derive(Subcommand)]
enum OeisCommand {
    /// Print a sequence from cache, network or the bundled snapshot.
    Fetch { id: String },
    /// Compare |Av_n(S)| for n = 1..N with a sequence.
    Compare {
        #[arg(long, value_parser = parse_set)]
        set: PatternSet,
        #[arg(long, default_value = "A224295")]
        id: String,
        #[arg(long, default_value_t = 9)]
        n: usize,
    },
}

fn parse_set(s: &str) -> Result<PatternSet, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_filling(s: &str) -> Result<Filling, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_board(s: &str) -> Result<FerrersBoard, String> {
    s.parse().map_err(|e| format!("{e}"))
}

struct Ctx {
    format: Format,
    offline: bool,
    cache_dir: Option<PathBuf>,
    time_budget: Option<Duration>,
    timings: bool,
}

impl Ctx {
    fn client(&self) -> OeisClient {
        let mut c = OeisClient::from_env().offline(self.offline);
        if let Some(d) = &self.cache_dir {
            c = c.with_cache_dir(Some(d.clone()));
        }
        c
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn verdict_code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DIVERGENCE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            return usage(e);
        }
    }
    let time_budget = match cli.time_budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => return usage("--time-budget must be a nonnegative number"),
        s => s.map(Duration::from_secs_f64),
    };
    let ctx = Ctx { format: cli.format, offline: cli.offline, cache_dir: cli.cache_dir, time_budget, timings: cli.timings };
    match cli.command {
        Command::CountAv { set, n } => count_av(&ctx, &set, n),
        Command::Check { kind, left, right, n, full } => check(&ctx, kind, &left, &right, n, full),
        Command::Suite { name, wilf_n, shape_n, bijection_n, oeis_n, oeis_n_max } => {
            let opts = SuiteOptions {
                wilf_n,
                shape_n,
                bijection_n,
                oeis_n,
                oeis_n_max,
                time_budget: ctx.time_budget,
                timings: ctx.timings,
            };
            let records = run_suite(name, &opts, &ctx.client());
            print!("{}", report::render_records(&records, ctx.format));
            verdict_code(records.iter().all(|r| r.passed))
        }
        Command::Bijection { name, from, to, suffix, filling, trace, verify } => {
            bijection(&ctx, name, &from, &to, suffix.as_ref(), filling.as_ref(), trace, verify)
        }
        Command::Boards { n, avoid } => boards(&ctx, n, avoid.as_ref()),
        Command::Fillings { board, avoid, limit } => fillings(&ctx, &board, avoid.as_ref(), limit),
        Command::Oeis(cmd) => oeis_cmd(&ctx, cmd),
    }
}

fn count_av(ctx: &Ctx, set: &PatternSet, n: usize) -> ExitCode {
    match parallel::count_terms(set, n) {
        Ok(t) => {
            print!("{}", report::render_counts(&set.to_string(), &t[1..], ctx.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DIVERGENCE)
        }
    }
}

fn check(ctx: &Ctx, kind: EquivalenceArg, left: &PatternSet, right: &PatternSet, n: Option<usize>, full: bool) -> ExitCode {
    let start = Instant::now();
    let mode = if full { Mode::Full } else { Mode::FailFast };
    let report = match kind {
        EquivalenceArg::Wilf => match parallel::wilf_table(left, right, n.unwrap_or(9), mode) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_DIVERGENCE);
            }
        },
        EquivalenceArg::ShapeWilf => parallel::shape_wilf_table(left, right, n.unwrap_or(6), mode),
    };
    let witness = report.first_divergence.as_ref().map(|d| match &d.board {
        Some(b) => format!("n = {}, board {b}: {} vs {}", d.n, d.left, d.right),
        None => format!("n = {}: {} vs {}", d.n, d.left, d.right),
    });
    let sym = if matches!(kind, EquivalenceArg::Wilf) { "~" } else { "~s" };
    let record = CheckRecord {
        suite: None,
        check: "check".into(),
        kind: report.kind.into(),
        label: Label::Verification,
        claim: format!("{left} {sym} {right}"),
        parameters: BTreeMap::from([
            ("left".to_string(), left.to_string()),
            ("right".to_string(), right.to_string()),
            ("n_max".to_string(), report.n_max.to_string()),
        ]),
        verdict: report.to_string(),
        passed: report.is_equal(),
        witness,
        wall_time_ms: ctx.timings.then(|| start.elapsed().as_millis()),
    };
    print!("{}", report::render_equivalence(&report, &record, ctx.format));
    verdict_code(report.is_equal())
}

#[allow(clippy::too_many_arguments)]
fn bijection(
    ctx: &Ctx,
    name: BijectionName,
    from: &PatternSet,
    to: &PatternSet,
    suffix: Option<&PatternSet>,
    filling: Option<&Filling>,
    trace: bool,
    verify: Option<usize>,
) -> ExitCode {
    let oracle = match build_oracle(name, from, to, suffix) {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    if let Some(n) = verify {
        let start = Instant::now();
        let r = parallel::verify_bijection(&*oracle, n);
        let record = CheckRecord {
            suite: None,
            check: name.as_str().into(),
            kind: CheckKind::Bijection,
            label: Label::Verification,
            claim: format!("{} is a shape-preserving bijection {} -> {}", r.oracle, oracle.source_set(), oracle.target_set()),
            parameters: BTreeMap::from([("n_max".to_string(), n.to_string())]),
            verdict: r.to_string(),
            passed: r.passed(),
            witness: r.violation.as_ref().map(ToString::to_string),
            wall_time_ms: ctx.timings.then(|| start.elapsed().as_millis()),
        };
        print!("{}", report::render_records(std::slice::from_ref(&record), ctx.format));
        return verdict_code(r.passed());
    }
    let f = filling.expect("clap requires --filling without --verify");
    match oracle.map_traced(f) {
        Ok((g, records)) => {
            match ctx.format {
                Format::JsonLines => {
                    let trace_lines: Vec<String> =
                        if trace { records.iter().map(ToString::to_string).collect() } else { Vec::new() };
                    println!(
                        "{}",
                        serde_json::json!({ "bijection": oracle.name(), "input": f.to_string(), "output": g.to_string(), "trace": trace_lines })
                    );
                }
                Format::Csv => {
                    println!("input,output");
                    println!("\"{f}\",\"{g}\"");
                }
                Format::Table => {
                    if trace {
                        for r in &records {
                            println!("{r}");
                        }
                    }
                    println!("{f} -> {g}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DIVERGENCE)
        }
    }
}

fn boards(ctx: &Ctx, n: usize, avoid: Option<&PatternSet>) -> ExitCode {
    let set = avoid.cloned().unwrap_or_default();
    let mut out = String::new();
    match ctx.format {
        Format::Table => writeln!(out, "{:<24} fillings", "board").unwrap(),
        Format::Csv => writeln!(out, "n,board,fillings").unwrap(),
        Format::JsonLines => {}
    }
    for b in enumerate_boards(n) {
        let c = count_fillings(&b, &set);
        match ctx.format {
            Format::Table => writeln!(out, "{:<24} {c}", b.to_string()).unwrap(),
            Format::Csv => writeln!(out, "{n},\"{b}\",{c}").unwrap(),
            Format::JsonLines => {
                writeln!(out, "{}", serde_json::json!({ "n": n, "board": b.to_string(), "fillings": c })).unwrap()
            }
        }
    }
    print!("{out}");
    ExitCode::SUCCESS
}

fn fillings(ctx: &Ctx, board: &FerrersBoard, avoid: Option<&PatternSet>, limit: Option<usize>) -> ExitCode {
    let set = avoid.cloned().unwrap_or_default();
    let mut out = String::new();
    if ctx.format == Format::Csv {
        out.push_str("filling\n");
    }
    for f in enumerate_fillings(board, &set).take(limit.unwrap_or(usize::MAX)) {
        match ctx.format {
            Format::Table => writeln!(out, "{f}").unwrap(),
            Format::Csv => writeln!(out, "\"{f}\"").unwrap(),
            Format::JsonLines => writeln!(out, "{}", serde_json::json!({ "filling": f.to_string() })).unwrap(),
        }
    }
    print!("{out}");
    ExitCode::SUCCESS
}

fn oeis_cmd(ctx: &Ctx, cmd: OeisCommand) -> ExitCode {
    let client = ctx.client();
    let fetch = |id: &str| -> Result<oeis::Sequence, ExitCode> {
        let id: OeisId = id.parse().map_err(usage)?;
        client.fetch_sequence(&id).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DIVERGENCE)
        })
    };
    match cmd {
        OeisCommand::Fetch { id } => {
            let seq = match fetch(&id) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let mut out = String::new();
            match ctx.format {
                Format::Table => {
                    writeln!(out, "# {} ({}, {} terms)", seq.id, seq.provenance, seq.entries.len()).unwrap();
                    out.push_str(&oeis::serialize_bfile(&seq.entries));
                }
                Format::Csv => {
                    out.push_str("index,value\n");
                    for e in &seq.entries {
                        writeln!(out, "{},{}", e.index, e.value).unwrap();
                    }
                }
                Format::JsonLines => {
                    for e in &seq.entries {
                        let v = serde_json::json!({ "id": seq.id.to_string(), "provenance": seq.provenance, "index": e.index, "value": e.value.to_string() });
                        writeln!(out, "{v}").unwrap();
                    }
                }
            }
            print!("{out}");
            ExitCode::SUCCESS
        }
        OeisCommand::Compare { set, id, n } => {
            let seq = match fetch(&id) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let start = Instant::now();
            let terms = match parallel::count_terms_within(&set, n, n.max(13), ctx.time_budget.or(Some(Duration::ZERO))) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_DIVERGENCE);
                }
            };
            let computed = CountSequence::from_terms_from_zero(set.clone(), &terms);
            let r = match align_and_compare(&computed, &seq) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let record = CheckRecord {
                suite: None,
                check: "oeis-compare".into(),
                kind: CheckKind::OeisCompare,
                label: Label::Verification,
                claim: format!("Av_n({set}) is {}", seq.id),
                parameters: BTreeMap::from([
                    ("n_max".to_string(), computed.len().to_string()),
                    ("provenance".to_string(), seq.provenance.to_string()),
                ]),
                verdict: format!(
                    "matched {} of {} computed terms (offset {})",
                    r.matched_prefix_length,
                    r.computed_terms,
                    r.alignment_offset.map_or("none".to_string(), |o| o.to_string())
                ),
                passed: r.full_match(),
                witness: r.first_mismatch.as_ref().map(|m| {
                    let p = m.published.as_ref().map_or("none".to_string(), ToString::to_string);
                    format!("n = {}: computed {} vs published {p}", m.n, m.computed)
                }),
                wall_time_ms: ctx.timings.then(|| start.elapsed().as_millis()),
            };
            print!("{}", report::render_records(std::slice::from_ref(&record), ctx.format));
            verdict_code(r.full_match())
        }
    }
}
