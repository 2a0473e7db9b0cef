//! Report model and its three serializations.
//!
//! JSON lines: a `meta` record followed by one `finding` record per line.
//! CSV: one fixed header per finding kind (see [`csv_header`]).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Computed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepTiming {
    pub step: String,
    pub ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub version: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<StepTiming>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMiss {
    pub a: String,
    pub b: String,
    pub closed: u16,
    pub bfs: u16,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMiss {
    pub row: String,
    pub param: Option<i64>,
    pub target: String,
    pub predicted: Vec<usize>,
    pub computed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepMiss {
    pub vertex: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhausted {
    pub size: usize,
    pub candidates: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Finding {
    Distances {
        n: usize,
        in_domain: bool,
        pairs_checked: usize,
        mismatches: usize,
        examples: Vec<DistanceMiss>,
    },
    Tables {
        n: usize,
        k: usize,
        in_domain: bool,
        rows: usize,
        instances: usize,
        mismatches: Vec<TableMiss>,
    },
    GoodList {
        n: usize,
        k: usize,
        in_domain: bool,
        vertex: String,
        source: String,
        expected: Vec<usize>,
        missing: Vec<usize>,
        unexpected: Vec<usize>,
    },
    Lower {
        n: usize,
        in_domain: bool,
        size: usize,
        symmetry: bool,
        candidates: Option<u64>,
        found: Option<String>,
    },
    Upper {
        n: usize,
        k: usize,
        in_domain: bool,
        set: String,
        collision: Option<(String, String)>,
        rep_mismatches: Vec<RepMiss>,
        distinct: bool,
        coordinate_gaps: Vec<i64>,
    },
    Witness {
        n: usize,
        k: usize,
        in_domain: bool,
        group: String,
        claim: String,
        set: String,
        a: String,
        b: String,
        rep_a: String,
        rep_b: String,
        stated: Option<String>,
        holds: bool,
    },
    Dimension {
        n: usize,
        m: usize,
        dimension: Option<usize>,
        witness: Option<String>,
        exhausted: Vec<Exhausted>,
        symmetry: bool,
        max_size: usize,
    },
}

impl Finding {
    /// The checked claim does not hold for this instance.
    pub fn failed(&self) -> bool {
        match self {
            Finding::Distances { mismatches, .. } => *mismatches > 0,
            Finding::Tables { mismatches, .. } => !mismatches.is_empty(),
            Finding::GoodList { missing, unexpected, .. } => !missing.is_empty() || !unexpected.is_empty(),
            Finding::Lower { found, .. } => found.is_some(),
            Finding::Upper { collision, rep_mismatches, distinct, .. } => {
                collision.is_some() || !rep_mismatches.is_empty() || !distinct
            }
            Finding::Witness { holds, .. } => !holds,
            Finding::Dimension { .. } => false,
        }
    }

    pub fn in_domain(&self) -> bool {
        match self {
            Finding::Distances { in_domain, .. }
            | Finding::Tables { in_domain, .. }
            | Finding::GoodList { in_domain, .. }
            | Finding::Lower { in_domain, .. }
            | Finding::Upper { in_domain, .. }
            | Finding::Witness { in_domain, .. } => *in_domain,
            Finding::Dimension { .. } => true,
        }
    }

    /// A failure that counts against the report: outside the validated
    /// domain a failed check is informational.
    pub fn is_mismatch(&self) -> bool {
        self.failed() && self.in_domain()
    }

    fn kind(&self) -> &'static str {
        match self {
            Finding::Distances { .. } => "distances",
            Finding::Tables { .. } => "tables",
            Finding::GoodList { .. } => "good-list",
            Finding::Lower { .. } => "lower",
            Finding::Upper { .. } => "upper",
            Finding::Witness { .. } => "witness",
            Finding::Dimension { .. } => "dimension",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub meta: Meta,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new(command: String, params: BTreeMap<String, String>, computed: bool, findings: Vec<Finding>) -> Self {
        let status = if computed {
            Status::Computed
        } else if findings.iter().any(Finding::is_mismatch) {
            Status::Failed
        } else {
            Status::Verified
        };
        let meta = Meta { command, params, version: env!("CARGO_PKG_VERSION").to_string(), status, timing: None };
        Self { meta, findings }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum Line {
    Meta(Meta),
    Finding(Finding),
}

pub fn to_jsonl(report: &Report) -> String {
    let mut out = String::new();
    let mut push = |line: &Line| {
        out.push_str(&serde_json::to_string(line).expect("report records serialize"));
        out.push('\n');
    };
    push(&Line::Meta(report.meta.clone()));
    for f in &report.findings {
        push(&Line::Finding(f.clone()));
    }
    out
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("report has no meta record")]
    MissingMeta,
    #[error("line {0}: second meta record")]
    DuplicateMeta(usize),
}

pub fn from_jsonl(text: &str) -> Result<Report, ParseError> {
    let mut meta = None;
    let mut findings = Vec::new();
    for (t, raw) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        match serde_json::from_str(raw).map_err(|source| ParseError::Json { line: t + 1, source })? {
            Line::Meta(m) if meta.is_none() => meta = Some(m),
            Line::Meta(_) => return Err(ParseError::DuplicateMeta(t + 1)),
            Line::Finding(f) => findings.push(f),
        }
    }
    Ok(Report { meta: meta.ok_or(ParseError::MissingMeta)?, findings })
}

/// Fixed CSV header for each finding kind.
pub fn csv_header(kind: &str) -> &'static [&'static str] {
    match kind {
        "distances" => &["n", "pairs_checked", "mismatches"],
        "tables" => &["n", "k", "rows", "instances", "mismatches", "in_domain"],
        "good-list" => &["n", "vertex", "source", "expected", "missing", "unexpected", "in_domain"],
        "lower" => &["n", "size", "symmetry", "candidates", "found", "in_domain"],
        "upper" => &["k", "n", "set", "resolving", "rep_mismatches", "distinct", "coordinate_gaps", "in_domain"],
        "witness" => &["n", "group", "set", "a", "b", "rep_a", "rep_b", "stated", "holds"],
        "dimension" => &["n", "m", "dimension", "witness", "exhausted", "symmetry", "max_size"],
        _ => &[],
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

fn csv_row(f: &Finding) -> Vec<String> {
    match f {
        Finding::Distances { n, pairs_checked, mismatches, .. } => {
            vec![n.to_string(), pairs_checked.to_string(), mismatches.to_string()]
        }
        Finding::Tables { n, k, rows, instances, mismatches, in_domain } => vec![
            n.to_string(),
            k.to_string(),
            rows.to_string(),
            instances.to_string(),
            mismatches.len().to_string(),
            in_domain.to_string(),
        ],
        Finding::GoodList { n, vertex, source, expected, missing, unexpected, in_domain, .. } => vec![
            n.to_string(),
            vertex.clone(),
            source.clone(),
            join(expected),
            join(missing),
            join(unexpected),
            in_domain.to_string(),
        ],
        Finding::Lower { n, size, symmetry, candidates, found, in_domain } => vec![
            n.to_string(),
            size.to_string(),
            symmetry.to_string(),
            opt(candidates),
            opt(found),
            in_domain.to_string(),
        ],
        Finding::Upper { n, k, set, collision, rep_mismatches, distinct, coordinate_gaps, in_domain } => vec![
            k.to_string(),
            n.to_string(),
            set.clone(),
            collision.is_none().to_string(),
            rep_mismatches.len().to_string(),
            distinct.to_string(),
            join(coordinate_gaps),
            in_domain.to_string(),
        ],
        Finding::Witness { n, group, set, a, b, rep_a, rep_b, stated, holds, .. } => vec![
            n.to_string(),
            group.clone(),
            set.clone(),
            a.clone(),
            b.clone(),
            rep_a.clone(),
            rep_b.clone(),
            opt(stated),
            holds.to_string(),
        ],
        Finding::Dimension { n, m, dimension, witness, exhausted, symmetry, max_size } => vec![
            n.to_string(),
            m.to_string(),
            opt(dimension),
            opt(witness),
            exhausted.iter().map(|e| format!("{}:{}", e.size, e.candidates)).collect::<Vec<_>>().join(" "),
            symmetry.to_string(),
            max_size.to_string(),
        ],
    }
}

/// One CSV block per finding kind, in order of first appearance, separated
/// by a blank line.
pub fn to_csv(report: &Report) -> String {
    let mut kinds: Vec<&str> = Vec::new();
    for f in &report.findings {
        if !kinds.contains(&f.kind()) {
            kinds.push(f.kind());
        }
    }
    let blocks: Vec<String> = kinds
        .iter()
        .map(|kind| {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(csv_header(kind)).expect("in-memory csv write");
            for f in report.findings.iter().filter(|f| f.kind() == *kind) {
                w.write_record(csv_row(f)).expect("in-memory csv write");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv output is utf-8")
        })
        .collect();
    blocks.join("\n")
}

fn mark(f: &Finding) -> &'static str {
    match (f.failed(), f.in_domain()) {
        (false, _) => "ok  ",
        (true, true) => "FAIL",
        (true, false) => "note",
    }
}

fn human_line(f: &Finding, out: &mut String) {
    let m = mark(f);
    let extra = if f.in_domain() { "" } else { "  [outside validated domain]" };
    let _ = match f {
        Finding::Distances { n, pairs_checked, mismatches, examples, .. } => {
            let _ = writeln!(out, "{m} n={n}: {pairs_checked} pairs, {mismatches} mismatches{extra}");
            for e in examples {
                let _ = writeln!(out, "       d({}, {}) closed form {} vs BFS {}", e.a, e.b, e.closed, e.bfs);
            }
            Ok(())
        }
        Finding::Tables { n, k, rows, instances, mismatches, .. } => {
            let _ = writeln!(out, "{m} n={n} (k={k}): {rows} rows, {instances} instances, {} mismatches{extra}", mismatches.len());
            for x in mismatches {
                let _ = writeln!(
                    out,
                    "       {} i={} ({}): predicted {:?}, computed {:?}",
                    x.row,
                    opt(&x.param),
                    x.target,
                    x.predicted,
                    x.computed
                );
            }
            Ok(())
        }
        Finding::GoodList { n, vertex, source, expected, missing, unexpected, .. } => writeln!(
            out,
            "{m} n={n} {vertex}: {} good vertices ({source}); missing [{}] unexpected [{}]{extra}",
            expected.len(),
            join(missing),
            join(unexpected)
        ),
        Finding::Lower { n, size, candidates, found, .. } => match found {
            None => writeln!(out, "{m} n={n}: no resolving set of size {size} ({} candidates){extra}", opt(candidates)),
            Some(w) => writeln!(out, "{m} n={n}: size {size} resolving set {w}{extra}"),
        },
        Finding::Upper { n, k, set, collision, rep_mismatches, distinct, coordinate_gaps, .. } => {
            let res = match collision {
                None => "resolving".to_string(),
                Some((a, b)) => format!("collision {a} ~ {b}"),
            };
            let _ = writeln!(
                out,
                "{m} k={k} n={n} {set}: {res}, {} representation mismatches, distinct={distinct}, gaps [{}]{extra}",
                rep_mismatches.len(),
                join(coordinate_gaps)
            );
            for x in rep_mismatches {
                let _ = writeln!(out, "       {}: expected {} computed {}", x.vertex, x.expected, x.computed);
            }
            Ok(())
        }
        Finding::Witness { n, group, set, a, b, rep_a, rep_b, stated, .. } => {
            let stated = stated.as_ref().map(|s| format!(" stated {s}")).unwrap_or_default();
            writeln!(out, "{m} n={n} [{group}] {set}: r({a})={rep_a} r({b})={rep_b}{stated}{extra}")
        }
        Finding::Dimension { n, m: mm, dimension, witness, exhausted, symmetry, max_size } => {
            let sizes = join(&exhausted.iter().map(|e| e.size).collect::<Vec<_>>());
            match (dimension, witness) {
                (Some(d), Some(w)) => writeln!(
                    out,
                    "dim P({n},{mm}) = {d}, basis {w}; sizes ruled out [{sizes}] (symmetry {symmetry})"
                ),
                _ => writeln!(out, "dim P({n},{mm}) > {max_size}; sizes ruled out [{sizes}]"),
            }
        }
    };
}

pub fn to_human(report: &Report) -> String {
    let mut out = String::new();
    let params = report.meta.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    let status = match report.meta.status {
        Status::Verified => "verified",
        Status::Failed => "FAILED",
        Status::Computed => "computed",
    };
    let _ = writeln!(out, "gpdim {} {} ({params})", report.meta.version, report.meta.command);
    for f in &report.findings {
        human_line(f, &mut out);
    }
    if let Some(timing) = &report.meta.timing {
        for t in timing {
            let _ = writeln!(out, "  {:>10.1} ms  {}", t.ms, t.step);
        }
    }
    let failed = report.findings.iter().filter(|f| f.is_mismatch()).count();
    let _ = writeln!(out, "status: {status} ({} findings, {failed} failed)", report.findings.len());
    out
}
