//! Command execution: turns parsed arguments into a [`Report`].

use std::collections::BTreeMap;
use std::time::Instant;

use gpdim_core::recognition::{verify_tables, GoodListCheck, GoodListSource};
use gpdim_core::resolving::{verify_upper, verify_witnesses, Resolution};
use gpdim_core::{
    bfs_oracle, exhaust_size, metric_dimension, verify_formulas_for, Domain, LandmarkSet, SearchOptions, SearchVerdict,
};

use crate::args::{DimArgs, Selection, VerifyKind};
use crate::report::{DistanceMiss, Exhausted, Finding, RepMiss, Report, StepTiming, TableMiss};

/// The distance table holds `4n^2` 16-bit entries, 32 MB at this bound.
pub const MAX_N: usize = 2000;

/// Mismatch examples kept per distance finding.
const MAX_EXAMPLES: usize = 10;

#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Domain(#[from] gpdim_core::Error),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError::Invalid(msg.into()))
}

pub fn parse_range(s: &str) -> Result<(usize, usize), UsageError> {
    let bad = || UsageError::Invalid(format!("range must be lo:hi with lo <= hi, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn parse_mod6(s: &str) -> Result<Vec<usize>, UsageError> {
    let mut out = Vec::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match t.parse::<usize>() {
            Ok(r) if r < 6 => {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
            _ => return invalid(format!("--mod6 expects residues 0..5, got {t:?}")),
        }
    }
    if out.is_empty() {
        return invalid("--mod6 is empty");
    }
    out.sort_unstable();
    Ok(out)
}

fn check_n(n: usize) -> Result<(), UsageError> {
    if n > MAX_N {
        return invalid(format!("n = {n} exceeds the supported maximum {MAX_N}"));
    }
    Ok(())
}

struct Timer {
    enabled: bool,
    steps: Vec<StepTiming>,
}

impl Timer {
    fn time<T>(&mut self, step: impl FnOnce() -> String, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.steps.push(StepTiming { step: step(), ms: start.elapsed().as_secs_f64() * 1e3 });
        }
        out
    }

    fn finish(self, report: &mut Report) {
        if self.enabled {
            report.meta.timing = Some(self.steps);
        }
    }
}

fn domain(unchecked: bool) -> Domain {
    if unchecked {
        Domain::Unchecked
    } else {
        Domain::Checked
    }
}

fn selection_params(kind: VerifyKind, sel: &Selection) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    if let Some(n) = sel.n {
        p.insert("n".into(), n.to_string());
    }
    if let Some(k) = sel.k {
        p.insert("k".into(), k.to_string());
    }
    if let Some(r) = &sel.range {
        p.insert("range".into(), r.clone());
    }
    if let Some(m) = &sel.mod6 {
        p.insert("mod6".into(), m.clone());
    }
    if sel.unchecked {
        p.insert("unchecked".into(), "true".into());
    }
    if kind == VerifyKind::Lower {
        p.insert("symmetry".into(), (!sel.no_symmetry).to_string());
    }
    p
}

/// Residues a verification kind has claims for.
fn supported_residues(kind: VerifyKind) -> &'static [usize] {
    match kind {
        VerifyKind::Upper => &[2],
        VerifyKind::WitnessPairs => &[3, 4, 5],
        _ => &[2, 3, 4, 5],
    }
}

/// Resolves the selection to a list of `n`, enforcing the validated domain
/// unless `--unchecked`.
fn instances(kind: VerifyKind, sel: &Selection) -> Result<Vec<usize>, UsageError> {
    let supported = supported_residues(kind);
    let residues = match &sel.mod6 {
        Some(s) => parse_mod6(s)?,
        None => supported.to_vec(),
    };
    // lower bounds are searched on BFS tables, so any residue is allowed when
    // unchecked; every other kind needs a formula, table or catalog
    let bfs_only = kind == VerifyKind::Lower && sel.unchecked;
    for &r in &residues {
        if !supported.contains(&r) && !bfs_only {
            let hint = if kind == VerifyKind::Lower { " (pass --unchecked to search anyway)" } else { "" };
            return invalid(format!("verify {} has no claims for n = {r} (mod 6){hint}", kind.name()));
        }
    }
    let from_k = |k: usize| residues.iter().map(move |&r| 6 * k + r);
    let mut ns: Vec<usize> = match (sel.n, sel.k, &sel.range) {
        (Some(n), None, None) => vec![n],
        (None, Some(k), None) => from_k(k).collect(),
        (None, None, Some(r)) => {
            let (lo, hi) = parse_range(r)?;
            if kind.indexed_by_k() {
                (lo..=hi).flat_map(from_k).collect()
            } else {
                (lo..=hi).filter(|n| residues.contains(&(n % 6))).collect()
            }
        }
        (None, None, None) => return invalid("one of --n, --k or --range is required"),
        _ => return invalid("--n, --k and --range are mutually exclusive"),
    };
    ns.sort_unstable();
    ns.dedup();
    if ns.is_empty() {
        return invalid("the selection contains no instances");
    }
    for &n in &ns {
        check_n(n)?;
        if !residues.contains(&(n % 6)) {
            return invalid(format!("n = {n} is not in the selected residues {residues:?}"));
        }
        if n < 7 {
            return invalid(format!("n = {n} is too small for P(n,3)"));
        }
        if n < 38 && !sel.unchecked {
            return invalid(format!("n = {n} has k < 6, outside the validated domain; pass --unchecked to run it"));
        }
    }
    Ok(ns)
}

fn in_domain(n: usize) -> bool {
    n >= 38 && (2..=5).contains(&(n % 6))
}

pub fn verify(kind: VerifyKind, sel: &Selection, timing: bool) -> Result<Report, UsageError> {
    let ns = instances(kind, sel)?;
    let dom = domain(sel.unchecked);
    let mut timer = Timer { enabled: timing, steps: Vec::new() };
    let mut findings = Vec::new();
    for n in ns {
        let label = || format!("{} n={n}", kind.name());
        let new = timer.time(label, || verify_one(kind, n, dom, sel))?;
        findings.extend(new);
    }
    let mut report = Report::new(format!("verify {}", kind.name()), selection_params(kind, sel), false, findings);
    timer.finish(&mut report);
    Ok(report)
}

fn k_of(n: usize) -> usize {
    n / 6
}

fn verify_one(kind: VerifyKind, n: usize, dom: Domain, sel: &Selection) -> Result<Vec<Finding>, UsageError> {
    let in_domain = in_domain(n);
    Ok(match kind {
        VerifyKind::Distances => {
            let check = verify_formulas_for(n, dom)?;
            vec![Finding::Distances {
                n,
                in_domain,
                pairs_checked: check.pairs_checked,
                mismatches: check.mismatches.len(),
                examples: check
                    .mismatches
                    .iter()
                    .take(MAX_EXAMPLES)
                    .map(|m| DistanceMiss { a: m.a.to_string(), b: m.b.to_string(), closed: m.closed, bfs: m.bfs })
                    .collect(),
            }]
        }
        VerifyKind::Tables => {
            let check = verify_tables(&bfs_oracle(n, 3)?, dom)?;
            vec![Finding::Tables {
                n,
                k: check.class.k,
                in_domain,
                rows: check.rows,
                instances: check.instances_checked,
                mismatches: check
                    .mismatches
                    .into_iter()
                    .map(|m| TableMiss {
                        row: m.row,
                        param: m.param,
                        target: format!("u{}", m.target),
                        predicted: m.predicted.into_iter().collect(),
                        computed: m.computed.into_iter().collect(),
                    })
                    .collect(),
            }]
        }
        VerifyKind::GoodLists => GoodListCheck::run(&bfs_oracle(n, 3)?, dom)?
            .into_iter()
            .map(|c| Finding::GoodList {
                n,
                k: c.class.k,
                in_domain,
                vertex: c.vertex.to_string(),
                source: match c.source {
                    GoodListSource::Printed => "printed".into(),
                    GoodListSource::Extrapolated => "extrapolated".into(),
                },
                missing: c.missing(),
                unexpected: c.unexpected(),
                expected: c.expected.into_iter().collect(),
            })
            .collect(),
        VerifyKind::Lower => {
            let opts = SearchOptions { symmetry: !sel.no_symmetry, ..SearchOptions::default() };
            let (candidates, found) = match exhaust_size(&bfs_oracle(n, 3)?, 3, &opts)? {
                SearchVerdict::NoneExists { candidates } => (Some(candidates), None),
                SearchVerdict::Found(w) => (None, Some(plain_set(&w))),
            };
            vec![Finding::Lower { n, in_domain, size: 3, symmetry: opts.symmetry, candidates, found }]
        }
        VerifyKind::Upper => {
            let check = verify_upper(&bfs_oracle(n, 3)?, dom)?;
            vec![Finding::Upper {
                n,
                k: check.k,
                in_domain,
                set: plain_set(&check.set),
                collision: match check.resolution {
                    Resolution::Resolving => None,
                    Resolution::Collision(a, b) => Some((a.to_string(), b.to_string())),
                },
                rep_mismatches: check
                    .mismatches
                    .iter()
                    .map(|m| RepMiss {
                        vertex: m.vertex.to_string(),
                        expected: m.expected.to_string(),
                        computed: m.computed.to_string(),
                    })
                    .collect(),
                distinct: check.predicted_distinct,
                coordinate_gaps: check.coordinate_gaps.into_iter().collect(),
            }]
        }
        VerifyKind::WitnessPairs => {
            let check = verify_witnesses(&bfs_oracle(n, 3)?, dom)?;
            check
                .results
                .into_iter()
                .map(|r| Finding::Witness {
                    n,
                    k: k_of(n),
                    in_domain,
                    group: r.group.into(),
                    claim: r.claim.into(),
                    set: plain_set(&r.set),
                    a: r.pair.0.to_string(),
                    b: r.pair.1.to_string(),
                    rep_a: r.reps.0.to_string(),
                    rep_b: r.reps.1.to_string(),
                    stated: r.stated.map(|s| s.to_string()),
                    holds: r.holds,
                })
                .collect()
        }
    })
}

/// `u1 u16 v17 v38`: comma-free, so it stays one CSV field without quoting.
fn plain_set(w: &LandmarkSet) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn dim(args: &DimArgs, timing: bool) -> Result<Report, UsageError> {
    let mut ns: Vec<usize> = match (args.n, &args.range) {
        (Some(n), None) => vec![n],
        (None, Some(r)) => {
            let (lo, hi) = parse_range(r)?;
            (lo..=hi).collect()
        }
        (None, None) => return invalid("one of --n or --range is required"),
        _ => return invalid("--n and --range are mutually exclusive"),
    };
    if let Some(m6) = &args.mod6 {
        let residues = parse_mod6(m6)?;
        ns.retain(|n| residues.contains(&(n % 6)));
    }
    if ns.is_empty() {
        return invalid("the selection contains no instances");
    }
    if args.max_size == 0 {
        return invalid("--max-size must be positive");
    }
    let opts = SearchOptions { symmetry: !args.no_symmetry, ..SearchOptions::default() };
    let mut timer = Timer { enabled: timing, steps: Vec::new() };
    let mut findings = Vec::new();
    for n in ns {
        check_n(n)?;
        let oracle = bfs_oracle(n, args.m)?;
        let r = timer.time(|| format!("dim P({n},{})", args.m), || metric_dimension(&oracle, args.max_size, &opts))?;
        findings.push(Finding::Dimension {
            n,
            m: args.m,
            dimension: r.dimension,
            witness: r.witness.as_ref().map(plain_set),
            exhausted: r.exhausted.iter().map(|e| Exhausted { size: e.size, candidates: e.candidates }).collect(),
            symmetry: r.symmetry,
            max_size: r.max_size,
        });
    }
    let mut params = BTreeMap::new();
    match (args.n, &args.range) {
        (Some(n), _) => params.insert("n".into(), n.to_string()),
        (_, Some(r)) => params.insert("range".into(), r.clone()),
        _ => None,
    };
    if let Some(m6) = &args.mod6 {
        params.insert("mod6".into(), m6.clone());
    }
    params.insert("m".into(), args.m.to_string());
    params.insert("max_size".into(), args.max_size.to_string());
    params.insert("symmetry".into(), opts.symmetry.to_string());
    let mut report = Report::new("dim".into(), params, true, findings);
    timer.finish(&mut report);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sel(n: Option<usize>, k: Option<usize>, range: Option<&str>, mod6: Option<&str>, unchecked: bool) -> Selection {
        Selection {
            n,
            k,
            range: range.map(String::from),
            mod6: mod6.map(String::from),
            unchecked,
            no_symmetry: false,
        }
    }

    #[test]
    fn ranges_and_residues() {
        assert_eq!(parse_range("38:41").unwrap(), (38, 41));
        assert!(parse_range("41:38").is_err());
        assert!(parse_range("38").is_err());
        assert!(parse_range("a:b").is_err());
        assert_eq!(parse_mod6("5,2,2").unwrap(), vec![2, 5]);
        assert!(parse_mod6("6").is_err());
        assert!(parse_mod6("").is_err());
    }

    #[test]
    fn instance_selection() {
        let ns = instances(VerifyKind::Distances, &sel(None, None, Some("38:49"), None, false)).unwrap();
        assert_eq!(ns, vec![38, 39, 40, 41, 44, 45, 46, 47]);
        let ns = instances(VerifyKind::Tables, &sel(None, Some(6), None, Some("2,5"), false)).unwrap();
        assert_eq!(ns, vec![38, 41]);
        let ns = instances(VerifyKind::Upper, &sel(None, None, Some("6:8"), None, false)).unwrap();
        assert_eq!(ns, vec![38, 44, 50]);
        let ns = instances(VerifyKind::WitnessPairs, &sel(None, Some(6), None, None, false)).unwrap();
        assert_eq!(ns, vec![39, 40, 41]);
    }

    #[test]
    fn domain_gating() {
        assert!(instances(VerifyKind::Distances, &sel(Some(20), None, None, None, false)).is_err());
        assert!(instances(VerifyKind::Distances, &sel(Some(20), None, None, None, true)).is_ok());
        assert!(instances(VerifyKind::Distances, &sel(Some(42), None, None, Some("0"), true)).is_err());
        assert!(instances(VerifyKind::Lower, &sel(Some(42), None, None, Some("0"), false)).is_err());
        assert!(instances(VerifyKind::Lower, &sel(Some(42), None, None, Some("0"), true)).is_ok());
        assert!(instances(VerifyKind::Upper, &sel(Some(39), None, None, None, false)).is_err());
        assert!(instances(VerifyKind::Distances, &sel(None, None, None, None, false)).is_err());
        assert!(instances(VerifyKind::Distances, &sel(Some(MAX_N + 2), None, None, None, false)).is_err());
        assert!(instances(VerifyKind::Distances, &sel(None, None, Some("42:42"), None, false)).is_err());
    }
}
