//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use gpdim_core::closed_form::f;
use gpdim_core::recognition::{is_good, shift_good, verify_tables, GoodListCheck};
use gpdim_core::resolving::{recognizes_all_outer, verify_upper, verify_witnesses};
use gpdim_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FORMULA_N: std::ops::RangeInclusive<usize> = 38..=200;
const FORMULA_BUDGET: Duration = Duration::from_secs(10);
const TABLE_K: std::ops::RangeInclusive<usize> = 6..=12;
const LOWER_N: [usize; 8] = [38, 39, 40, 41, 44, 45, 46, 47];
const LOWER_BUDGET_SYMMETRIC: Duration = Duration::from_secs(2);
const LOWER_BUDGET_FULL: Duration = Duration::from_secs(30);
const UPPER_K: std::ops::RangeInclusive<usize> = 6..=20;
const DIM_FOUR_N: [usize; 8] = [38, 39, 40, 41, 44, 45, 46, 47];
const CLI_DIM_N: [usize; 2] = [38, 44];
const WITNESS_K: usize = 6;
const F_GAP_MAX: usize = 400;
const SHIFT_SAMPLES: usize = 5000;
const SUPERSET_SAMPLES: usize = 200;
const WORKER_COUNTS: [&str; 2] = ["1", "4"];

type Outcome = Result<String, String>;

fn residue_ok(n: usize) -> bool {
    (2..=5).contains(&(n % 6))
}

fn closed_form_equivalence() -> Outcome {
    let start = Instant::now();
    let ns: Vec<usize> = FORMULA_N.filter(|&n| residue_ok(n)).collect();
    let mut pairs = 0;
    for &n in &ns {
        let c = verify_formulas_for(n, Domain::Checked).map_err(|e| e.to_string())?;
        if !c.passed() {
            let m = &c.mismatches[0];
            return Err(format!("n = {n}: {} mismatches, first d({}, {}) = {} vs BFS {}", c.mismatches.len(), m.a, m.b, m.closed, m.bfs));
        }
        pairs += c.pairs_checked;
    }
    let took = start.elapsed();
    if took > FORMULA_BUDGET {
        return Err(format!("{} instances took {took:.2?} > {FORMULA_BUDGET:?}", ns.len()));
    }
    Ok(format!("{} instances, {pairs} pairs, 0 mismatches in {took:.2?}", ns.len()))
}

fn each_class(ks: impl Iterator<Item = usize> + Clone) -> impl Iterator<Item = ResidueClass> {
    ks.flat_map(|k| Residue::ALL.into_iter().map(move |r| ResidueClass::from_parts(r, k)))
}

fn table_reproduction() -> Outcome {
    let mut instances = 0;
    for class in each_class(TABLE_K) {
        let o = bfs_oracle(class.n(), 3).map_err(|e| e.to_string())?;
        let t = verify_tables(&o, Domain::Checked).map_err(|e| e.to_string())?;
        if let Some(m) = t.mismatches.first() {
            return Err(format!("n = {}: row {} i = {:?}: predicted {:?}, computed {:?}", class.n(), m.row, m.param, m.predicted, m.computed));
        }
        instances += t.instances_checked;
    }
    Ok(format!("k = {}..{}, {instances} row instances, 0 mismatches", TABLE_K.start(), TABLE_K.end()))
}

fn good_list_reproduction() -> Outcome {
    let mut checks = 0;
    for class in each_class(TABLE_K) {
        let o = bfs_oracle(class.n(), 3).map_err(|e| e.to_string())?;
        for c in GoodListCheck::run(&o, Domain::Checked).map_err(|e| e.to_string())? {
            if !c.passed() {
                return Err(format!("n = {} {}: missing {:?} unexpected {:?}", class.n(), c.vertex, c.missing(), c.unexpected()));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} lists (u1 and v1) equal for k = {}..{}", TABLE_K.start(), TABLE_K.end()))
}

fn lower_bounds() -> Outcome {
    let mut worst = (Duration::ZERO, Duration::ZERO);
    for n in LOWER_N {
        let o = bfs_oracle(n, 3).map_err(|e| e.to_string())?;
        for (symmetry, budget) in [(true, LOWER_BUDGET_SYMMETRIC), (false, LOWER_BUDGET_FULL)] {
            let opts = SearchOptions { symmetry, ..SearchOptions::default() };
            let start = Instant::now();
            let v = exhaust_size(&o, 3, &opts).map_err(|e| e.to_string())?;
            let took = start.elapsed();
            if let SearchVerdict::Found(w) = v {
                return Err(format!("n = {n}: {w} resolves"));
            }
            if took > budget {
                return Err(format!("n = {n} symmetry {symmetry}: {took:.2?} > {budget:?}"));
            }
            if symmetry {
                worst.0 = worst.0.max(took);
            } else {
                worst.1 = worst.1.max(took);
            }
        }
    }
    Ok(format!("no 3-set resolves for n in {LOWER_N:?}; slowest {:.2?} symmetric, {:.2?} full", worst.0, worst.1))
}

fn cli_dimension(n: usize) -> Result<serde_json::Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gpdim"))
        .args(["dim", "--n", &n.to_string(), "--m", "3", "--format", "jsonl"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("gpdim dim --n {n} exited {:?}", out.status.code()));
    }
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    let line = text.lines().nth(1).ok_or("no finding line")?;
    serde_json::from_str(line).map_err(|e| e.to_string())
}

fn upper_bound() -> Outcome {
    for k in UPPER_K {
        let o = bfs_oracle(6 * k + 2, 3).map_err(|e| e.to_string())?;
        let u = verify_upper(&o, Domain::Checked).map_err(|e| e.to_string())?;
        if !u.passed() {
            return Err(format!("k = {k}: {:?}, {} representation mismatches, distinct {}", u.resolution, u.mismatches.len(), u.predicted_distinct));
        }
    }
    for n in CLI_DIM_N {
        let f = cli_dimension(n)?;
        if f["dimension"] != 4 {
            return Err(format!("gpdim dim reports {} for n = {n}", f["dimension"]));
        }
    }
    let mut witnesses = Vec::new();
    for n in DIM_FOUR_N.into_iter().filter(|n| n % 6 != 2) {
        let o = bfs_oracle(n, 3).map_err(|e| e.to_string())?;
        match exhaust_size(&o, 4, &SearchOptions::default()).map_err(|e| e.to_string())? {
            SearchVerdict::Found(w) => witnesses.push(format!("n={n} {w}")),
            SearchVerdict::NoneExists { .. } => return Err(format!("no 4-set resolves P({n},3)")),
        }
    }
    Ok(format!(
        "canonical set resolves and matches for k = {}..{}; dim = 4 for n = {CLI_DIM_N:?}; searched 4-sets: {}",
        UPPER_K.start(),
        UPPER_K.end(),
        witnesses.join(", ")
    ))
}

fn witness_pairs() -> Outcome {
    let mut sets = 0;
    for r in [Residue::R3, Residue::R4, Residue::R5] {
        let n = ResidueClass::from_parts(r, WITNESS_K).n();
        let o = bfs_oracle(n, 3).map_err(|e| e.to_string())?;
        let w = verify_witnesses(&o, Domain::Checked).map_err(|e| e.to_string())?;
        if let Some(f) = w.failures().next() {
            return Err(format!("n = {n} {}: r({}) = {} vs r({}) = {}", f.set, f.pair.0, f.reps.0, f.pair.1, f.reps.1));
        }
        if w.results.is_empty() {
            return Err(format!("n = {n}: no claims"));
        }
        sets += w.results.len();
    }
    Ok(format!("{sets} landmark sets collide on their named pairs at k = {WITNESS_K}"))
}

fn property_suites() -> Outcome {
    for l2 in 0..=F_GAP_MAX {
        for l1 in l2 + 2..=F_GAP_MAX {
            if f(l1) < f(l2) {
                return Err(format!("f({l1}) < f({l2})"));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for r in Residue::ALL {
        let oracles: Vec<_> = TABLE_K.map(|k| bfs_oracle(ResidueClass::from_parts(r, k).n(), 3).unwrap()).collect();
        for _ in 0..SHIFT_SAMPLES {
            let o = &oracles[rng.gen_range(0..oracles.len())];
            let n = o.n();
            let i = rng.gen_range(1..n);
            let j = rng.gen_range(1..=n) as i64;
            if is_good(o, j, o.params().u(1)) && !shift_good(o, i, j + i as i64).map_err(|e| e.to_string())? {
                return Err(format!("shift fails: n = {n}, i = {i}, j = {j}"));
            }
        }
    }

    for (n, m) in [(38, 3), (39, 3), (10, 2), (11, 2)] {
        let o = bfs_oracle(n, m).map_err(|e| e.to_string())?;
        let all: Vec<VertexRef> = o.params().vertices().collect();
        let mut done = 0;
        while done < SUPERSET_SAMPLES {
            let size = rng.gen_range(3..=6.min(all.len()));
            let w = LandmarkSet::new(all.choose_multiple(&mut rng, size).copied().collect()).unwrap();
            let x = *all.choose(&mut rng).unwrap();
            if w.contains(&x) || !is_resolving(&o, &w).unwrap().is_resolving() {
                continue;
            }
            done += 1;
            let bigger = w.with(x).unwrap();
            if !is_resolving(&o, &bigger).unwrap().is_resolving() || !recognizes_all_outer(&o, &w).unwrap() {
                return Err(format!("P({n},{m}): {w} resolves but {bigger} does not"));
            }
        }
    }

    for n in [38, 39] {
        let o = bfs_oracle(n, 3).map_err(|e| e.to_string())?;
        let on = exhaust_size(&o, 3, &SearchOptions::default()).map_err(|e| e.to_string())?;
        let off = exhaust_size(&o, 3, &SearchOptions { symmetry: false, ..SearchOptions::default() }).map_err(|e| e.to_string())?;
        let none = |v: &SearchVerdict| matches!(v, SearchVerdict::NoneExists { .. });
        if none(&on) != none(&off) {
            return Err(format!("P({n},3): symmetry on {on:?}, off {off:?}"));
        }
    }

    for n in [10, 11] {
        let o = bfs_oracle(n, 2).map_err(|e| e.to_string())?;
        let d = metric_dimension(&o, resolving::DEFAULT_MAX_SIZE, &SearchOptions::default()).map_err(|e| e.to_string())?;
        if d.dimension != Some(3) {
            return Err(format!("dim P({n},2) = {:?}", d.dimension));
        }
    }
    Ok(format!(
        "f-gap to {F_GAP_MAX}; shift property x{SHIFT_SAMPLES} per residue; superset x{SUPERSET_SAMPLES} per graph; symmetry on/off; dim P(10,2) = dim P(11,2) = 3"
    ))
}

fn determinism() -> Outcome {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_gpdim"))
            .args(["verify", "lower", "--range", "38:41", "--format", "jsonl"])
            .env("GPDIM_WORKERS", workers)
            .output()
            .map_err(|e| e.to_string())
    };
    let outs = WORKER_COUNTS.iter().map(|w| run(w)).collect::<Result<Vec<_>, _>>()?;
    if outs.iter().any(|o| o.status.code() != Some(0)) {
        return Err("verify lower exited nonzero".into());
    }
    if outs.windows(2).any(|p| p[0].stdout != p[1].stdout) {
        return Err(format!("reports differ across workers {WORKER_COUNTS:?}"));
    }
    Ok(format!("{} identical bytes with workers {WORKER_COUNTS:?}", outs[0].stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("closed-form distances equal BFS", closed_form_equivalence),
        ("recognizer tables reproduce", table_reproduction),
        ("good lists reproduce", good_list_reproduction),
        ("no resolving 3-set (lower bounds)", lower_bounds),
        ("upper bound and dimension 4", upper_bound),
        ("witness pairs collide", witness_pairs),
        ("property suites", property_suites),
        ("deterministic reports", determinism),
    ];
    let mut failed = 0;
    for (t, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", t + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}. {name}: {detail}", t + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
