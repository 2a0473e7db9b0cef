//! Recognizer tables: for each residue, the predicted members of `A(u_t)`,
//! `B(u_t)` and `C(u_t)` as `t` ranges over parameterized subscripts.
//!
//! Rows are written in the same notation as the published tables. A run
//! `a,...,b` steps by 3, which keeps it inside one class.

use std::collections::BTreeSet;
use std::fmt;

use super::{recognizers_in_class, OuterClass};
use crate::closed_form::{Domain, Residue, ResidueClass};
use crate::error::{Error, Result};
use crate::graph::{wrap, VertexRef};
use crate::oracle::DistanceOracle;
use crate::subscript::SubscriptExpr;

type RowText = (&'static str, &'static str, &'static str, &'static str);

const TABLE_6K3: &[RowText] = &[
    ("A", "3i-1", "2,5,...,3i+2,3k+3i+2,...,6k+2", "2..k"),
    ("A", "3i", "3i-1,3i+2,...,3k+3i+2", "2..k"),
    ("A", "3k+3i", "2,...,3i-1,3k+3i-1,3k+3i+2,...,6k+2", "1..k-1"),
    ("A", "3k+3i+1", "3k+3i-1,3k+3i+5", "1..k-1"),
    ("B", "3i-1", "3i-3,3i+3", "2..k"),
    ("B", "3i", "3,6,...,3i+3,3k+3i+3,...,6k+3", "2..k"),
    ("B", "3k+3i", "3i,3i+3,...,3k+3i+3", "1..k-1"),
    ("B", "3k+3i+1", "3,...,3i,3k+3i,3k+3i+3,...,6k+3", "1..k-1"),
    ("C", "3i-1", "3i-2,3i+1,...,3k+3i+1", "2..k"),
    ("C", "3i", "3i-2,3i+4", "2..k"),
    ("C", "3k+3i", "3k+3i-2,3k+3i+4", "1..k-1"),
    ("C", "3k+3i+1", "3i+1,3i+4,...,3k+3i+4", "1..k-1"),
];

const TABLE_6K4: &[RowText] = &[
    ("A", "3i-1", "2,5,...,3i+2", "2..k+1"),
    ("A", "3i", "3i-1,3i+2,...,3k+3i+2", "2..k"),
    ("A", "3k+3i+1", "2,...,3i-1,3k+3i-1,3k+3i+5", "1..k-1"),
    ("A", "3k+3i+2", "3i+2,3i+5,...,3k+3i+5", "1..k-1"),
    ("B", "3i-1", "3i-3,3i+3,3k+3i+3,...,6k+3", "2..k"),
    ("B", "3k+2", "3k,3k+6", ""),
    ("B", "3i", "3,6,...,3i+3", "2..k"),
    ("B", "3k+3i+1", "3k+3i,3k+3i+3,...,6k+3", "1..k-1"),
    ("B", "3k+3i+2", "3,...,3i,3k+3i,3k+3i+6", "1..k-1"),
    ("C", "3i-1", "3i-2,3i+1,...,3k+3i+1", "2..k+1"),
    ("C", "3i", "3i-2,3i+4,3k+3i+4,...,6k+4", "2..k"),
    ("C", "3k+3i+1", "3i+1,3i+4,...,3k+3i+4", "1..k-1"),
    ("C", "3k+3i+2", "3k+3i+1,3k+3i+4,...,6k+4", "1..k-1"),
];

const TABLE_6K5: &[RowText] = &[
    ("A", "3i-1", "2,5,...,3i+2", "2..2k"),
    ("A", "3i", "3i-1,3i+2,...,6k+5", "2..2k"),
    ("B", "3i-1", "3i-3,3i+3", "2..2k"),
    ("B", "3i", "3,6,...,3i+3", "2..2k"),
    ("C", "3i-1", "3i-2,3i+1,...,6k+4", "2..2k"),
    ("C", "3i", "3i-2,3i+4", "2..2k"),
];

const TABLE_6K2: &[RowText] = &[
    ("A", "3i-1", "2,5,...,3i+2", "2..k"),
    ("A", "3i", "3i-1,3i+2,...,3k+3i-1,3k+3i+5,...,6k+2", "2..k-1"),
    ("A", "3k", "3k-1,3k+2,...,6k-1", ""),
    ("A", "3k+1", "3k-1,3k+5", ""),
    ("A", "3k+2", "5,8,...,3k+5", ""),
    ("A", "3k+3", "3k+2,3k+5,...,6k+2", ""),
    ("A", "3k+3i+2", "2,...,3i-1,3i+5,...,3k+3i+5", "1..k-2"),
    ("A", "3k+3i+3", "3k+3i+2,3k+3i+5,...,6k+2", "1..k-2"),
    ("B", "3i-1", "3i-3,3i+3", "2..k+1"),
    ("B", "3i", "3,6,...,3i+3", "2..k"),
    ("B", "3k+1", "3k,3k+3,...,6k", ""),
    ("B", "3k+3", "6,9,...,3k+6", ""),
    ("B", "3k+3i+2", "3k+3i,3k+3i+6", "1..k-2"),
    ("B", "3k+3i+3", "3,6,...,3i,3i+6,...,3k+3i+6", "1..k-2"),
    ("C", "3i-1", "3i-2,...,3k+3i-2,3k+3i+4,...,6k+1", "2..k-1"),
    ("C", "3i", "3i-2,3i+4", "2..k+1"),
    ("C", "3k-1", "3k-2,3k+1,...,6k-2", ""),
    ("C", "3k+1", "4,7,...,3k+4", ""),
    ("C", "3k+2", "3k+1,3k+4,...,6k+1", ""),
    ("C", "3k+3i+2", "3k+3i+1,3k+3i+4,...,6k+1", "1..k-2"),
    ("C", "3k+3i+3", "3k+3i+1,3k+3i+7", "1..k-2"),
];

fn table_text(residue: Residue) -> &'static [RowText] {
    match residue {
        Residue::R2 => TABLE_6K2,
        Residue::R3 => TABLE_6K3,
        Residue::R4 => TABLE_6K4,
        Residue::R5 => TABLE_6K5,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemberSpec {
    Single(SubscriptExpr),
    /// `from, from+3, ..., to`; empty when `to < from`.
    Run(SubscriptExpr, SubscriptExpr),
}

impl MemberSpec {
    fn expand(&self, k: i64, i: i64, n: usize, out: &mut BTreeSet<usize>) {
        let mut push = |x: i64| {
            out.insert(wrap(x, n) as usize + 1);
        };
        match *self {
            MemberSpec::Single(e) => push(e.eval(k, i)),
            MemberSpec::Run(a, b) => {
                let (a, b) = (a.eval(k, i), b.eval(k, i));
                let mut x = a;
                while x <= b {
                    push(x);
                    x += 3;
                }
            }
        }
    }
}

fn parse_members(text: &str) -> Result<Vec<MemberSpec>> {
    let err = || Error::Parse { what: "recognizer member list", input: text.to_string() };
    let mut out = Vec::new();
    let mut tokens = text.split(',').map(str::trim).peekable();
    while let Some(tok) = tokens.next() {
        if tok == "..." {
            let start = match out.pop() {
                Some(MemberSpec::Single(e)) => e,
                _ => return Err(err()),
            };
            let end: SubscriptExpr = tokens.next().ok_or_else(err)?.parse()?;
            out.push(MemberSpec::Run(start, end));
        } else {
            out.push(MemberSpec::Single(tok.parse()?));
        }
    }
    Ok(out)
}

/// Inclusive bounds on the row parameter `i`, as expressions in `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowRange {
    pub lo: SubscriptExpr,
    pub hi: SubscriptExpr,
}

impl fmt::Display for RowRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= i <= {}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowInstance {
    pub param: Option<i64>,
    pub target: usize,
    pub predicted: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizerRow {
    pub residue: Residue,
    pub class: OuterClass,
    pub target: SubscriptExpr,
    pub members: Vec<MemberSpec>,
    /// `None` for rows without a parameter.
    pub range: Option<RowRange>,
    /// Concrete instances for the `k` the row was expanded with.
    pub instances: Vec<RowInstance>,
}

impl RecognizerRow {
    /// Identifier such as `C(u_{3k+3i+3})`.
    pub fn id(&self) -> String {
        format!("{}(u_{{{}}})", self.class, self.target)
    }
}

fn parse_class(s: &str) -> Result<OuterClass> {
    match s {
        "A" => Ok(OuterClass::A),
        "B" => Ok(OuterClass::B),
        "C" => Ok(OuterClass::C),
        _ => Err(Error::Parse { what: "class", input: s.to_string() }),
    }
}

fn parse_range(s: &str) -> Result<Option<RowRange>> {
    if s.is_empty() {
        return Ok(None);
    }
    let (lo, hi) = s.split_once("..").ok_or_else(|| Error::Parse { what: "row range", input: s.to_string() })?;
    Ok(Some(RowRange { lo: lo.parse()?, hi: hi.parse()? }))
}

fn expand_row(text: &RowText, class: ResidueClass) -> Result<RecognizerRow> {
    let (cls, target, members, range) = *text;
    let n = class.n();
    let k = class.k as i64;
    let target: SubscriptExpr = target.parse()?;
    let members = parse_members(members)?;
    let range = parse_range(range)?;
    let params: Vec<Option<i64>> = match range {
        None => vec![None],
        Some(r) => (r.lo.eval(k, 0)..=r.hi.eval(k, 0)).map(Some).collect(),
    };
    let instances = params
        .into_iter()
        .map(|param| {
            let i = param.unwrap_or(0);
            let mut predicted = BTreeSet::new();
            for m in &members {
                m.expand(k, i, n, &mut predicted);
            }
            RowInstance { param, target: wrap(target.eval(k, i), n) as usize + 1, predicted }
        })
        .collect();
    Ok(RecognizerRow { residue: class.residue, class: parse_class(cls)?, target, members, range, instances })
}

/// Every row of the table for `n`'s residue, expanded for its `k`. Rows whose
/// range is empty for this `k` have no instances.
pub fn table_rows(n: usize, domain: Domain) -> Result<Vec<RecognizerRow>> {
    let class = ResidueClass::of(n, domain)?;
    table_text(class.residue).iter().map(|t| expand_row(t, class)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: String,
    pub param: Option<i64>,
    pub target: usize,
    pub predicted: BTreeSet<usize>,
    pub computed: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCheck {
    pub class: ResidueClass,
    pub rows: usize,
    pub instances_checked: usize,
    pub mismatches: Vec<TableMismatch>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every table instance against recognizer sets read from `oracle`.
pub fn verify_tables(oracle: &DistanceOracle, domain: Domain) -> Result<TableCheck> {
    let p = oracle.params();
    if p.m() != 3 {
        return Err(Error::RequiresStepThree { n: p.n(), m: p.m() });
    }
    let n = p.n();
    let class = ResidueClass::of(n, domain)?;
    let rows = table_rows(n, domain)?;
    let mut mismatches = Vec::new();
    let mut instances_checked = 0;
    for row in &rows {
        for inst in &row.instances {
            instances_checked += 1;
            let computed = recognizers_in_class(oracle, VertexRef::outer(inst.target as i64, n), row.class)?;
            if computed != inst.predicted {
                mismatches.push(TableMismatch {
                    row: row.id(),
                    param: inst.param,
                    target: inst.target,
                    predicted: inst.predicted.clone(),
                    computed,
                });
            }
        }
    }
    Ok(TableCheck { class, rows: rows.len(), instances_checked, mismatches })
}
