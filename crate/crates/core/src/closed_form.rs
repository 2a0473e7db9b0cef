//! Residue-class distance formulas for `P(n,3)` with `n mod 6` in `{2,3,4,5}`.
//!
//! Every formula is a function of the cyclic gap `L` between subscripts and
//! the rings of the two endpoints. The special gaps `3k-1`, `3k+1` and
//! `3k+2` are matched exactly, in the order the cases are listed.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{GPParams, VertexRef};
use crate::oracle::{bfs_oracle, DistanceOracle, Provenance};

/// Smallest `k` for which results on `n = 6k + r` are claimed.
pub const MIN_K: usize = 6;

/// `f(L) = L - 2 floor(L/3)`; for `L = 3q + s` with `s < 3` this is `q + s`.
pub const fn f(l: usize) -> usize {
    l - 2 * (l / 3)
}

fn check_subscript(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::SubscriptOutOfRange { subscript: i as i64, n });
    }
    Ok(())
}

/// `min(|i-j|, n-|i-j|)`.
pub fn cyclic_gap(i: usize, j: usize, n: usize) -> Result<usize> {
    check_subscript(i, n)?;
    check_subscript(j, n)?;
    let d = i.abs_diff(j);
    Ok(d.min(n - d))
}

/// Clockwise steps on the outer cycle from subscript `i` to `j`, i.e.
/// `(j - i) mod n`. Only subscripts matter, so the same value applies to any
/// mix of outer and inner vertices. Equal subscripts give 0.
pub fn clockwise_distance(i: usize, j: usize, n: usize) -> Result<usize> {
    check_subscript(i, n)?;
    check_subscript(j, n)?;
    Ok((j + n - i) % n)
}

/// Whether operations insist on `k >= MIN_K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Domain {
    #[default]
    Checked,
    /// Evaluate below the threshold anyway; residues 0 and 1 are still refused.
    Unchecked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Residue {
    R2,
    R3,
    R4,
    R5,
}

impl Residue {
    pub const ALL: [Residue; 4] = [Residue::R2, Residue::R3, Residue::R4, Residue::R5];

    pub fn value(self) -> usize {
        match self {
            Residue::R2 => 2,
            Residue::R3 => 3,
            Residue::R4 => 4,
            Residue::R5 => 5,
        }
    }

    pub fn from_value(r: usize) -> Option<Self> {
        match r {
            2 => Some(Residue::R2),
            3 => Some(Residue::R3),
            4 => Some(Residue::R4),
            5 => Some(Residue::R5),
            _ => None,
        }
    }
}

/// `n = 6k + r` with `r` in `{2,3,4,5}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    pub residue: Residue,
    pub k: usize,
}

impl ResidueClass {
    pub fn of(n: usize, domain: Domain) -> Result<Self> {
        let residue = Residue::from_value(n % 6).ok_or_else(|| Error::OutsideFormulaDomain {
            n,
            reason: format!("n mod 6 = {} has no closed form", n % 6),
        })?;
        let k = n / 6;
        if k == 0 {
            return Err(Error::OutsideFormulaDomain { n, reason: "P(n,3) needs n >= 7".into() });
        }
        if domain == Domain::Checked && k < MIN_K {
            return Err(Error::OutsideFormulaDomain {
                n,
                reason: format!("k = {k} < {MIN_K}; pass the unchecked mode to evaluate anyway"),
            });
        }
        Ok(Self { residue, k })
    }

    pub fn from_parts(residue: Residue, k: usize) -> Self {
        Self { residue, k }
    }

    pub fn n(&self) -> usize {
        6 * self.k + self.residue.value()
    }

    pub fn in_claimed_domain(&self) -> bool {
        self.k >= MIN_K
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = 6*{}+{} = {}", self.k, self.residue.value(), self.n())
    }
}

/// Closed-form distances on one `P(n,3)`.
#[derive(Debug, Clone, Copy)]
pub struct ClosedForm {
    class: ResidueClass,
}

impl ClosedForm {
    pub fn new(n: usize, domain: Domain) -> Result<Self> {
        Ok(Self { class: ResidueClass::of(n, domain)? })
    }

    pub fn class(&self) -> ResidueClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.class.n()
    }

    fn gap(&self, a: usize, b: usize) -> usize {
        let d = a.abs_diff(b);
        d.min(self.n() - d)
    }

    fn outer_outer(&self, l: usize) -> usize {
        let k = self.class.k;
        if l <= 2 {
            l
        } else if self.class.residue == Residue::R5 && l == 3 * k + 2 {
            k + 3
        } else {
            f(l) + 2
        }
    }

    fn outer_inner(&self, l: usize) -> usize {
        let k = self.class.k;
        if self.class.residue == Residue::R5 && l == 3 * k + 2 {
            k + 2
        } else {
            f(l) + 1
        }
    }

    fn inner_inner(&self, l: usize) -> usize {
        let k = self.class.k;
        if l % 3 == 0 {
            return f(l);
        }
        match self.class.residue {
            Residue::R3 => {}
            Residue::R4 if l == 3 * k + 1 => return k + 1,
            Residue::R5 if l == 3 * k - 1 => return k + 2,
            Residue::R5 if l == 3 * k + 2 => return k + 1,
            Residue::R2 if l == 3 * k - 1 => return k + 1,
            _ => {}
        }
        f(l) + 2
    }

    /// Distance by linear index; both indices must be below `2n`.
    pub fn by_index(&self, a: usize, b: usize) -> u16 {
        let n = self.n();
        let (ra, ia) = (a >= n, a % n);
        let (rb, ib) = (b >= n, b % n);
        let l = self.gap(ia, ib);
        let d = match (ra, rb) {
            (false, false) => self.outer_outer(l),
            (true, true) => self.inner_inner(l),
            _ => self.outer_inner(l),
        };
        d as u16
    }

    pub fn distance(&self, a: VertexRef, b: VertexRef) -> Result<u16> {
        let n = self.n();
        for x in [a, b] {
            if !x.belongs_to(n) {
                return Err(Error::ForeignVertex { vertex: x, n });
            }
        }
        Ok(self.by_index(a.linear(n), b.linear(n)))
    }

    /// The full table, tagged with closed-form provenance.
    pub fn oracle(&self) -> DistanceOracle {
        let w = 2 * self.n();
        let table = (0..w).flat_map(|a| (0..w).map(move |b| (a, b))).map(|(a, b)| self.by_index(a, b)).collect();
        let params = GPParams::new(self.n(), 3).expect("n >= 8 admits m = 3");
        DistanceOracle::from_table(params, table, Provenance::ClosedForm)
    }
}

pub fn closed_form_distance(n: usize, a: VertexRef, b: VertexRef, domain: Domain) -> Result<u16> {
    ClosedForm::new(n, domain)?.distance(a, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaMismatch {
    pub a: VertexRef,
    pub b: VertexRef,
    pub closed: u16,
    pub bfs: u16,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub class: ResidueClass,
    pub pairs_checked: usize,
    pub mismatches: Vec<FormulaMismatch>,
}

impl FormulaCheck {
    pub fn n(&self) -> usize {
        self.class.n()
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the closed form against BFS on every ordered pair of one `P(n,3)`.
pub fn verify_formulas_for(n: usize, domain: Domain) -> Result<FormulaCheck> {
    let cf = ClosedForm::new(n, domain)?;
    let bfs = bfs_oracle(n, 3)?;
    let w = 2 * n;
    let mut mismatches = Vec::new();
    for a in 0..w {
        let row = bfs.row(a);
        for (b, &expected) in row.iter().enumerate() {
            let closed = cf.by_index(a, b);
            if closed != expected {
                mismatches.push(FormulaMismatch {
                    a: VertexRef::from_linear(a, n),
                    b: VertexRef::from_linear(b, n),
                    closed,
                    bfs: expected,
                });
            }
        }
    }
    Ok(FormulaCheck { class: cf.class(), pairs_checked: w * w, mismatches })
}

/// Runs [`verify_formulas_for`] over each `n`; the first domain error aborts.
pub fn verify_formulas(ns: &[usize], domain: Domain) -> Result<Vec<FormulaCheck>> {
    ns.iter().map(|&n| verify_formulas_for(n, domain)).collect()
}

/// Closed form when available, BFS otherwise.
pub fn best_oracle(n: usize, m: usize) -> Result<DistanceOracle> {
    if m == 3 {
        if let Ok(cf) = ClosedForm::new(n, Domain::Checked) {
            return Ok(cf.oracle());
        }
    }
    bfs_oracle(n, m)
}
