//! The four-vertex resolving set for `P(6k+2, 3)` and its representations.
//!
//! `W = (u_1, u_{3k-2}, v_{3k-1}, v_{6k+2})`. Every vertex falls in one of six
//! families (ring and subscript mod 3), each piecewise in `i`.

use std::collections::BTreeSet;

use super::{is_resolving, representation, LandmarkSet, MetricRepresentation, Resolution};
use crate::closed_form::{Domain, MIN_K};
use crate::error::{Error, Result};
use crate::graph::{Ring, VertexRef};
use crate::oracle::DistanceOracle;

/// Below this `k` the piecewise windows overlap and the families lose meaning.
const MIN_K_UNCHECKED: usize = 3;

fn check_k(k: usize, domain: Domain) -> Result<()> {
    let min = match domain {
        Domain::Checked => MIN_K,
        Domain::Unchecked => MIN_K_UNCHECKED,
    };
    if k < min {
        return Err(Error::OutsideFormulaDomain { n: 6 * k + 2, reason: format!("k = {k} is below {min}") });
    }
    Ok(())
}

pub fn canonical_set_6k2(k: usize, domain: Domain) -> Result<LandmarkSet> {
    let kk = k as i64;
    let n = 6 * k + 2;
    if k == 0 || matches!(domain, Domain::Checked) && k < MIN_K {
        return Err(Error::OutsideFormulaDomain { n, reason: format!("k = {k} is below {MIN_K}") });
    }
    LandmarkSet::new(vec![
        VertexRef::outer(1, n),
        VertexRef::outer(3 * kk - 2, n),
        VertexRef::inner(3 * kk - 1, n),
        VertexRef::inner(6 * kk + 2, n),
    ])
}

fn tuple(t: [i64; 4]) -> MetricRepresentation {
    MetricRepresentation(t.iter().map(|&c| c as u16).collect())
}

/// The predicted `r(x|W)` with `W = canonical_set_6k2(k)`.
pub fn expected_rep_6k2(x: VertexRef, k: usize, domain: Domain) -> Result<MetricRepresentation> {
    check_k(k, domain)?;
    let n = 6 * k + 2;
    if !x.belongs_to(n) {
        return Err(Error::ForeignVertex { vertex: x, n });
    }
    let k = k as i64;
    let s = x.subscript() as i64;
    let i = s / 3;
    let t = match (x.ring(), s % 3) {
        (Ring::Outer, 0) => match i {
            1 => [2, k + 1, k + 1, 2],
            _ if i <= k - 2 => [i + 3, k - i + 2, k - i + 2, i + 1],
            _ if i == k - 1 => [k + 2, 1, 3, k],
            _ if i == k => [k + 3, 2, 2, k + 1],
            _ if i <= 2 * k - 1 => [2 * k - i + 3, i - k + 4, i - k + 2, 2 * k - i + 3],
            _ => [3, k + 2, k + 2, 3],
        },
        (Ring::Outer, 1) => match i {
            0 => [0, k + 1, k + 1, 2],
            _ if i <= k - 2 => [i + 2, k - i + 1, k - i + 1, i + 2],
            _ if i == k - 1 => [k + 1, 0, 2, k + 1],
            _ if i == k => [k + 2, 3, 3, k + 2],
            _ if i <= 2 * k - 1 => [2 * k - i + 4, i - k + 3, i - k + 3, 2 * k - i + 2],
            _ => [2, k + 3, k + 1, 2],
        },
        (Ring::Outer, _) => match i {
            0 => [1, k + 2, k, 3],
            _ if i <= k - 3 => [i + 3, k - i + 2, k - i, i + 3],
            _ if i == k - 2 => [k + 1, 2, 2, k + 1],
            _ if i == k - 1 => [k + 2, 1, 1, k + 2],
            _ if i == k => [k + 3, 4, 2, k + 1],
            _ if i <= 2 * k - 1 => [2 * k - i + 3, i - k + 4, i - k + 2, 2 * k - i + 1],
            _ => [1, k + 2, k + 2, 1],
        },
        (Ring::Inner, 0) => match i {
            _ if i <= k - 1 => [i + 2, k - i + 1, k - i + 3, i],
            _ if i == k => [k + 2, 3, 3, k],
            _ if i == k + 1 => [k + 1, 4, 4, k + 1],
            _ if i <= 2 * k - 1 => [2 * k - i + 2, i - k + 3, i - k + 3, 2 * k - i + 4],
            _ => [2, k + 1, k + 3, 4],
        },
        (Ring::Inner, 1) => match i {
            _ if i <= k - 1 => [i + 1, k - i, k - i + 2, i + 3],
            _ if i == k => [k + 1, 2, 4, k + 3],
            _ if i <= 2 * k - 2 => [2 * k - i + 3, i - k + 2, i - k + 4, 2 * k - i + 3],
            _ if i == 2 * k - 1 => [4, k + 1, k + 1, 4],
            _ => [3, k + 2, k, 3],
        },
        (Ring::Inner, _) => match i {
            _ if i <= k - 2 => [i + 2, k - i + 1, k - i - 1, i + 4],
            _ if i == k - 1 => [k + 1, 2, 0, k + 1],
            _ if i == k => [k + 2, 3, 1, k],
            _ if i <= 2 * k - 1 => [2 * k - i + 2, i - k + 3, i - k + 1, 2 * k - i],
            _ => [2, k + 1, k + 1, 0],
        },
    };
    Ok(tuple(t))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMismatch {
    pub vertex: VertexRef,
    pub expected: MetricRepresentation,
    pub computed: MetricRepresentation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperCheck {
    pub k: usize,
    pub n: usize,
    pub set: LandmarkSet,
    pub resolution: Resolution,
    pub mismatches: Vec<RepMismatch>,
    /// All predicted tuples are pairwise distinct.
    pub predicted_distinct: bool,
    /// Observed values of `c1 - c4` and `c2 - c3` over all vertices.
    pub coordinate_gaps: BTreeSet<i64>,
}

impl UpperCheck {
    pub fn passed(&self) -> bool {
        self.resolution.is_resolving() && self.mismatches.is_empty() && self.predicted_distinct
    }
}

/// Checks the canonical set for `n = 6k+2` against `oracle`.
pub fn verify_upper(oracle: &DistanceOracle, domain: Domain) -> Result<UpperCheck> {
    let p = oracle.params();
    let n = p.n();
    if p.m() != 3 {
        return Err(Error::RequiresStepThree { n, m: p.m() });
    }
    if n % 6 != 2 {
        return Err(Error::OutsideFormulaDomain { n, reason: "the construction is for n = 6k+2".into() });
    }
    let k = (n - 2) / 6;
    check_k(k, domain)?;
    let set = canonical_set_6k2(k, domain)?;
    let mut mismatches = Vec::new();
    let mut predicted = BTreeSet::new();
    let mut coordinate_gaps = BTreeSet::new();
    for x in p.vertices() {
        let expected = expected_rep_6k2(x, k, domain)?;
        let computed = representation(oracle, x, &set);
        let c: Vec<i64> = expected.0.iter().map(|&d| d as i64).collect();
        coordinate_gaps.insert(c[0] - c[3]);
        coordinate_gaps.insert(c[1] - c[2]);
        predicted.insert(expected.clone());
        if expected != computed {
            mismatches.push(RepMismatch { vertex: x, expected, computed });
        }
    }
    Ok(UpperCheck {
        k,
        n,
        resolution: is_resolving(oracle, &set)?,
        set,
        mismatches,
        predicted_distinct: predicted.len() == p.vertex_count(),
        coordinate_gaps,
    })
}
