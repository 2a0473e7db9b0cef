//! Metric representations and resolving sets.

mod search;
mod upper;
mod witnesses;

use std::fmt;

pub use search::{exhaust_size, metric_dimension, DimensionResult, ExhaustedSize, SearchOptions, SearchVerdict, DEFAULT_MAX_SIZE};
pub use upper::{canonical_set_6k2, expected_rep_6k2, verify_upper, RepMismatch, UpperCheck};
pub use witnesses::{witness_claims, verify_witnesses, WitnessCheck, WitnessClaim, WitnessResult};

use crate::error::{Error, Result};
use crate::graph::VertexRef;
use crate::oracle::DistanceOracle;
use crate::recognition::is_good;

/// An ordered, nonempty list of distinct landmarks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LandmarkSet(Vec<VertexRef>);

impl LandmarkSet {
    pub fn new(landmarks: Vec<VertexRef>) -> Result<Self> {
        if landmarks.is_empty() {
            return Err(Error::EmptyLandmarks);
        }
        for (t, w) in landmarks.iter().enumerate() {
            if landmarks[..t].contains(w) {
                return Err(Error::DuplicateLandmark(*w));
            }
        }
        Ok(Self(landmarks))
    }

    /// Parses a comma- or whitespace-separated list such as `"u1,u16,v17,v38"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let vs = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| VertexRef::parse(t, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vs)
    }

    pub(crate) fn from_linear(indices: &[usize], n: usize) -> Self {
        Self(indices.iter().map(|&x| VertexRef::from_linear(x, n)).collect())
    }

    pub fn as_slice(&self) -> &[VertexRef] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexRef> {
        self.0.iter()
    }

    pub fn contains(&self, x: &VertexRef) -> bool {
        self.0.contains(x)
    }

    /// `self` with `x` appended; fails if `x` is already present.
    pub fn with(&self, x: VertexRef) -> Result<Self> {
        let mut v = self.0.clone();
        v.push(x);
        Self::new(v)
    }

    fn check_vertices(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|w| !w.belongs_to(n)) {
            Some(&vertex) => Err(Error::ForeignVertex { vertex, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for LandmarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (t, w) in self.0.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// `r(z|W)`: distances from `z` to each landmark, in landmark order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetricRepresentation(pub Vec<u16>);

impl fmt::Display for MetricRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (t, d) in self.0.iter().enumerate() {
            if t > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

pub fn representation(oracle: &DistanceOracle, z: VertexRef, w: &LandmarkSet) -> MetricRepresentation {
    MetricRepresentation(w.iter().map(|&l| oracle.distance(z, l)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// The lexicographically smallest pair `a < b` with equal representations.
    Collision(VertexRef, VertexRef),
}

impl Resolution {
    pub fn is_resolving(&self) -> bool {
        matches!(self, Resolution::Resolving)
    }
}

pub fn is_resolving(oracle: &DistanceOracle, w: &LandmarkSet) -> Result<Resolution> {
    let n = oracle.n();
    w.check_vertices(n)?;
    let cols: Vec<&[u16]> = w.iter().map(|l| oracle.row(l.linear(n))).collect();
    let mut order: Vec<usize> = (0..oracle.vertex_count()).collect();
    // sort by (representation, index); equal keys end up adjacent and
    // ascending, so each group's first two members are its smallest pair
    order.sort_by(|&a, &b| cols.iter().map(|c| c[a]).cmp(cols.iter().map(|c| c[b])).then(a.cmp(&b)));
    let same = |a: usize, b: usize| cols.iter().all(|c| c[a] == c[b]);
    let best = order
        .windows(2)
        .enumerate()
        .filter(|&(t, p)| same(p[0], p[1]) && (t == 0 || !same(order[t - 1], p[0])))
        .map(|(_, p)| (p[0], p[1]))
        .min();
    Ok(match best {
        None => Resolution::Resolving,
        Some((a, b)) => Resolution::Collision(VertexRef::from_linear(a, n), VertexRef::from_linear(b, n)),
    })
}

/// Smallest outer subscript that no landmark recognizes, if any.
pub fn unrecognized_outer(oracle: &DistanceOracle, w: &LandmarkSet) -> Result<Option<usize>> {
    w.check_vertices(oracle.n())?;
    Ok((1..=oracle.n()).find(|&i| w.iter().all(|&l| is_good(oracle, i as i64, l))))
}

/// Every resolving set recognizes every outer vertex: an unrecognized `u_i`
/// has the same representation as `u_{i+2}`.
pub fn recognizes_all_outer(oracle: &DistanceOracle, w: &LandmarkSet) -> Result<bool> {
    Ok(unrecognized_outer(oracle, w)?.is_none())
}
