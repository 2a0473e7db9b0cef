//! Generalized Petersen graphs `P(n,m)`.
//!
//! Vertices are `u_1..u_n` on the outer cycle and `v_1..v_n` on the inner
//! cycles. Subscripts are 1-based at every public boundary and stored 0-based
//! internally. The linear layout used by distance tables is the outer block
//! `0..n` followed by the inner block `n..2n`.

use std::fmt;

use crate::error::{Error, Result};

/// Parameters of `P(n,m)` with `n >= 3` and `1 <= m <= (n-1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GPParams {
    n: usize,
    m: usize,
}

impl GPParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 3 || m < 1 || m > (n - 1) / 2 {
            return Err(Error::InvalidParams { n, m });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    /// `u_i`, with `i` taken modulo `n` (so `u_0 = u_n`).
    pub fn u(&self, i: i64) -> VertexRef {
        VertexRef::outer(i, self.n)
    }

    /// `v_i`, with `i` taken modulo `n`.
    pub fn v(&self, i: i64) -> VertexRef {
        VertexRef::inner(i, self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        (0..self.vertex_count()).map(move |x| VertexRef::from_linear(x, self.n))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ring {
    Outer,
    Inner,
}

impl Ring {
    pub fn prefix(self) -> char {
        match self {
            Ring::Outer => 'u',
            Ring::Inner => 'v',
        }
    }
}

/// A vertex `u_i` or `v_i`. Orders by ring first (outer before inner), then
/// by subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    ring: Ring,
    pos: u32,
}

/// Reduces an arbitrary integer subscript to the 0-based position mod `n`.
pub(crate) fn wrap(i: i64, n: usize) -> u32 {
    (i - 1).rem_euclid(n as i64) as u32
}

impl VertexRef {
    pub fn new(ring: Ring, subscript: i64, n: usize) -> Self {
        Self { ring, pos: wrap(subscript, n) }
    }

    pub fn outer(subscript: i64, n: usize) -> Self {
        Self::new(Ring::Outer, subscript, n)
    }

    pub fn inner(subscript: i64, n: usize) -> Self {
        Self::new(Ring::Inner, subscript, n)
    }

    /// Strict constructor: the subscript must already lie in `1..=n`.
    pub fn checked(ring: Ring, subscript: i64, n: usize) -> Result<Self> {
        if subscript < 1 || subscript > n as i64 {
            return Err(Error::SubscriptOutOfRange { subscript, n });
        }
        Ok(Self::new(ring, subscript, n))
    }

    pub fn from_linear(index: usize, n: usize) -> Self {
        if index < n {
            Self { ring: Ring::Outer, pos: index as u32 }
        } else {
            Self { ring: Ring::Inner, pos: (index - n) as u32 }
        }
    }

    pub fn linear(&self, n: usize) -> usize {
        match self.ring {
            Ring::Outer => self.pos as usize,
            Ring::Inner => n + self.pos as usize,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// 1-based subscript.
    pub fn subscript(&self) -> usize {
        self.pos as usize + 1
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos as usize
    }

    pub fn is_outer(&self) -> bool {
        self.ring == Ring::Outer
    }

    /// The spoke partner: `u_i <-> v_i`.
    pub fn corresponding(&self) -> Self {
        let ring = match self.ring {
            Ring::Outer => Ring::Inner,
            Ring::Inner => Ring::Outer,
        };
        Self { ring, pos: self.pos }
    }

    /// Outer-cycle projection: `v_i -> u_i`, `u_i -> u_i`.
    pub fn projected(&self) -> Self {
        Self { ring: Ring::Outer, pos: self.pos }
    }

    /// Rotates the subscript by `shift` (mod `n`).
    pub fn rotated(&self, shift: i64, n: usize) -> Self {
        Self::new(self.ring, self.subscript() as i64 + shift, n)
    }

    pub fn belongs_to(&self, n: usize) -> bool {
        (self.pos as usize) < n
    }

    /// Parses `"u17"` / `"v38"` and checks the subscript against `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let parse_err = || Error::Parse { what: "vertex", input: s.to_string() };
        let s = s.trim();
        let mut chars = s.chars();
        let ring = match chars.next() {
            Some('u') | Some('U') => Ring::Outer,
            Some('v') | Some('V') => Ring::Inner,
            _ => return Err(parse_err()),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let subscript: i64 = digits.parse().map_err(|_| parse_err())?;
        Self::checked(ring, subscript, n)
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ring.prefix(), self.subscript())
    }
}

/// The cubic graph `P(n,m)` as an adjacency array over the linear layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPInstance {
    params: GPParams,
    adjacency: Vec<[u32; 3]>,
}

/// Builds `P(n,m)` with edges `u_i u_{i+1}`, `u_i v_i` and `v_i v_{i+m}`.
pub fn build_graph(params: GPParams) -> GPInstance {
    let n = params.n;
    let m = params.m;
    let adjacency = (0..2 * n)
        .map(|x| {
            if x < n {
                [((x + 1) % n) as u32, ((x + n - 1) % n) as u32, (n + x) as u32]
            } else {
                let p = x - n;
                [p as u32, (n + (p + m) % n) as u32, (n + (p + n - m) % n) as u32]
            }
        })
        .collect();
    GPInstance { params, adjacency }
}

impl GPInstance {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        Ok(build_graph(GPParams::new(n, m)?))
    }

    pub fn params(&self) -> GPParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub(crate) fn linear_neighbors(&self, x: usize) -> &[u32; 3] {
        &self.adjacency[x]
    }

    pub fn neighbors(&self, x: VertexRef) -> Result<[VertexRef; 3]> {
        let n = self.n();
        if !x.belongs_to(n) {
            return Err(Error::ForeignVertex { vertex: x, n });
        }
        Ok(self.adjacency[x.linear(n)].map(|y| VertexRef::from_linear(y as usize, n)))
    }

    /// Unordered edge list over linear indices, each edge once with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().map(move |&b| (a, b as usize)))
            .filter(|&(a, b)| a < b)
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn nbrs(g: &GPInstance, x: VertexRef) -> BTreeSet<VertexRef> {
        g.neighbors(x).unwrap().into_iter().collect()
    }

    #[test]
    fn smallest_legal_instance() {
        let g = GPInstance::new(3, 1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        for x in 0..6 {
            let set: BTreeSet<_> = g.linear_neighbors(x).iter().collect();
            assert_eq!(set.len(), 3);
        }
    }

    #[test]
    fn parameter_domain() {
        assert!(GPParams::new(38, 19).is_err());
        assert!(GPParams::new(38, 18).is_ok());
        assert!(GPParams::new(8, 3).is_ok());
        assert!(GPParams::new(7, 3).is_ok());
        assert!(GPParams::new(6, 3).is_err());
        assert!(GPParams::new(2, 1).is_err());
        assert!(GPParams::new(10, 0).is_err());
    }

    #[test]
    fn neighbor_lists() {
        let g = GPInstance::new(38, 3).unwrap();
        let p = g.params();
        assert_eq!(nbrs(&g, p.u(1)), [p.u(2), p.u(38), p.v(1)].into());

        let g = GPInstance::new(39, 3).unwrap();
        let p = g.params();
        assert_eq!(nbrs(&g, p.v(1)), [p.u(1), p.v(4), p.v(37)].into());
        assert_eq!(nbrs(&g, p.u(39)), [p.u(38), p.u(1), p.v(39)].into());

        let g = GPInstance::new(10, 2).unwrap();
        let p = g.params();
        assert_eq!(nbrs(&g, p.v(2)), [p.u(2), p.v(4), p.v(10)].into());
    }

    #[test]
    fn foreign_vertex_rejected() {
        let g = GPInstance::new(10, 2).unwrap();
        let x = VertexRef::outer(12, 20);
        assert!(matches!(g.neighbors(x), Err(Error::ForeignVertex { .. })));
        assert!(VertexRef::checked(Ring::Outer, 0, 10).is_err());
        assert!(VertexRef::checked(Ring::Inner, 11, 10).is_err());
    }

    #[test]
    fn subscript_wraps_zero_to_n() {
        assert_eq!(VertexRef::outer(0, 39).subscript(), 39);
        assert_eq!(VertexRef::outer(40, 39).subscript(), 1);
        assert_eq!(VertexRef::inner(-2, 39).subscript(), 37);
    }

    #[test]
    fn parse_and_display() {
        let x = VertexRef::parse("v38", 38).unwrap();
        assert_eq!(x.to_string(), "v38");
        assert_eq!(x.linear(38), 75);
        assert!(VertexRef::parse("v39", 38).is_err());
        assert!(VertexRef::parse("w3", 38).is_err());
        assert!(VertexRef::parse("u", 38).is_err());
    }

    fn components(g: &GPInstance, inner_only: bool) -> usize {
        let n = g.n();
        let mut seen = vec![false; 2 * n];
        let mut count = 0;
        let range = if inner_only { n..2 * n } else { 0..2 * n };
        for s in range.clone() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                for &y in g.linear_neighbors(x) {
                    let y = y as usize;
                    if range.contains(&y) && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    #[test]
    fn inner_cycles_split_when_three_divides_n() {
        for n in 7..=120 {
            let g = GPInstance::new(n, 3).unwrap();
            let expected = if n % 3 == 0 { 3 } else { 1 };
            assert_eq!(components(&g, true), expected, "n = {n}");
            assert_eq!(components(&g, false), 1);
        }
    }

    #[test]
    fn cubic_and_edge_set_for_all_small_params() {
        for n in 3..=60 {
            for m in 1..=(n - 1) / 2 {
                let g = GPInstance::new(n, m).unwrap();
                assert_eq!(g.edge_count(), 3 * n);
                let edges: BTreeSet<_> = g.edges().into_iter().collect();
                let mut expected = BTreeSet::new();
                for i in 0..n {
                    let mut add = |a: usize, b: usize| {
                        expected.insert((a.min(b), a.max(b)));
                    };
                    add(i, (i + 1) % n);
                    add(i, n + i);
                    add(n + i, n + (i + m) % n);
                }
                assert_eq!(edges, expected, "P({n},{m})");
                for x in 0..2 * n {
                    let set: BTreeSet<_> = g.linear_neighbors(x).iter().collect();
                    assert_eq!(set.len(), 3, "P({n},{m}) vertex {x}");
                }
            }
        }
    }
}
