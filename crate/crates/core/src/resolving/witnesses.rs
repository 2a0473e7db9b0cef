//! Unresolved pairs for specific landmark triples.
//!
//! Each claim names a landmark set and a pair of vertices that the set fails
//! to tell apart. A `~` before a landmark means either ring: the claim is
//! checked for every choice. Some claims also state the shared representation.

use super::{representation, LandmarkSet, MetricRepresentation};
use crate::closed_form::{Domain, Residue, ResidueClass};
use crate::error::{Error, Result};
use crate::graph::{Ring, VertexRef};
use crate::oracle::DistanceOracle;
use crate::subscript::SubscriptExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessClaim {
    pub residue: Residue,
    pub group: &'static str,
    pub set: &'static str,
    pub pair: (&'static str, &'static str),
    pub rep: Option<&'static str>,
}

const fn c(residue: Residue, group: &'static str, set: &'static str, a: &'static str, b: &'static str) -> WitnessClaim {
    WitnessClaim { residue, group, set, pair: (a, b), rep: None }
}

const fn r(set: &'static str, a: &'static str, b: &'static str, rep: &'static str) -> WitnessClaim {
    WitnessClaim { residue: Residue::R4, group: "stated representations", set, pair: (a, b), rep: Some(rep) }
}

use Residue::{R3, R4, R5};

const CLAIMS: &[WitnessClaim] = &[
    c(R3, "three consecutive", "~u1 ~u2 ~u3", "u3k+2", "u3k+5"),
    c(R3, "three consecutive", "~u1 ~u5 ~u3", "u3k+1", "u3k+8"),
    c(R3, "rotated", "~u1 ~u2 ~u6k+3", "u3k+1", "u3k+4"),
    c(R3, "rotated", "~u1 ~u6k+2 ~u3", "u3k-1", "u3k+6"),
    c(R3, "rotated", "~u1 ~u6k+2 ~u6k", "u3k-3", "u3k+4"),
    c(R3, "rotated", "~u1 ~u6k+2 ~u6k+3", "u3k", "u3k+3"),
    c(R4, "outer triples", "~u1 ~u3k+1 ~u6k+4", "u3k-9", "u3k+13"),
    c(R4, "outer triples", "~u1 ~u2 ~u3", "u3k+2", "u3k+6"),
    c(R4, "outer triple table", "~u1 ~u3k-1 ~u6k+3", "u3k-9", "u3k+11"),
    c(R4, "outer triple table", "~u1 ~u3k+2 ~u6k+3", "u3k", "u3k+4"),
    c(R4, "outer triple table", "~u1 ~u3k-1 ~u6k-3", "u3k-3", "u3k+1"),
    c(R4, "outer triple table", "~u1 ~u3k-1 ~u6k", "u3k-3", "u3k+1"),
    c(R4, "inner middle", "~u1 v3k-2 ~u6k+4", "u3k-1", "u3k+1"),
    c(R4, "inner middle", "~u1 v3k-2 ~u6k+1", "u3k", "u3k+2"),
    r("u1 u3k-2 u6k+4", "v2", "v6k+2", "2,k+1,3"),
    r("u1 u3k-2 v6k+4", "v2", "v6k+2", "2,k+1,4"),
    r("v1 u3k-2 u6k+4", "v3k-4", "v3k+4", "k+1,3,k+1"),
    r("v1 u3k-2 v6k+4", "u6k+1", "u6k+3", "3,k+3,2"),
    r("u1 u3k-2 u6k+1", "v6k+2", "v6k+4", "2,k+1,2"),
    r("u1 u3k-2 v6k+1", "v3k-3", "v3k+1", "k+1,2,k"),
    r("v1 u3k-2 u6k+1", "v3k-4", "v3k+2", "k+1,3,k+2"),
    r("v1 u3k-2 v6k+1", "u6k+2", "u6k+4", "2,k+2,2"),
    c(R5, "short table", "u1 v5 u6k+5", "v3k+3", "v3k+4"),
    c(R5, "short table", "u1 v5 v6k+5", "u3", "u6k+4"),
    c(R5, "short table", "v1 v5 u6k+5", "v3k", "v3k+7"),
    c(R5, "short table", "v1 u5 u6k+5", "v3", "v6k+4"),
    c(R5, "short table", "v1 u5 v6k+5", "u3k+3", "v3k+7"),
    c(R5, "long table", "v1 u6k-5 u6k+2", "v6k-4", "v6k-2"),
    c(R5, "long table", "v1 v6k-5 u6k+2", "u6k-4", "u6k-2"),
    c(R5, "long table", "u1 u6k-5 v6k+2", "v6k", "v6k+4"),
    c(R5, "long table", "u1 v6k-5 v6k+2", "u6k-4", "u6k-2"),
    c(R5, "long table", "v1 u6k-2 u6k+2", "v6k-1", "v6k+1"),
    c(R5, "long table", "v1 v6k-2 u6k+2", "u6k", "u6k+4"),
    c(R5, "long table", "u1 u6k-2 v6k+2", "v6k", "v6k+4"),
    c(R5, "long table", "u1 v6k-2 v6k+2", "u6k-1", "u6k+1"),
    c(R5, "long table", "v1 u6k+1 v6k+2", "v3k-4", "v3k+3"),
    c(R5, "long table", "v1 u6k+1 u6k+2", "v3k-4", "v3k+3"),
    c(R5, "long table", "v1 v6k+1 u6k+2", "u6k", "u6k+4"),
    c(R5, "long table", "v1 v6k+1 v6k+2", "u6k+3", "u6k+5"),
    c(R5, "long table", "u1 u6k+1 v6k+2", "v6k", "v6k+4"),
    c(R5, "long table", "u1 u6k+1 u6k+2", "v6k+3", "v6k+5"),
    c(R5, "long table", "u1 v6k+1 u6k+2", "v6k+3", "v6k+5"),
    c(R5, "long table", "u1 v6k+1 v6k+2", "u3k-1", "v3k+3"),
    c(R5, "long table", "u1 u6k-2 v6k+5", "v6k-10", "u6k-7"),
    c(R5, "long table", "u1 v6k-2 v6k+5", "v6k", "v5"),
    c(R5, "long table", "u1 v6k-2 u6k+5", "u6k-1", "u6k+1"),
    c(R5, "long table", "v1 v6k-2 u6k+5", "u6k+3", "u2"),
    c(R5, "long table", "u1 u6k+1 u6k+5", "v6k+3", "v2"),
    c(R5, "long table", "u1 u6k+1 v6k+5", "v6k+3", "v2"),
    c(R5, "long table", "v1 u6k+1 v6k+5", "u3k+3", "v3k-1"),
    c(R5, "long table", "u1 v6k+1 u6k+5", "v6k", "v5"),
    c(R5, "long table", "u1 v6k+1 v6k+5", "v6k", "v5"),
    c(R5, "long table", "v1 v6k+1 u6k+5", "u6k+3", "u2"),
    c(R5, "long table", "v1 v6k+1 v6k+5", "u6k+3", "u2"),
    c(R5, "long table", "v1 u6k+1 u6k+5", "v6k+2", "v6k+4"),
    c(R5, "other triples", "~u1 ~u2 ~u6k+5", "u3k+1", "u3k+6"),
    c(R5, "other triples", "u1 v5 v6k+2", "u3", "u6k+4"),
    c(R5, "other triples", "v1 u5 u6k+2", "v3", "v6k+4"),
    c(R5, "other triples", "v1 u6k+1 u6k-1", "v3k-3", "v3k"),
    c(R5, "other triples", "v1 v6k+1 u6k-1", "u6k+3", "u6k+5"),
    c(R5, "other triples", "u1 u6k-2 v6k-1", "v6k-3", "v6k+1"),
    c(R5, "other triples", "u1 u6k+4 v6k-1", "v3k", "v3k+3"),
    c(R5, "other triples", "~u1 ~u6k+4 ~u6k+2", "u6k-3", "u6"),
    c(R5, "other triples", "v1 v6k-2 v6k+5", "u6k+2", "u6k+4"),
    c(R5, "other triples", "u1 u5 ~u6k+2", "v2", "v4"),
    c(R5, "other triples", "v1 v5 ~u6k+2", "u2", "u4"),
    c(R5, "four landmarks", "~u1 u6k+4 v6k+4 ~u6k+5", "u3k+2", "u3k+3"),
];

/// Claims recorded for `residue`.
pub fn witness_claims(residue: Residue) -> Vec<WitnessClaim> {
    CLAIMS.iter().filter(|c| c.residue == residue).copied().collect()
}

struct Token {
    ring: Ring,
    either: bool,
    sub: SubscriptExpr,
}

fn parse_token(t: &str) -> Result<Token> {
    let err = || Error::Parse { what: "witness vertex", input: t.to_string() };
    let (either, rest) = match t.strip_prefix('~') {
        Some(r) => (true, r),
        None => (false, t),
    };
    let ring = match rest.chars().next() {
        Some('u') => Ring::Outer,
        Some('v') => Ring::Inner,
        _ => return Err(err()),
    };
    Ok(Token { ring, either, sub: rest[1..].parse()? })
}

fn vertex(t: &Token, k: i64, n: usize) -> VertexRef {
    VertexRef::new(t.ring, t.sub.eval(k, 0), n)
}

/// All landmark sets a claim stands for.
fn lifts(claim: &WitnessClaim, k: i64, n: usize) -> Result<Vec<LandmarkSet>> {
    let tokens = claim.set.split_whitespace().map(parse_token).collect::<Result<Vec<_>>>()?;
    let free: Vec<usize> = (0..tokens.len()).filter(|&t| tokens[t].either).collect();
    (0..1usize << free.len())
        .map(|bits| {
            let mut set: Vec<VertexRef> = tokens.iter().map(|t| vertex(t, k, n)).collect();
            for (b, &t) in free.iter().enumerate() {
                if bits >> b & 1 == 1 {
                    set[t] = set[t].corresponding();
                }
            }
            LandmarkSet::new(set)
        })
        .collect()
}

fn stated_rep(text: &str, k: i64) -> Result<MetricRepresentation> {
    text.split(',')
        .map(|e| {
            let v = e.trim().parse::<SubscriptExpr>()?.eval(k, 0);
            u16::try_from(v).map_err(|_| Error::Parse { what: "representation", input: text.to_string() })
        })
        .collect::<Result<Vec<_>>>()
        .map(MetricRepresentation)
}

/// The outcome for one landmark set of one claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub group: &'static str,
    pub claim: &'static str,
    pub set: LandmarkSet,
    pub pair: (VertexRef, VertexRef),
    pub reps: (MetricRepresentation, MetricRepresentation),
    pub stated: Option<MetricRepresentation>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub class: ResidueClass,
    pub claims: usize,
    pub results: Vec<WitnessResult>,
}

impl WitnessCheck {
    pub fn failures(&self) -> impl Iterator<Item = &WitnessResult> {
        self.results.iter().filter(|r| !r.holds)
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }
}

/// Checks every claim for `oracle`'s residue: the two named vertices differ
/// and share a representation (the stated one, when given).
pub fn verify_witnesses(oracle: &DistanceOracle, domain: Domain) -> Result<WitnessCheck> {
    let p = oracle.params();
    let n = p.n();
    if p.m() != 3 {
        return Err(Error::RequiresStepThree { n, m: p.m() });
    }
    let class = ResidueClass::of(n, domain)?;
    let k = class.k as i64;
    let claims = witness_claims(class.residue);
    let mut results = Vec::new();
    for claim in &claims {
        let a = vertex(&parse_token(claim.pair.0)?, k, n);
        let b = vertex(&parse_token(claim.pair.1)?, k, n);
        let stated = claim.rep.map(|t| stated_rep(t, k)).transpose()?;
        for set in lifts(claim, k, n)? {
            let (ra, rb) = (representation(oracle, a, &set), representation(oracle, b, &set));
            let holds = a != b && ra == rb && stated.as_ref().map_or(true, |s| *s == ra);
            results.push(WitnessResult {
                group: claim.group,
                claim: claim.set,
                set,
                pair: (a, b),
                reps: (ra, rb),
                stated: stated.clone(),
                holds,
            });
        }
    }
    Ok(WitnessCheck { class, claims: claims.len(), results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::bfs_oracle;

    #[test]
    fn catalog_parses() {
        for claim in CLAIMS {
            let sets = lifts(claim, 6, 41).unwrap();
            let free = claim.set.matches('~').count();
            assert_eq!(sets.len(), 1 << free, "{}", claim.set);
            parse_token(claim.pair.0).unwrap();
            parse_token(claim.pair.1).unwrap();
        }
        assert!(parse_token("w3").is_err());
        assert!(parse_token("u3q").is_err());
    }

    #[test]
    fn lifts_swap_rings() {
        let claim = c(R3, "t", "~u1 v3 ~u6k", "u1", "u2");
        let sets: Vec<String> = lifts(&claim, 6, 39).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(sets, ["{u1, v3, u36}", "{v1, v3, u36}", "{u1, v3, v36}", "{v1, v3, v36}"]);
    }

    #[test]
    fn claims_hold_at_k6() {
        for n in [39, 40, 41] {
            let check = verify_witnesses(&bfs_oracle(n, 3).unwrap(), Domain::Checked).unwrap();
            assert!(check.passed(), "n = {n}: {:?}", check.failures().collect::<Vec<_>>());
            assert!(check.results.len() >= check.claims);
        }
    }

    #[test]
    fn wrong_pair_is_reported() {
        let o = bfs_oracle(39, 3).unwrap();
        let set = LandmarkSet::parse("u1,u2,u3", 39).unwrap();
        let p = o.params();
        assert_ne!(representation(&o, p.u(20), &set), representation(&o, p.u(21), &set));
    }
}
