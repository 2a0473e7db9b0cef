//! Explicit good-vertex lists for `u_1` and `v_1`.

use std::collections::BTreeSet;

use super::good_set;
use crate::closed_form::{Domain, Residue, ResidueClass};
use crate::error::{Error, Result};
use crate::graph::{Ring, VertexRef};
use crate::oracle::DistanceOracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoodListSource {
    /// Listed explicitly for this residue.
    Printed,
    /// `v_1` for `n = 6k+2`: no list is printed; the expected extra vertices
    /// `{u_2, u_3, u_{n-3}, u_{n-2}}` follow the other residues' pattern.
    Extrapolated,
}

fn pairs(out: &mut BTreeSet<usize>, firsts: impl Iterator<Item = usize>) {
    for a in firsts {
        out.insert(a);
        out.insert(a + 1);
    }
}

fn good_for_u1(class: ResidueClass) -> BTreeSet<usize> {
    let k = class.k;
    let mut s = BTreeSet::new();
    match class.residue {
        Residue::R3 => {
            pairs(&mut s, (2..=k).map(|i| 3 * i - 1));
            pairs(&mut s, (1..k).map(|j| 3 * k + 3 * j));
            s.insert(6 * k + 3);
        }
        Residue::R4 => {
            pairs(&mut s, (2..=k).map(|i| 3 * i - 1));
            s.insert(3 * k + 2);
            pairs(&mut s, (1..k).map(|j| 3 * k + 3 * j + 1));
            s.insert(6 * k + 4);
        }
        Residue::R5 => {
            pairs(&mut s, (2..=2 * k).map(|i| 3 * i - 1));
            s.insert(6 * k + 5);
        }
        Residue::R2 => {
            pairs(&mut s, (2..=k).map(|i| 3 * i - 1));
            s.insert(3 * k + 1);
            pairs(&mut s, (0..k.saturating_sub(1)).map(|j| 3 * k + 3 * j + 2));
            s.insert(6 * k + 2);
        }
    }
    s
}

fn v1_extra(class: ResidueClass) -> ([usize; 4], GoodListSource) {
    let k = class.k;
    match class.residue {
        Residue::R3 => ([2, 3, 6 * k, 6 * k + 1], GoodListSource::Printed),
        Residue::R4 => ([2, 3, 6 * k + 1, 6 * k + 2], GoodListSource::Printed),
        Residue::R5 => ([2, 3, 6 * k + 2, 6 * k + 3], GoodListSource::Printed),
        Residue::R2 => ([2, 3, 6 * k - 1, 6 * k], GoodListSource::Extrapolated),
    }
}

/// The expected good set of `u_1` (`ring = Outer`) or `v_1` (`ring = Inner`).
pub fn expected_good_set(class: ResidueClass, ring: Ring) -> (BTreeSet<usize>, GoodListSource) {
    let mut s = good_for_u1(class);
    match ring {
        Ring::Outer => (s, GoodListSource::Printed),
        Ring::Inner => {
            let (extra, source) = v1_extra(class);
            s.extend(extra);
            (s, source)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodListCheck {
    pub class: ResidueClass,
    pub vertex: VertexRef,
    pub source: GoodListSource,
    pub expected: BTreeSet<usize>,
    pub computed: BTreeSet<usize>,
}

impl GoodListCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }

    pub fn missing(&self) -> Vec<usize> {
        self.expected.difference(&self.computed).copied().collect()
    }

    pub fn unexpected(&self) -> Vec<usize> {
        self.computed.difference(&self.expected).copied().collect()
    }

    /// Compares the explicit lists for `u_1` and `v_1` against the oracle.
    pub fn run(oracle: &DistanceOracle, domain: Domain) -> Result<[GoodListCheck; 2]> {
        let p = oracle.params();
        if p.m() != 3 {
            return Err(Error::RequiresStepThree { n: p.n(), m: p.m() });
        }
        let class = ResidueClass::of(p.n(), domain)?;
        let check = |ring| {
            let vertex = VertexRef::new(ring, 1, p.n());
            let (expected, source) = expected_good_set(class, ring);
            GoodListCheck { class, vertex, source, expected, computed: good_set(oracle, vertex) }
        };
        Ok([check(Ring::Outer), check(Ring::Inner)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::bfs_oracle;

    #[test]
    fn printed_lists_for_k6() {
        let o = bfs_oracle(41, 3).unwrap();
        let expected: BTreeSet<usize> = (2..=12).flat_map(|i| [3 * i - 1, 3 * i]).chain([41]).collect();
        assert_eq!(good_set(&o, o.params().u(1)), expected);

        let o = bfs_oracle(39, 3).unwrap();
        let u1 = good_set(&o, o.params().u(1));
        let (printed, _) = expected_good_set(ResidueClass::of(39, Domain::Checked).unwrap(), Ring::Outer);
        assert_eq!(u1, printed);
        let mut with_four = u1.clone();
        with_four.extend([2, 3, 36, 37]);
        assert_eq!(good_set(&o, o.params().v(1)), with_four);
    }

    #[test]
    fn lists_match_oracle_for_general_k() {
        for k in 1..=12 {
            for r in Residue::ALL {
                let class = ResidueClass::from_parts(r, k);
                let o = bfs_oracle(class.n(), 3).unwrap();
                for check in GoodListCheck::run(&o, Domain::Unchecked).unwrap() {
                    assert!(check.passed(), "{class} {}: missing {:?} unexpected {:?}", check.vertex, check.missing(), check.unexpected());
                }
            }
        }
    }

    #[test]
    fn rejects_other_steps() {
        let o = bfs_oracle(38, 2).unwrap();
        assert!(GoodListCheck::run(&o, Domain::Checked).is_err());
    }
}
