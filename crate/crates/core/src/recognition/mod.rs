//! Good and bad outer vertices.
//!
//! `u_i` is good for `w` when `d(u_i, w) = d(u_{i+2}, w)`; otherwise `w`
//! recognizes `u_i`. A resolving set must recognize every outer vertex, since
//! an unrecognized `u_i` has the same representation as `u_{i+2}`.

mod good_lists;
mod tables;

use std::collections::BTreeSet;
use std::fmt;

pub use good_lists::{expected_good_set, GoodListCheck, GoodListSource};
pub use tables::{table_rows, verify_tables, MemberSpec, RecognizerRow, RowInstance, RowRange, TableCheck, TableMismatch};

use crate::closed_form::clockwise_distance;
use crate::error::{Error, Result};
use crate::graph::{wrap, VertexRef};
use crate::oracle::DistanceOracle;

/// Outer vertices other than `u_1`, split by `d*(u_1, .) mod 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OuterClass {
    /// `d* = 1 (mod 3)`
    A,
    /// `d* = 2 (mod 3)`
    B,
    /// `d* = 0 (mod 3)`, excluding `u_1`
    C,
}

impl OuterClass {
    pub const ALL: [OuterClass; 3] = [OuterClass::A, OuterClass::B, OuterClass::C];

    pub fn of(subscript: usize, n: usize) -> Option<Self> {
        match clockwise_distance(1, subscript, n).ok()? {
            0 => None,
            d if d % 3 == 1 => Some(OuterClass::A),
            d if d % 3 == 2 => Some(OuterClass::B),
            _ => Some(OuterClass::C),
        }
    }

    pub fn members(self, n: usize) -> Vec<usize> {
        (2..=n).filter(|&j| Self::of(j, n) == Some(self)).collect()
    }
}

impl fmt::Display for OuterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OuterClass::A => "A",
            OuterClass::B => "B",
            OuterClass::C => "C",
        };
        f.write_str(s)
    }
}

#[inline]
fn good_by_pos(oracle: &DistanceOracle, pos: usize, w: usize) -> bool {
    let n = oracle.n();
    let row = oracle.row(w);
    row[pos] == row[(pos + 2) % n]
}

/// True iff `u_i` is good for `w`; the subscript is taken modulo `n`.
pub fn is_good(oracle: &DistanceOracle, i: i64, w: VertexRef) -> bool {
    let n = oracle.n();
    good_by_pos(oracle, wrap(i, n) as usize, w.linear(n))
}

/// `w` recognizes `u_i`.
pub fn recognizes(oracle: &DistanceOracle, w: VertexRef, i: i64) -> bool {
    !is_good(oracle, i, w)
}

/// Subscripts of the outer vertices that are good for `w`.
pub fn good_set(oracle: &DistanceOracle, w: VertexRef) -> BTreeSet<usize> {
    let n = oracle.n();
    let wl = w.linear(n);
    (0..n).filter(|&p| good_by_pos(oracle, p, wl)).map(|p| p + 1).collect()
}

/// Subscripts of the outer vertices that `w` recognizes.
pub fn recognized_set(oracle: &DistanceOracle, w: VertexRef) -> BTreeSet<usize> {
    let good = good_set(oracle, w);
    (1..=oracle.n()).filter(|i| !good.contains(i)).collect()
}

/// `A(u_i)`, `B(u_i)` or `C(u_i)`: members of `class` that recognize `target`,
/// read off the distance table.
pub fn recognizers_in_class(oracle: &DistanceOracle, target: VertexRef, class: OuterClass) -> Result<BTreeSet<usize>> {
    let n = oracle.n();
    if !target.is_outer() {
        return Err(Error::InnerTarget(target));
    }
    if !target.belongs_to(n) {
        return Err(Error::ForeignVertex { vertex: target, n });
    }
    let pos = target.pos();
    Ok(class
        .members(n)
        .into_iter()
        .filter(|&j| !good_by_pos(oracle, pos, j - 1))
        .collect())
}

/// Whether `u_j` is good for `u_{1+i}`. Rotating both vertices by `i` shows
/// this holds whenever `u_{j-i}` is good for `u_1`.
pub fn shift_good(oracle: &DistanceOracle, i: usize, j: i64) -> Result<bool> {
    let n = oracle.n();
    if i == 0 || i >= n {
        return Err(Error::SubscriptOutOfRange { subscript: i as i64, n });
    }
    Ok(is_good(oracle, j, VertexRef::outer(1 + i as i64, n)))
}
