//! All-pairs distance tables.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::{GPInstance, GPParams, VertexRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Bfs,
    ClosedForm,
}

/// A `2n x 2n` table of graph distances over the linear vertex layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceOracle {
    params: GPParams,
    table: Vec<u16>,
    provenance: Provenance,
}

impl DistanceOracle {
    pub(crate) fn from_table(params: GPParams, table: Vec<u16>, provenance: Provenance) -> Self {
        debug_assert_eq!(table.len(), params.vertex_count() * params.vertex_count());
        Self { params, table, provenance }
    }

    pub fn params(&self) -> GPParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn vertex_count(&self) -> usize {
        self.params.vertex_count()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn distance(&self, a: VertexRef, b: VertexRef) -> u16 {
        let n = self.n();
        self.by_index(a.linear(n), b.linear(n))
    }

    #[inline]
    pub fn by_index(&self, a: usize, b: usize) -> u16 {
        self.table[a * self.vertex_count() + b]
    }

    /// Distances from the vertex at linear index `a` to every vertex.
    #[inline]
    pub fn row(&self, a: usize) -> &[u16] {
        let w = self.vertex_count();
        &self.table[a * w..(a + 1) * w]
    }

    pub fn diameter(&self) -> u16 {
        self.table.iter().copied().max().unwrap_or(0)
    }

    /// Same table contents, ignoring provenance.
    pub fn same_distances(&self, other: &DistanceOracle) -> bool {
        self.params == other.params && self.table == other.table
    }
}

fn bfs_row(g: &GPInstance, source: usize, row: &mut [u16], queue: &mut VecDeque<usize>) {
    row.fill(u16::MAX);
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let next = row[x] + 1;
        for &y in g.linear_neighbors(x) {
            let y = y as usize;
            if row[y] == u16::MAX {
                row[y] = next;
                queue.push_back(y);
            }
        }
    }
}

/// BFS from every source. Rows are computed independently, so the parallel
/// and sequential results are identical.
pub fn bfs_all_pairs(g: &GPInstance) -> DistanceOracle {
    let w = g.vertex_count();
    let mut table = vec![0u16; w * w];
    table
        .par_chunks_mut(w)
        .enumerate()
        .for_each_init(VecDeque::new, |queue, (source, row)| bfs_row(g, source, row, queue));
    DistanceOracle::from_table(g.params(), table, Provenance::Bfs)
}

/// Convenience: build `P(n,m)` and its BFS oracle.
pub fn bfs_oracle(n: usize, m: usize) -> crate::Result<DistanceOracle> {
    Ok(bfs_all_pairs(&GPInstance::new(n, m)?))
}
