//! Isomorphism classes of small graphs.
//!
//! A graph on `n <= 8` nodes is encoded as the upper triangle of its
//! adjacency matrix read column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! first pair in the most significant bit. The canonical code is the minimum
//! of that string over all node orderings, found by branch and bound on the
//! string prefix.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{CohesionError, Result};

/// Largest node count supported by the enumerator.
pub const MAX_ENUMERATION_NODES: usize = 8;

#[inline]
fn pair_count(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// Encodes adjacency rows under the identity ordering.
#[cfg(test)]
fn code_of_rows(rows: &[u64]) -> u64 {
    let n = rows.len();
    let len = pair_count(n);
    let mut code = 0u64;
    let mut p = 0;
    for j in 1..n {
        for &row in rows.iter().take(j) {
            if row & (1 << j) != 0 {
                code |= 1 << (len - 1 - p);
            }
            p += 1;
        }
    }
    code
}

/// Canonical code: the lexicographically smallest adjacency string over all
/// relabellings. Two graphs share a code iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.n() > MAX_ENUMERATION_NODES {
        return Err(CohesionError::TooLarge {
            what: "canonical labelling",
            n: g.n(),
            limit: MAX_ENUMERATION_NODES,
        });
    }
    let rows = g.rows().expect("small graphs carry masks");
    Ok(canonical_rows(rows).0)
}

/// Returns the canonical code and an ordering that realises it
/// (`order[pos]` is the original node placed at `pos`).
fn canonical_rows(rows: &[u64]) -> (u64, Vec<usize>) {
    let n = rows.len();
    if n <= 1 {
        return (0, (0..n).collect());
    }
    let mut search = Search {
        rows,
        order: Vec::with_capacity(n),
        blocks: Vec::with_capacity(n),
        best_blocks: vec![u32::MAX; n],
        best_order: Vec::new(),
    };
    search.descend(0);
    let mut code = 0u64;
    for (j, &b) in search.best_blocks.iter().enumerate().skip(1) {
        code = (code << j) | b as u64;
    }
    (code, search.best_order)
}

struct Search<'a> {
    rows: &'a [u64],
    order: Vec<usize>,
    blocks: Vec<u32>,
    best_blocks: Vec<u32>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// The current prefix is never larger than the best prefix: the best is
    /// only replaced from inside the subtree being explored.
    fn descend(&mut self, used: u64) {
        let j = self.order.len();
        let n = self.rows.len();
        if j == n {
            if self.blocks != self.best_blocks || self.best_order.is_empty() {
                self.best_blocks.clone_from(&self.blocks);
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        for v in 0..n {
            if used & (1 << v) != 0 {
                continue;
            }
            // bits (order[i], v) for i < j, first position most significant
            let block = self
                .order
                .iter()
                .fold(0u32, |b, &u| (b << 1) | ((self.rows[u] >> v) & 1) as u32);
            // re-checked per sibling: an earlier sibling may have lowered the best
            let tied = self.blocks[..] == self.best_blocks[..j];
            if tied && block > self.best_blocks[j] {
                continue;
            }
            self.order.push(v);
            self.blocks.push(block);
            self.descend(used | 1 << v);
            self.order.pop();
            self.blocks.pop();
        }
    }
}

/// Builds the graph whose adjacency string under the identity ordering is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let len = pair_count(n);
    let mut edges = Vec::new();
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (len - 1 - p) & 1 == 1 {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("decoded edges are valid")
}

/// Canonical codes of all graphs on `n` nodes, one per isomorphism class,
/// in increasing order.
fn all_codes(n: usize) -> Vec<u64> {
    if n <= 1 {
        return vec![0];
    }
    let smaller = all_codes(n - 1);
    let mut found = BTreeSet::new();
    let mut rows = vec![0u64; n];
    for &code in &smaller {
        let base = graph_from_code(n - 1, code);
        let base_rows = base.rows().expect("small graph");
        for nbrs in 0..(1u64 << (n - 1)) {
            rows[..n - 1].copy_from_slice(base_rows);
            rows[n - 1] = nbrs;
            for (u, row) in rows.iter_mut().enumerate().take(n - 1) {
                if nbrs & (1 << u) != 0 {
                    *row |= 1 << (n - 1);
                }
            }
            found.insert(canonical_rows(&rows).0);
        }
    }
    found.into_iter().collect()
}

fn check_range(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ENUMERATION_NODES {
        return Err(CohesionError::UnsupportedSize {
            n,
            min,
            max: MAX_ENUMERATION_NODES,
        });
    }
    Ok(())
}

/// One representative of every isomorphism class of graphs on `n` nodes
/// (`1 <= n <= 8`), each in its canonical labelling.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_range(n, 1)?;
    Ok(all_codes(n)
        .into_iter()
        .map(|c| graph_from_code(n, c))
        .collect())
}

/// One representative of every isomorphism class of connected graphs on `n`
/// nodes (`3 <= n <= 8`), each in its canonical labelling.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_range(n, 3)?;
    Ok(enumerate_all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected_graph)
        .collect())
}
