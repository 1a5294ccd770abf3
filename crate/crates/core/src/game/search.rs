//! Exhaustive blocking-set search over bitmasks.
//!
//! Candidates are visited by increasing size and, within a size, by increasing
//! mask over the pool. A disconnected blocking set always has a blocking
//! component, so the first hit is connected and minimal in size.

use super::{
    is_blocking, payoff_under, BlockingCertificate, CohesionVerdict, GroupStructure, Method,
    Popularity,
};
use crate::error::{CohesionError, Result};
use crate::graph::{is_connected_mask, Graph, Node};
use crate::nodeset::{combinations, mask_bits, NodeSet, MASK_LIMIT};

/// Candidate nodes with their adjacency restricted to the pool and the payoff
/// each must strictly beat.
pub(crate) struct BlockingSearch {
    nodes: Vec<Node>,
    rows: Vec<u64>,
    bars: Vec<Popularity>,
}

impl BlockingSearch {
    /// Keeps the nodes of `pool` that could still improve on their bar in
    /// some set: a node of pool degree `d` earns at most `d / (d + 1)`.
    pub(crate) fn new(
        g: &Graph,
        pool: impl IntoIterator<Item = Node>,
        bar: impl Fn(Node) -> Popularity,
    ) -> Result<BlockingSearch> {
        let pool: Vec<Node> = pool.into_iter().collect();
        let in_pool: NodeSet = pool.iter().copied().collect();
        let mut nodes = Vec::new();
        let mut bars = Vec::new();
        for &u in &pool {
            let d = g.degree_into(u, &in_pool) as u64;
            let b = bar(u);
            if d > 0 && d * b.denominator() as u64 > b.numerator() as u64 * (d + 1) {
                nodes.push(u);
                bars.push(b);
            }
        }
        if nodes.len() > MASK_LIMIT {
            return Err(CohesionError::TooLarge {
                what: "exact blocking search",
                n: nodes.len(),
                limit: MASK_LIMIT,
            });
        }
        let rows = nodes
            .iter()
            .map(|&u| {
                nodes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| g.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(BlockingSearch { nodes, rows, bars })
    }

    /// First blocking set with `2 <= |S| <= max_size`, as global node ids.
    pub(crate) fn first(&self, max_size: usize) -> Option<NodeSet> {
        let a = self.nodes.len();
        for k in 2..=max_size.min(a) {
            if let Some(mask) = self.first_of_size(k) {
                return Some(mask_bits(mask).map(|i| self.nodes[i]).collect());
            }
        }
        None
    }

    /// Whether candidate `i` can beat its bar with `fin` neighbours in a
    /// set of size `k`.
    #[inline]
    fn beats(&self, i: usize, fin: u64, k: u64) -> bool {
        let b = self.bars[i];
        fin * b.denominator() as u64 > b.numerator() as u64 * k
    }

    fn first_of_size(&self, k: usize) -> Option<u64> {
        let a = self.nodes.len();
        let kk = k as u64;
        // Shrink to nodes that could still win with at most k-1 neighbours
        // among the survivors, until nothing changes.
        let mut alive: u64 = if a == 64 { u64::MAX } else { (1u64 << a) - 1 };
        loop {
            let mut next = alive;
            for i in mask_bits(alive) {
                let fin = ((self.rows[i] & alive).count_ones() as u64).min(kk - 1);
                if !self.beats(i, fin, kk) {
                    next &= !(1 << i);
                }
            }
            if next == alive {
                break;
            }
            alive = next;
        }
        if (alive.count_ones() as usize) < k {
            return None;
        }

        let idx: Vec<usize> = mask_bits(alive).collect();
        let local: Vec<u64> = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.rows[i] >> j & 1 == 1)
                    .fold(0u64, |acc, (jj, _)| acc | 1 << jj)
            })
            .collect();
        let bars: Vec<(u64, u64)> = idx
            .iter()
            .map(|&i| {
                (
                    self.bars[i].numerator() as u64 * kk,
                    self.bars[i].denominator() as u64,
                )
            })
            .collect();

        combinations(idx.len(), k)
            .find(|&x| {
                mask_bits(x).all(|i| {
                    let fin = (local[i] & x).count_ones() as u64;
                    fin * bars[i].1 > bars[i].0
                }) && is_connected_mask(&local, x)
            })
            .map(|x| mask_bits(x).fold(0u64, |acc, i| acc | 1 << idx[i]))
    }
}

/// Searches for a set blocking `w`, optionally limited to sets of at most
/// `size_cap` nodes. The returned set is connected and of minimum size.
///
/// Works on graphs where at most 64 nodes can possibly improve on their
/// current payoff.
///
/// # Panics
/// If `w` is a structure over a different number of nodes.
pub fn find_blocking_set(
    g: &Graph,
    w: &GroupStructure,
    size_cap: Option<usize>,
) -> Result<Option<BlockingCertificate>> {
    assert_eq!(w.n(), g.n(), "structure and graph disagree on node count");
    let search = BlockingSearch::new(g, 0..g.n(), |u| payoff_under(g, w, u))?;
    let cap = size_cap.unwrap_or(g.n());
    Ok(search
        .first(cap)
        .map(|s| is_blocking(g, &s, w).expect("search hit blocks")))
}

/// Exhaustive search for a set blocking the grand coalition.
pub fn grand_blocking_set(g: &Graph) -> Result<Option<BlockingCertificate>> {
    find_blocking_set(g, &GroupStructure::grand(g.n()), None)
}

/// Decides core stability of `w` exactly.
pub fn is_core_stable(g: &Graph, w: &GroupStructure) -> Result<CohesionVerdict> {
    Ok(match find_blocking_set(g, w, None)? {
        Some(cert) => CohesionVerdict::not_cohesive(Method::Exact, cert),
        None => CohesionVerdict::cohesive(Method::Exact),
    })
}
