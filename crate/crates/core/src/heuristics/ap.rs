use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::game::GroupStructure;
use crate::graph::{Graph, Node};
use crate::nodeset::NodeSet;

/// Average payoff of a candidate set: `2|E(S)| / |S|^2`, kept as the pair
/// `(2|E(S)|, |S|)` and compared exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Candidate {
    twice_edges: u64,
    size: u64,
    node: Node,
    version: u32,
}

impl Ord for Candidate {
    /// Higher average payoff first, then lower node id.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.twice_edges as u128 * (other.size * other.size) as u128;
        let rhs = other.twice_edges as u128 * (self.size * self.size) as u128;
        lhs.cmp(&rhs).then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Average-payoff greedy: while nodes remain, take the remaining node `v`
/// whose remaining closed neighbourhood has the highest average payoff
/// (lowest id on ties) and make that neighbourhood a coalition.
///
/// A removal only changes the neighbourhoods of remaining neighbours of the
/// removed nodes, so only those are re-scored; stale heap entries are skipped
/// by version.
pub fn ap_heuristic(g: &Graph) -> GroupStructure {
    let n = g.n();
    let mut remaining = vec![true; n];
    let mut version = vec![0u32; n];
    let mut mark = vec![false; n];
    let mut heap = BinaryHeap::with_capacity(n);

    let score = |u: Node, remaining: &[bool], mark: &mut [bool]| -> (u64, u64) {
        let members: Vec<Node> = std::iter::once(u)
            .chain(g.neighbors(u).iter().copied().filter(|&v| remaining[v]))
            .collect();
        for &x in &members {
            mark[x] = true;
        }
        let twice_edges = members
            .iter()
            .map(|&x| g.neighbors(x).iter().filter(|&&y| mark[y]).count() as u64)
            .sum();
        for &x in &members {
            mark[x] = false;
        }
        (twice_edges, members.len() as u64)
    };

    for u in 0..n {
        let (twice_edges, size) = score(u, &remaining, &mut mark);
        heap.push(Candidate {
            twice_edges,
            size,
            node: u,
            version: 0,
        });
    }

    let mut coalitions = Vec::new();
    while let Some(top) = heap.pop() {
        let v = top.node;
        if !remaining[v] || top.version != version[v] {
            continue;
        }
        let s: NodeSet = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied().filter(|&x| remaining[x]))
            .collect();
        for u in &s {
            remaining[u] = false;
        }
        let mut dirty: Vec<Node> = s
            .iter()
            .flat_map(|u| g.neighbors(u).iter().copied())
            .filter(|&x| remaining[x])
            .collect();
        dirty.sort_unstable();
        dirty.dedup();
        for w in dirty {
            version[w] += 1;
            let (twice_edges, size) = score(w, &remaining, &mut mark);
            heap.push(Candidate {
                twice_edges,
                size,
                node: w,
                version: version[w],
            });
        }
        coalitions.push(s);
    }
    GroupStructure::from_sets(n, coalitions).expect("coalitions partition the nodes")
}
