#![allow(dead_code)]

use std::path::PathBuf;

use cohesion::graph::parse_edge_list;
use cohesion::Graph;

/// Two triangles abc and def joined by ae and cd.
pub fn g1() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 4),
            (2, 3),
        ],
    )
    .unwrap()
}

/// Star with center a and tails b..e.
pub fn g2() -> Graph {
    Graph::star(4)
}

pub fn karate() -> Graph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/karate.edgelist");
    parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Adjacency masks, rebuilt from the edge list.
pub fn masks(g: &Graph) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

/// Whether the node mask `s` blocks the structure whose coalition masks are
/// `owner[u]`, by cross-multiplied integer comparisons.
pub fn mask_blocks(rows: &[u64], owner: &[u64], s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let size = s.count_ones() as u64;
    (0..rows.len()).filter(|&u| s >> u & 1 == 1).all(|u| {
        let inside = (rows[u] & s).count_ones() as u64;
        let cur = (rows[u] & owner[u]).count_ones() as u64;
        inside * owner[u].count_ones() as u64 > cur * size
    })
}

/// Brute force over all 2^n masks: some set blocks the grand coalition.
pub fn brute_not_cohesive(g: &Graph) -> bool {
    let n = g.n();
    let rows = masks(g);
    let owner = vec![(1u64 << n) - 1; n];
    (1u64..1 << n).any(|s| mask_blocks(&rows, &owner, s))
}
