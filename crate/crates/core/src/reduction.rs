//! Clique reduction: from a graph `G` and `k > 2`, a graph `H` with universal
//! nodes `V1` and the rest `V2` such that `G` has a `k`-clique exactly when
//! `H` is not cohesive.
//!
//! `V2` is a copy of `G` padded with `k(k-1) + d` isolated nodes, where
//! `d = k * maxdeg(G)`; `V1` is a clique of `(k-1)(|V2| - k) - d` nodes joined
//! to everything. Node ids: the copy of `G` first, then the padding, then `V1`.

use serde::Serialize;

use crate::characterize::ndu2_cohesive;
use crate::error::{CohesionError, Result};
use crate::graph::{clique_number, Graph};
use crate::nodeset::NodeSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HardnessInstance {
    #[serde(skip)]
    pub h: Graph,
    pub v1: NodeSet,
    pub v2: NodeSet,
    /// Degree padding `k * maxdeg(G)`.
    pub d: usize,
    pub source_n: usize,
    pub k: usize,
}

impl HardnessInstance {
    /// The sidecar record: sizes and parameters of the instance.
    pub fn sidecar_json(&self) -> serde_json::Value {
        serde_json::json!({
            "v1": self.v1.len(),
            "v2": self.v2.len(),
            "d": self.d,
            "k": self.k,
            "source_n": self.source_n,
            "nodes": self.h.n(),
            "edges": self.h.edge_count(),
        })
    }
}

/// Builds `H` from `(g, k)`.
///
/// # Panics
/// If `k <= 2` or `g` has no nodes.
///
/// # Errors
/// `DegenerateInstance` when `(k-1)(|V2| - k) <= d`, which would leave `V1`
/// empty.
pub fn build_instance(g: &Graph, k: usize) -> Result<HardnessInstance> {
    assert!(k > 2, "the reduction needs k > 2");
    assert!(g.n() > 0, "the reduction needs a non-empty graph");
    let d = k * g.max_degree();
    let n2 = g.n() + k * (k - 1) + d;
    let v1_size = (k - 1) as i64 * (n2 - k) as i64 - d as i64;
    if v1_size <= 0 {
        return Err(CohesionError::DegenerateInstance { size: v1_size });
    }
    let n1 = v1_size as usize;
    let total = n2 + n1;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for u in n2..total {
        edges.extend((0..u).map(|v| (v, u)));
    }
    let h = Graph::from_edges(total, &edges)?;
    Ok(HardnessInstance {
        h,
        v1: (n2..total).collect(),
        v2: (0..n2).collect(),
        d,
        source_n: g.n(),
        k,
    })
}

/// Checks on `(g, k)` that `g` has a `k`-clique exactly when the built
/// instance is not cohesive, deciding the latter exactly.
pub fn verify_reduction(g: &Graph, k: usize) -> Result<bool> {
    let instance = build_instance(g, k)?;
    let has_clique = clique_number(g) >= k;
    let not_cohesive = ndu2_cohesive(&instance.h)?.is_not_cohesive();
    Ok(has_clique == not_cohesive)
}
