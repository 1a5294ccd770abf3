use num_rational::Ratio;
use serde::Serialize;

use crate::error::{CohesionError, Result};
use crate::game::{
    is_blocking, BlockingSearch, CohesionVerdict, GroupStructure, Method, Popularity, TieCounts,
};
use crate::graph::{clique_number, Graph, Node};
use crate::nodeset::NodeSet;

/// Split of a connected graph into universal nodes (`v1`) and the rest
/// (`v2`), both non-empty. Such a graph has diameter 2 and mixed
/// eccentricities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityPartition {
    pub v1: NodeSet,
    pub v2: NodeSet,
}

/// The partition, when `g` has at least one universal node and at least one
/// node that is not universal. Universal nodes make the graph connected with
/// diameter at most 2, so no further check is needed.
pub fn eccentricity_partition(g: &Graph) -> Option<EccentricityPartition> {
    let n = g.n();
    let (v1, v2): (Vec<Node>, Vec<Node>) = (0..n).partition(|&u| g.degree(u) + 1 == n);
    if v1.is_empty() || v2.is_empty() {
        return None;
    }
    Some(EccentricityPartition {
        v1: v1.into_iter().collect(),
        v2: v2.into_iter().collect(),
    })
}

/// `fin * eout / ein - fout`, with all four tie counts taken inside `V2`.
///
/// # Panics
/// If `u` is not in `s` or `s` is not contained in `V2`.
pub fn lambda_value(g: &Graph, part: &EccentricityPartition, u: Node, s: &NodeSet) -> Ratio<i64> {
    let t = TieCounts::compute(g, u, s, &part.v2);
    Ratio::new((t.fin * t.eout) as i64, t.ein as i64) - t.fout as i64
}

/// Exact cohesion for graphs with an eccentricity partition.
///
/// Only subsets of `V2` can block the grand coalition, and `S` blocks exactly
/// when `|V1| < lambda(v, S)` for every member. Nodes without neighbours in
/// `V2` never satisfy this, so the search runs over the others; at most 64 of
/// them are supported.
pub fn ndu2_cohesive(g: &Graph) -> Result<CohesionVerdict> {
    let part = eccentricity_partition(g).ok_or(CohesionError::NotNdu2)?;
    let n = g.n() as u32;
    let search = BlockingSearch::new(g, part.v2.iter(), |u| {
        Popularity::new(g.degree(u) as u32, n)
    })?;
    Ok(match search.first(part.v2.len()) {
        Some(s) => {
            let v1 = Ratio::from_integer(part.v1.len() as i64);
            debug_assert!(s.iter().all(|u| v1 < lambda_value(g, &part, u, &s)));
            let cert = is_blocking(g, &s, &GroupStructure::grand(g.n()))
                .expect("lambda criterion implies blocking");
            CohesionVerdict::not_cohesive(Method::Exact, cert)
        }
        None => CohesionVerdict::cohesive(Method::Exact),
    })
}

/// Sufficient condition: with `c` the clique number of `G[V2]`,
/// `|V2| > c(c-1)` and `|V1| >= (c-1)(|V2| - c)` make `G` cohesive.
/// Returns `Cohesive` or `Inconclusive`.
pub fn turan_sufficient(g: &Graph, part: &EccentricityPartition) -> CohesionVerdict {
    let c = clique_number(&g.induced_subgraph(&part.v2.to_vec()));
    let (v1, v2) = (part.v1.len(), part.v2.len());
    if v2 > c * (c - 1) && v1 >= (c - 1) * (v2 - c) {
        CohesionVerdict::cohesive(Method::QuickTest)
    } else {
        CohesionVerdict::inconclusive(Method::QuickTest)
    }
}
