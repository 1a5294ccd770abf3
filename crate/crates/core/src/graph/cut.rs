use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, Node};
use crate::error::{CohesionError, Result};
use crate::nodeset::{combinations, mask_bits, NodeSet};

/// Minimum vertex cuts of a connected, non-complete graph.
///
/// `chi` and `mu` are optimised independently over all minimum cuts; each
/// comes with the cut that realises it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutProfile {
    /// Size of a minimum vertex cut.
    pub kappa: usize,
    /// Smallest component size left by removing some minimum cut.
    pub chi: usize,
    /// Largest number of components left by removing some minimum cut.
    pub mu: usize,
    pub chi_cut: NodeSet,
    /// A component of size `chi` after removing `chi_cut`.
    pub chi_component: NodeSet,
    pub mu_cut: NodeSet,
    /// Components after removing `mu_cut`, smallest first.
    pub mu_components: Vec<NodeSet>,
}

/// Vertex connectivity of a connected, non-complete graph, via unit-capacity
/// max-flow between every non-adjacent pair.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.is_complete() {
        return Err(CohesionError::CompleteGraph);
    }
    if !g.is_connected_graph() {
        return Err(CohesionError::Disconnected);
    }
    let net = SplitNetwork::new(g);
    let mut best = g.n() - 2;
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            if !g.has_edge(s, t) {
                best = best.min(net.max_flow(s, t, best));
            }
        }
    }
    Ok(best)
}

/// Computes `kappa`, `chi` and `mu` by enumerating every vertex set of size
/// `kappa` and keeping those that disconnect the graph.
pub fn cut_profile(g: &Graph) -> Result<CutProfile> {
    let n = g.n();
    if n < 3 || g.is_complete() {
        return Err(CohesionError::CompleteGraph);
    }
    g.rows_or_err("cut profile")?;
    let kappa = vertex_connectivity(g)?;
    Ok(profile_for_kappa(g, kappa))
}

/// The profile of a connected, non-complete graph with at most 64 nodes whose
/// connectivity is already known to be `kappa`.
pub(crate) fn profile_for_kappa(g: &Graph, kappa: usize) -> CutProfile {
    let n = g.n();
    let rows = g.rows().expect("at most 64 nodes");
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut chi: Option<(usize, u64, u64)> = None;
    let mut mu: Option<(usize, u64, Vec<u64>)> = None;
    for cut in combinations(n, kappa) {
        let comps = components_of(rows, all & !cut);
        if comps.len() < 2 {
            continue;
        }
        let smallest = *comps
            .iter()
            .min_by_key(|c| c.count_ones())
            .expect("at least two components");
        let size = smallest.count_ones() as usize;
        if chi.as_ref().is_none_or(|&(c, _, _)| size < c) {
            chi = Some((size, cut, smallest));
        }
        if mu.as_ref().is_none_or(|(m, _, _)| comps.len() > *m) {
            mu = Some((comps.len(), cut, comps));
        }
    }
    let (chi, chi_cut, chi_component) = chi.expect("a minimum cut exists");
    let (mu, mu_cut, mut mu_components) = mu.expect("a minimum cut exists");
    mu_components.sort_by_key(|c| (c.count_ones(), *c));
    CutProfile {
        kappa,
        chi,
        mu,
        chi_cut: NodeSet::from_mask(chi_cut),
        chi_component: NodeSet::from_mask(chi_component),
        mu_cut: NodeSet::from_mask(mu_cut),
        mu_components: mu_components.into_iter().map(NodeSet::from_mask).collect(),
    }
}

fn components_of(rows: &[u64], mut rest: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in mask_bits(frontier) {
                next |= rows[u];
            }
            frontier = next & rest & !comp;
            comp |= frontier;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Node-split flow network: node `v` becomes `2v -> 2v+1` with capacity 1.
struct SplitNetwork {
    heads: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            heads: vec![Vec::new(); 2 * g.n()],
            to: Vec::new(),
            cap: Vec::new(),
        };
        for v in 0..g.n() {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, u32::MAX);
            net.arc(2 * v + 1, 2 * u, u32::MAX);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.heads[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.heads[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, stopping early at `limit`.
    fn max_flow(&self, s: Node, t: Node, limit: usize) -> usize {
        let mut cap = self.cap.clone();
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.heads.len()];
            let mut queue = VecDeque::from([source]);
            via[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &e in &self.heads[x] {
                    let y = self.to[e];
                    if cap[e] > 0 && via[y] == usize::MAX {
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if via[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = via[y];
                cap[e] -= 1;
                cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_profile() {
        let p = cut_profile(&Graph::path(3)).unwrap();
        assert_eq!((p.kappa, p.chi, p.mu), (1, 1, 2));
        assert_eq!(p.mu_cut.to_vec(), vec![1]);
    }

    #[test]
    fn bowtie_profile() {
        // two triangles sharing node 2
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let p = cut_profile(&g).unwrap();
        assert_eq!((p.kappa, p.chi, p.mu), (1, 2, 2));
        assert_eq!(p.chi_component.to_vec(), vec![0, 1]);
    }

    #[test]
    fn k23_profile() {
        let p = cut_profile(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!((p.kappa, p.chi, p.mu), (2, 1, 3));
        assert_eq!(p.mu_cut.to_vec(), vec![0, 1]);
    }

    #[test]
    fn complete_graph_has_no_cut() {
        assert_eq!(
            cut_profile(&Graph::complete(4)),
            Err(CohesionError::CompleteGraph)
        );
        assert_eq!(
            vertex_connectivity(&Graph::complete(4)),
            Err(CohesionError::CompleteGraph)
        );
    }

    #[test]
    fn cycle_connectivity() {
        assert_eq!(vertex_connectivity(&Graph::cycle(7)), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::cycle(200)), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(3, 5)), Ok(3));
    }
}
