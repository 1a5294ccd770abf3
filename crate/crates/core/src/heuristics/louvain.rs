use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CohesionError, Result};
use crate::game::GroupStructure;
use crate::graph::Graph;

/// Newman modularity (resolution 1) of the partition `w`:
/// `sum over coalitions of |E_c|/|E| - (vol_c / 2|E|)^2`.
///
/// The sum is formed exactly in integers and divided once at the end.
pub fn modularity(g: &Graph, w: &GroupStructure) -> Result<f64> {
    let m = g.edge_count() as i128;
    if m == 0 {
        return Err(CohesionError::Edgeless);
    }
    let mut num = 0i128;
    for c in w.coalitions() {
        let inner = g.induced_edge_count(c) as i128;
        let vol: i128 = c.iter().map(|u| g.degree(u) as i128).sum();
        num += 4 * m * inner - vol * vol;
    }
    Ok(num as f64 / (4 * m * m) as f64)
}

/// Weighted multigraph used across aggregation levels. Self-loop weight is
/// kept separately and counts twice toward the node's strength.
struct Level {
    adj: Vec<Vec<(usize, u64)>>,
    self_loops: Vec<u64>,
}

impl Level {
    fn from_graph(g: &Graph) -> Level {
        Level {
            adj: (0..g.n())
                .map(|u| g.neighbors(u).iter().map(|&v| (v, 1)).collect())
                .collect(),
            self_loops: vec![0; g.n()],
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn strength(&self, u: usize) -> u64 {
        2 * self.self_loops[u] + self.adj[u].iter().map(|&(_, w)| w).sum::<u64>()
    }

    /// Local moving phase. Returns community labels (node ids of this level)
    /// and whether any node moved.
    fn local_moves(&self, two_m: i128, order: &[usize]) -> (Vec<usize>, bool) {
        let n = self.n();
        let k: Vec<i128> = (0..n).map(|u| self.strength(u) as i128).collect();
        let mut comm: Vec<usize> = (0..n).collect();
        let mut tot: Vec<i128> = k.clone();
        let mut links = vec![0i128; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut moved_any = false;
        loop {
            let mut moved = false;
            for &u in order {
                let old = comm[u];
                for &(v, w) in &self.adj[u] {
                    let c = comm[v];
                    if links[c] == 0 {
                        touched.push(c);
                    }
                    links[c] += w as i128;
                }
                tot[old] -= k[u];
                let gain = |c: usize, links: &[i128]| two_m * links[c] - tot[c] * k[u];
                let stay = gain(old, &links);
                touched.sort_unstable();
                let mut best = old;
                let mut best_gain = i128::MIN;
                for &c in &touched {
                    if c != old {
                        let gc = gain(c, &links);
                        if gc > best_gain {
                            best = c;
                            best_gain = gc;
                        }
                    }
                }
                if best == old || best_gain <= stay {
                    best = old;
                }
                tot[best] += k[u];
                if best != old {
                    comm[u] = best;
                    moved = true;
                }
                for c in touched.drain(..) {
                    links[c] = 0;
                }
            }
            if !moved {
                break;
            }
            moved_any = true;
        }
        (comm, moved_any)
    }

    /// Collapses communities into nodes, numbered by first appearance.
    fn aggregate(&self, comm: &[usize]) -> (Level, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        let mut next = 0;
        let relabel: Vec<usize> = comm
            .iter()
            .map(|&c| {
                if index[c] == usize::MAX {
                    index[c] = next;
                    next += 1;
                }
                index[c]
            })
            .collect();
        let mut adj = vec![Vec::<(usize, u64)>::new(); next];
        let mut self_loops = vec![0u64; next];
        for u in 0..self.n() {
            let cu = relabel[u];
            self_loops[cu] += self.self_loops[u];
            for &(v, w) in &self.adj[u] {
                let cv = relabel[v];
                if cu == cv {
                    // each internal edge is seen from both ends
                    if u < v {
                        self_loops[cu] += w;
                    }
                } else {
                    adj[cu].push((cv, w));
                }
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup_by(|a, b| {
                if a.0 == b.0 {
                    b.1 += a.1;
                    true
                } else {
                    false
                }
            });
        }
        (Level { adj, self_loops }, relabel)
    }
}

/// Louvain community detection: repeated local moving and aggregation until
/// a level moves no node.
///
/// Nodes are visited in id order, or in an order shuffled per level from
/// `seed` when one is given. A node joins the neighbouring community with the
/// largest modularity gain, ties going to the lowest community id, and only if
/// that gain strictly beats staying put. Isolated nodes stay alone. Coalitions
/// come out ordered by their smallest node.
pub fn louvain(g: &Graph, seed: Option<u64>) -> GroupStructure {
    let n = g.n();
    let two_m = 2 * g.edge_count() as i128;
    if two_m == 0 {
        return GroupStructure::singletons(n);
    }
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut level = Level::from_graph(g);
    // community of each original node, as a node of the current level
    let mut member: Vec<usize> = (0..n).collect();
    loop {
        let mut order: Vec<usize> = (0..level.n()).collect();
        if let Some(rng) = rng.as_mut() {
            order.shuffle(rng);
        }
        let (comm, moved) = level.local_moves(two_m, &order);
        if !moved {
            break;
        }
        let (next, relabel) = level.aggregate(&comm);
        for m in &mut member {
            *m = relabel[*m];
        }
        level = next;
    }
    GroupStructure::from_assignment(&first_appearance(&member))
}

fn first_appearance(labels: &[usize]) -> Vec<usize> {
    let mut index = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&c| {
            let next = index.len();
            *index.entry(c).or_insert(next)
        })
        .collect()
}
