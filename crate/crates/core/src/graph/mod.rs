//! Simple undirected graphs over dense node ids, plus the structural
//! analytics the game layer relies on.

mod clique;
mod cut;
mod enumerate;
mod parse;
mod random;
mod subsets;

use std::collections::VecDeque;

pub use clique::clique_number;
pub(crate) use cut::profile_for_kappa;
pub use cut::{cut_profile, vertex_connectivity, CutProfile};
pub use enumerate::{
    canonical_code, enumerate_all_graphs, enumerate_connected_graphs, graph_from_code,
    MAX_ENUMERATION_NODES,
};
pub use parse::parse_edge_list;
pub use random::{sample_random_graph, sample_with_stream};
pub use subsets::{connected_subsets, is_connected_mask};

use crate::error::{CohesionError, Result};
use crate::nodeset::{NodeSet, MASK_LIMIT};

/// Dense node identifier.
pub type Node = usize;

/// An immutable simple undirected graph on nodes `0..n`.
///
/// Neighbour lists are sorted. Graphs with at most 64 nodes also carry one
/// adjacency mask per node for the bit-parallel solvers.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Node>>,
    rows: Option<Vec<u64>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(Node, Node)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(CohesionError::NodeOutOfRange { node: x, n });
                }
            }
            if u == v {
                return Err(CohesionError::SelfLoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_adjacency(adj, None))
    }

    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Node>>, labels: Option<Vec<String>>) -> Graph {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = (adj.len() <= MASK_LIMIT).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect()
        });
        Graph {
            adj,
            rows,
            edge_count,
            labels,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n], None)
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph::from_adjacency(adj, None)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Star with centre `0` and tails `1..=tails`.
    pub fn star(tails: usize) -> Graph {
        let edges: Vec<_> = (1..=tails).map(|t| (0, t)).collect();
        Graph::from_edges(tails + 1, &edges).expect("valid star")
    }

    /// `K_{m,n}` with sides `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let edges: Vec<_> = (0..m)
            .flat_map(|u| (m..m + n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(m + n, &edges).expect("valid bipartite graph")
    }

    /// Copy of this graph with one more edge.
    pub fn with_edge(&self, u: Node, v: Node) -> Result<Graph> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(CohesionError::NodeOutOfRange { node: x, n });
            }
        }
        if u == v {
            return Err(CohesionError::SelfLoopEdge(u));
        }
        let mut adj = self.adj.clone();
        adj[u].push(v);
        adj[v].push(u);
        Ok(Graph::from_adjacency(adj, self.labels.clone()))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(CohesionError::InvalidArgument(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, u: Node) -> &[Node] {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: Node) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        match &self.rows {
            Some(rows) => rows[u] & (1 << v) != 0,
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Adjacency masks, present when the graph has at most 64 nodes.
    pub fn rows(&self) -> Option<&[u64]> {
        self.rows.as_deref()
    }

    pub(crate) fn rows_or_err(&self, what: &'static str) -> Result<&[u64]> {
        self.rows().ok_or(CohesionError::TooLarge {
            what,
            n: self.n(),
            limit: MASK_LIMIT,
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of a node: its label if the graph has labels, else its id.
    pub fn label(&self, u: Node) -> String {
        match &self.labels {
            Some(labels) => labels[u].clone(),
            None => u.to_string(),
        }
    }

    /// Resolves an external name back to a node id.
    pub fn node_by_label(&self, label: &str) -> Option<Node> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&u| u < self.n()),
        }
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.n())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n == 0 || self.edge_count == n * (n - 1) / 2
    }

    /// Number of neighbours of `u` inside `s`.
    ///
    /// # Panics
    /// If `u` is not a member of `s`.
    pub fn induced_degree(&self, u: Node, s: &NodeSet) -> usize {
        assert!(s.contains(u), "induced_degree: node {u} is not in the set");
        self.degree_into(u, s)
    }

    /// Number of neighbours of `u` inside `s`, with no membership requirement.
    pub(crate) fn degree_into(&self, u: Node, s: &NodeSet) -> usize {
        if let (Some(rows), Some(mask)) = (&self.rows, s.to_mask()) {
            return (rows[u] & mask).count_ones() as usize;
        }
        self.adj[u].iter().filter(|&&v| s.contains(v)).count()
    }

    /// Number of edges with both ends in `s`.
    pub fn induced_edge_count(&self, s: &NodeSet) -> usize {
        s.iter().map(|u| self.degree_into(u, s)).sum::<usize>() / 2
    }

    /// Whether the subgraph induced by `s` is connected.
    ///
    /// # Panics
    /// If `s` is empty.
    pub fn is_connected(&self, s: &NodeSet) -> bool {
        assert!(!s.is_empty(), "is_connected: empty node set");
        if let (Some(rows), Some(mask)) = (&self.rows, s.to_mask()) {
            return is_connected_mask(rows, mask);
        }
        let start = s.min().expect("nonempty");
        let mut seen = NodeSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if s.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == s.len()
    }

    /// Whether the whole graph is connected. The empty graph counts as connected.
    pub fn is_connected_graph(&self) -> bool {
        self.n() == 0 || self.is_connected(&self.nodes())
    }

    /// Breadth-first distances from `source`; unreachable nodes are `None`.
    pub fn distances(&self, source: Node) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued nodes have a distance");
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Largest distance from `u` to any node.
    pub fn eccentricity(&self, u: Node) -> Result<usize> {
        self.distances(u)
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .ok_or(CohesionError::Disconnected)
    }

    pub fn diameter(&self) -> Result<usize> {
        (0..self.n()).try_fold(0, |acc, u| Ok(acc.max(self.eccentricity(u)?)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Node>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subgraph induced by `nodes`, relabelled to `0..nodes.len()` in the given order.
    /// Labels carry over.
    pub fn induced_subgraph(&self, nodes: &[Node]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &u) in nodes.iter().enumerate() {
            index[u] = i;
        }
        let adj = nodes
            .iter()
            .map(|&u| {
                self.adj[u]
                    .iter()
                    .filter(|&&v| index[v] != usize::MAX)
                    .map(|&v| index[v])
                    .collect()
            })
            .collect();
        let labels = Some(nodes.iter().map(|&u| self.label(u)).collect());
        Graph::from_adjacency(adj, labels)
    }

    /// The largest connected component (ties: the one with the smallest node).
    pub fn largest_component(&self) -> Graph {
        let comps = self.components();
        let best = comps
            .iter()
            .enumerate()
            .max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))
            .map(|(_, c)| c.clone())
            .unwrap_or_default();
        self.induced_subgraph(&best)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Writes the graph as an edge list readable by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&g.label(u));
        out.push(' ');
        out.push_str(&g.label(v));
        out.push('\n');
    }
    out
}
