//! The popularity game on a graph.
//!
//! A node's payoff in a coalition `S` is `deg_S(u) / |S|`, kept as an exact
//! fraction. A set `H` blocks a structure when every member of `H` is strictly
//! better off in `H` than in its own coalition; a structure is core stable when
//! nothing blocks it, and a graph is socially cohesive when the one-coalition
//! structure is core stable.

mod cohesion;
mod partitions;
mod search;
mod structure;
mod verdict;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

pub use cohesion::{is_socially_cohesive, CheckOptions, DEFAULT_EXACT_CAP};
pub use partitions::set_partitions;
pub(crate) use search::BlockingSearch;
pub use search::{find_blocking_set, grand_blocking_set, is_core_stable};
pub use structure::GroupStructure;
pub use verdict::{BlockingCertificate, CohesionVerdict, MemberPayoff, Method, Status};

use crate::graph::{Graph, Node};
use crate::nodeset::NodeSet;

/// An exact payoff `numerator / denominator` in `[0, 1)`.
///
/// Equality and ordering compare the rational values by cross-multiplication,
/// so `1/2 == 2/4`.
#[derive(Clone, Copy, Debug)]
pub struct Popularity {
    num: u32,
    den: u32,
}

impl Popularity {
    pub const ZERO: Popularity = Popularity { num: 0, den: 1 };

    /// # Panics
    /// If `num >= den`.
    pub fn new(num: u32, den: u32) -> Popularity {
        assert!(num < den, "popularity {num}/{den} is not in [0, 1)");
        Popularity { num, den }
    }

    pub fn numerator(self) -> u32 {
        self.num
    }

    pub fn denominator(self) -> u32 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Popularity {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Popularity {}

impl PartialOrd for Popularity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Popularity {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl fmt::Display for Popularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Popularity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Payoff of `u` in coalition `s`: `deg_s(u) / |s|`.
///
/// # Panics
/// If `u` is not in `s`.
pub fn popularity(g: &Graph, u: Node, s: &NodeSet) -> Popularity {
    let deg = g.induced_degree(u, s);
    Popularity::new(deg as u32, s.len() as u32)
}

/// Payoff of `u` inside its own coalition of `w`.
pub fn payoff_under(g: &Graph, w: &GroupStructure, u: Node) -> Popularity {
    popularity(g, u, w.coalition_of(u))
}

/// Direct check of the blocking condition: every member of `s` strictly
/// prefers `s` to its coalition in `w`. Returns the evidence when it holds.
pub fn is_blocking(g: &Graph, s: &NodeSet, w: &GroupStructure) -> Option<BlockingCertificate> {
    if s.is_empty() {
        return None;
    }
    let mut members = Vec::with_capacity(s.len());
    for u in s {
        let in_set = popularity(g, u, s);
        let current = payoff_under(g, w, u);
        if in_set <= current {
            return None;
        }
        members.push(MemberPayoff {
            node: u,
            in_set,
            current,
        });
    }
    Some(BlockingCertificate {
        blocking_set: s.clone(),
        members,
    })
}

/// Tie counts of `u` relative to a set `s` inside an ambient node set.
///
/// `fin`/`fout` are edges from `u` into `s` and into `ambient \ s`; `ein` and
/// `eout` count non-neighbours in `s` (including `u` itself) and in
/// `ambient \ s`. The four always sum to `|ambient|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TieCounts {
    pub fin: usize,
    pub fout: usize,
    pub ein: usize,
    pub eout: usize,
}

impl TieCounts {
    /// # Panics
    /// If `u` is not in `s` or `s` is not contained in `ambient`.
    pub fn compute(g: &Graph, u: Node, s: &NodeSet, ambient: &NodeSet) -> TieCounts {
        assert!(s.contains(u), "tie counts: node {u} is not in the set");
        assert!(
            s.is_subset(ambient),
            "tie counts: set leaves the ambient set"
        );
        let fin = g.degree_into(u, s);
        let outside = ambient.len() - s.len();
        let fout = g.degree_into(u, ambient) - fin;
        TieCounts {
            fin,
            fout,
            ein: s.len() - fin,
            eout: outside - fout,
        }
    }

    /// Relative to the whole node set.
    pub fn in_graph(g: &Graph, u: Node, s: &NodeSet) -> TieCounts {
        assert!(s.contains(u), "tie counts: node {u} is not in the set");
        let fin = g.degree_into(u, s);
        let fout = g.degree(u) - fin;
        TieCounts {
            fin,
            fout,
            ein: s.len() - fin,
            eout: g.n() - s.len() - fout,
        }
    }

    /// `fin * eout - fout * ein`.
    pub fn gamma(&self) -> i64 {
        (self.fin * self.eout) as i64 - (self.fout * self.ein) as i64
    }
}

/// `gamma(u, S) = fin*eout - fout*ein` with the whole graph as ambient set.
pub fn gamma(g: &Graph, u: Node, s: &NodeSet) -> i64 {
    TieCounts::in_graph(g, u, s).gamma()
}

/// Whether `s` blocks the grand coalition, decided through the sign of
/// `gamma`: `s` blocks iff `gamma(u, s) > 0` for every member.
pub fn blocks_grand(g: &Graph, s: &NodeSet) -> bool {
    !s.is_empty() && s.iter().all(|u| gamma(g, u, s) > 0)
}
