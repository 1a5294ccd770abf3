//! Closed-form stability rules for special graph classes, the cut-structure
//! test, and the machinery for graphs whose nodes split into universal nodes
//! and the rest.
//!
//! The oracles take a structural description (class parameters plus a
//! structure) rather than inspecting a graph, with these node layouts:
//! stars have the center at 0; `K_{m,n}` has the `m`-side at `0..m` and the
//! `n`-side at `m..m+n`, as built by [`Graph::star`](crate::Graph::star) and
//! [`Graph::complete_bipartite`](crate::Graph::complete_bipartite).

mod ndu2;
mod structural;

pub use ndu2::{
    eccentricity_partition, lambda_value, ndu2_cohesive, turan_sufficient, EccentricityPartition,
};
pub use structural::structural_semi_test;

use serde::Serialize;

use crate::game::GroupStructure;
use crate::nodeset::NodeSet;

/// How a node set splits across a declared bipartition `(V1, V2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteCoalitionStats {
    /// Members in `V1`.
    pub ell: usize,
    /// Members in `V2`.
    pub r: usize,
}

impl BipartiteCoalitionStats {
    pub fn of(s: &NodeSet, v1: &NodeSet) -> Self {
        let ell = s.intersection(v1).len();
        BipartiteCoalitionStats {
            ell,
            r: s.len() - ell,
        }
    }
}

/// A structure with at most one coalition of two or more nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClanStructure {
    pub clan: Option<NodeSet>,
    pub exiles: NodeSet,
    pub iota: usize,
}

impl ClanStructure {
    /// `None` when `w` has two or more non-singleton coalitions.
    pub fn from_structure(w: &GroupStructure) -> Option<ClanStructure> {
        let mut clan = None;
        let mut exiles = NodeSet::new();
        for c in w.coalitions() {
            if c.len() == 1 {
                exiles.insert(c.min().expect("non-empty"));
            } else if clan.replace(c.clone()).is_some() {
                return None;
            }
        }
        let iota = exiles.len();
        Some(ClanStructure { clan, exiles, iota })
    }

    /// The clan structure on `n` nodes with the given clan; a clan of fewer
    /// than two nodes means everybody is an exile.
    pub fn new(n: usize, clan: &[usize]) -> ClanStructure {
        let clan: NodeSet = clan.iter().copied().collect();
        let clan = (clan.len() > 1).then_some(clan);
        let exiles = match &clan {
            Some(c) => NodeSet::full(n).difference(c),
            None => NodeSet::full(n),
        };
        ClanStructure {
            iota: exiles.len(),
            clan,
            exiles,
        }
    }

    pub fn to_structure(&self, n: usize) -> GroupStructure {
        let mut sets: Vec<NodeSet> = self.clan.iter().cloned().collect();
        sets.extend(self.exiles.iter().map(NodeSet::singleton));
        GroupStructure::from_sets(n, sets).expect("clan and exiles partition the nodes")
    }

    /// Every clan structure on `n` nodes: each subset of size two or more as
    /// the clan, plus the all-exile structure.
    pub fn all(n: usize) -> impl Iterator<Item = ClanStructure> {
        assert!(n < 64, "clan enumeration needs fewer than 64 nodes");
        (0..1u64 << n)
            .filter(|m| m.count_ones() != 1)
            .map(move |m| ClanStructure::new(n, &NodeSet::from_mask(m).to_vec()))
    }
}

/// Core stability of a structure of the star with `m` tails: stable iff the
/// center's coalition holds at least half of the tails.
///
/// Tails outside the center's coalition earn nothing whether they are
/// exiles or grouped with other tails, so the rule covers every partition,
/// not only clan structures.
///
/// # Panics
/// If `m < 2` or `w` is not over `m + 1` nodes.
pub fn star_stable(m: usize, w: &GroupStructure) -> bool {
    assert!(m >= 2, "a star needs at least two tails");
    assert_eq!(w.n(), m + 1, "structure is not over a star with {m} tails");
    let ell = w.coalition_of(0).len() - 1;
    2 * ell >= m
}

/// Core stability of a structure of `K_{n,n}`: stable iff every coalition
/// has as many nodes on each side.
///
/// # Panics
/// If `w` is not over `2n` nodes.
pub fn knn_stable(n: usize, w: &GroupStructure) -> bool {
    assert_eq!(w.n(), 2 * n, "structure is not over K_{{{n},{n}}}");
    let v1 = NodeSet::full(n);
    w.coalitions().iter().all(|s| {
        let st = BipartiteCoalitionStats::of(s, &v1);
        st.ell == st.r
    })
}

/// Core stability of a clan structure of `K_{m,n}`, `m >= n > 0`: stable iff
/// the clan holds the whole `n`-side and `ell >= max(n, iota * n)`.
///
/// # Panics
/// If `m < n` or `n == 0`.
pub fn kmn_clan_stable(m: usize, n: usize, w: &ClanStructure) -> bool {
    assert!(m >= n && n > 0, "need m >= n > 0");
    let Some(clan) = &w.clan else {
        return false;
    };
    let v1 = NodeSet::full(m);
    let v2: NodeSet = (m..m + n).collect();
    let st = BipartiteCoalitionStats::of(clan, &v1);
    v2.is_subset(clan) && st.ell >= n.max(w.iota * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{is_core_stable, set_partitions};
    use crate::graph::Graph;

    #[test]
    fn star_examples() {
        let two = GroupStructure::new(5, vec![vec![0, 1, 2], vec![3], vec![4]]).unwrap();
        let one = GroupStructure::new(5, vec![vec![0, 1], vec![2], vec![3], vec![4]]).unwrap();
        assert!(star_stable(4, &two));
        assert!(!star_stable(4, &one));
        assert!(star_stable(2, &GroupStructure::grand(3)));
        let g = Graph::star(4);
        assert!(is_core_stable(&g, &two).unwrap().is_cohesive());
        assert!(!is_core_stable(&g, &one).unwrap().is_cohesive());
    }

    #[test]
    fn star_rule_holds_for_every_partition() {
        for m in 2..=6 {
            let g = Graph::star(m);
            for w in set_partitions(m + 1) {
                let exact = is_core_stable(&g, &w).unwrap().is_cohesive();
                assert_eq!(star_stable(m, &w), exact, "m={m} w={w:?}");
            }
        }
    }

    #[test]
    fn knn_examples() {
        let matching = GroupStructure::new(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert!(knn_stable(3, &matching));
        assert!(knn_stable(3, &GroupStructure::grand(6)));
        let lopsided = GroupStructure::new(4, vec![vec![0], vec![2], vec![1, 3]]).unwrap();
        assert!(!knn_stable(2, &lopsided));
        assert!(is_core_stable(&Graph::complete_bipartite(3, 3), &matching)
            .unwrap()
            .is_cohesive());
    }

    #[test]
    fn kmn_examples() {
        let partial = ClanStructure::new(6, &[0, 1, 4, 5]);
        assert_eq!(partial.iota, 2);
        assert!(!kmn_clan_stable(4, 2, &partial));
        assert!(
            !is_core_stable(&Graph::complete_bipartite(4, 2), &partial.to_structure(6))
                .unwrap()
                .is_cohesive()
        );
        assert!(kmn_clan_stable(
            4,
            2,
            &ClanStructure::new(6, &[0, 1, 2, 3, 4, 5])
        ));
        // K_{3,1} is the star with three tails; its center is node 3 here.
        let star = ClanStructure::new(4, &[0, 1, 3]);
        assert!(kmn_clan_stable(3, 1, &star));
    }

    #[test]
    fn clan_round_trip() {
        let w = GroupStructure::new(5, vec![vec![1], vec![0, 2, 4], vec![3]]).unwrap();
        let clan = ClanStructure::from_structure(&w).unwrap();
        assert_eq!(clan.iota, 2);
        assert!(clan.to_structure(5).same_partition(&w));
        let two = GroupStructure::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(ClanStructure::from_structure(&two).is_none());
        // 2^4 subsets minus the 4 singletons
        assert_eq!(ClanStructure::all(4).count(), 12);
    }
}
