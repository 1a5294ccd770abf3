use crate::game::{is_blocking, CohesionVerdict, GroupStructure, Method};
use crate::graph::{CutProfile, Graph};
use crate::nodeset::NodeSet;

/// One-sided test from the minimum-cut profile of a connected, non-complete
/// graph.
///
/// With `kappa == 1` and `chi >= 2`, the smallest component left by a cut
/// node blocks the grand coalition. With `kappa > 1`, `mu > 2` and
/// `chi * (mu - 2) >= kappa`, any edge inside the smallest component of a
/// cut leaving `mu` components blocks. The second rule also needs `chi >= 2`:
/// with single-node components there is no such edge, and `K_{2,4}`
/// (`kappa = 2`, `mu = 4`, `chi = 1`) is cohesive.
///
/// Returns `NotCohesive` with a certificate or `Inconclusive`.
pub fn structural_semi_test(g: &Graph, profile: &CutProfile) -> CohesionVerdict {
    let CutProfile { kappa, chi, mu, .. } = *profile;
    let grand = GroupStructure::grand(g.n());
    let blocker = if kappa == 1 && chi >= 2 {
        Some(profile.chi_component.clone())
    } else if kappa > 1 && mu > 2 && chi >= 2 && chi * (mu - 2) >= kappa {
        let smallest = &profile.mu_components[0];
        smallest
            .iter()
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v)))
            .find(|&(u, v)| u < v && smallest.contains(v))
            .map(|(u, v)| NodeSet::from([u, v]))
    } else {
        None
    };
    match blocker {
        Some(s) => {
            let cert = is_blocking(g, &s, &grand).expect("cut-structure witness blocks");
            CohesionVerdict::not_cohesive(Method::QuickTest, cert)
        }
        None => CohesionVerdict::inconclusive(Method::QuickTest),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{grand_blocking_set, Status};
    use crate::graph::cut_profile;

    #[test]
    fn bowtie_is_rejected() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let v = structural_semi_test(&g, &cut_profile(&g).unwrap());
        assert_eq!(v.status, Status::NotCohesive);
        assert_eq!(v.certificate.unwrap().blocking_set.to_vec(), vec![0, 1]);
    }

    #[test]
    fn star_is_unknown() {
        let g = Graph::star(4);
        let v = structural_semi_test(&g, &cut_profile(&g).unwrap());
        assert_eq!(v.status, Status::Inconclusive);
    }

    #[test]
    fn k23_is_unknown() {
        let g = Graph::complete_bipartite(2, 3);
        let p = cut_profile(&g).unwrap();
        assert_eq!((p.kappa, p.mu, p.chi), (2, 3, 1));
        assert_eq!(structural_semi_test(&g, &p).status, Status::Inconclusive);
    }

    #[test]
    fn single_node_components_need_the_guard() {
        // Without the chi >= 2 guard, chi * (mu - 2) >= kappa would hold here.
        let g = Graph::complete_bipartite(2, 4);
        let p = cut_profile(&g).unwrap();
        assert_eq!((p.kappa, p.mu, p.chi), (2, 4, 1));
        assert!(p.chi * (p.mu - 2) >= p.kappa);
        assert!(grand_blocking_set(&g).unwrap().is_none());
        assert_eq!(structural_semi_test(&g, &p).status, Status::Inconclusive);
    }

    #[test]
    fn three_triangles_on_a_shared_pair() {
        let mut edges = vec![(0, 1)];
        for base in [2, 5, 8] {
            for i in base..base + 3 {
                edges.extend([(0, i), (1, i)]);
                for j in i + 1..base + 3 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(11, &edges).unwrap();
        let p = cut_profile(&g).unwrap();
        assert_eq!((p.kappa, p.mu, p.chi), (2, 3, 3));
        let v = structural_semi_test(&g, &p);
        assert_eq!(v.status, Status::NotCohesive);
        assert_eq!(v.certificate.unwrap().blocking_set.to_vec(), vec![2, 3]);
    }
}
