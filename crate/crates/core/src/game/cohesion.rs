use super::{grand_blocking_set, is_blocking, CohesionVerdict, GroupStructure, Method};
use crate::characterize::structural_semi_test;
use crate::error::{CohesionError, Result};
use crate::graph::{profile_for_kappa, vertex_connectivity, Graph};
use crate::nodeset::{NodeSet, MASK_LIMIT};

pub const DEFAULT_EXACT_CAP: usize = 25;

/// Enumerating all `C(n, kappa)` candidate cuts stops being a quick test
/// beyond this many.
const STRUCTURAL_CUT_BUDGET: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest node count for which the exhaustive search is attempted.
    pub exact_cap: usize,
    /// Stop after the quick tests, answering `Inconclusive` when none fires.
    pub quick_only: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            exact_cap: DEFAULT_EXACT_CAP,
            quick_only: false,
        }
    }
}

impl CheckOptions {
    pub fn quick() -> Self {
        CheckOptions {
            quick_only: true,
            ..CheckOptions::default()
        }
    }
}

/// Decides whether the grand coalition of `g` is core stable.
///
/// Cheap rejections run first: the max-degree bound, the edge test (an edge
/// whose endpoints both earn less than 1/2 blocks) and the cut-structure
/// test. Survivors go to the exhaustive search unless `quick_only` is set;
/// the search refuses graphs above `exact_cap` nodes.
pub fn is_socially_cohesive(g: &Graph, opts: &CheckOptions) -> Result<CohesionVerdict> {
    let n = g.n();
    // Nobody earns anything in an edgeless graph, inside or outside V.
    if n <= 1 || g.edge_count() == 0 {
        return Ok(CohesionVerdict::cohesive(Method::Exact));
    }
    let grand = GroupStructure::grand(n);
    let edge_cert = |u, v| {
        is_blocking(g, &NodeSet::from([u, v]), &grand)
            .expect("edge between low-payoff nodes blocks")
    };

    if n > 2 * g.max_degree() {
        let (u, v) = g.edges().next().expect("graph has an edge");
        return Ok(CohesionVerdict::not_cohesive(
            Method::QuickTest,
            edge_cert(u, v),
        ));
    }
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| 2 * g.degree(u) < n && 2 * g.degree(v) < n)
    {
        return Ok(CohesionVerdict::not_cohesive(
            Method::QuickTest,
            edge_cert(u, v),
        ));
    }
    if (3..=MASK_LIMIT).contains(&n) && !g.is_complete() && g.is_connected_graph() {
        let kappa = vertex_connectivity(g)?;
        if binomial(n, kappa) <= STRUCTURAL_CUT_BUDGET {
            let verdict = structural_semi_test(g, &profile_for_kappa(g, kappa));
            if verdict.is_not_cohesive() {
                return Ok(verdict);
            }
        }
    }
    if opts.quick_only {
        return Ok(CohesionVerdict::inconclusive(Method::QuickTest));
    }

    let cap = opts.exact_cap.min(MASK_LIMIT);
    if n > cap {
        return Err(CohesionError::ExactCapExceeded { n, cap });
    }
    Ok(match grand_blocking_set(g)? {
        Some(cert) => CohesionVerdict::not_cohesive(Method::Exact, cert),
        None => CohesionVerdict::cohesive(Method::Exact),
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Status;

    fn g1() -> Graph {
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

    fn check(g: &Graph) -> CohesionVerdict {
        is_socially_cohesive(g, &CheckOptions::default()).unwrap()
    }

    #[test]
    fn example_networks() {
        for n in 1..9 {
            assert!(check(&Graph::complete(n)).is_cohesive());
        }
        assert!(check(&g1()).is_not_cohesive());
        assert!(check(&g1().with_edge(0, 3).unwrap()).is_cohesive());
        let star = Graph::star(4);
        assert!(check(&star).is_cohesive());
        let v = check(&star.with_edge(1, 2).unwrap());
        assert_eq!(v.method, Method::QuickTest);
        assert_eq!(v.certificate.unwrap().blocking_set.to_vec(), vec![1, 2]);
    }

    #[test]
    fn sparse_graphs_fail_the_degree_bound() {
        let v = check(&Graph::path(7));
        assert_eq!(v.method, Method::QuickTest);
        assert_eq!(v.certificate.unwrap().blocking_set.to_vec(), vec![0, 1]);
    }

    #[test]
    fn edgeless_graphs_are_cohesive() {
        assert!(check(&Graph::empty(4)).is_cohesive());
    }

    #[test]
    fn cap_is_enforced() {
        // Complete bipartite graphs pass every quick test.
        let g = Graph::complete_bipartite(13, 13);
        let err = is_socially_cohesive(&g, &CheckOptions::default()).unwrap_err();
        assert_eq!(err, CohesionError::ExactCapExceeded { n: 26, cap: 25 });
        let quick = is_socially_cohesive(&g, &CheckOptions::quick()).unwrap();
        assert_eq!(quick.status, Status::Inconclusive);
        let opts = CheckOptions {
            exact_cap: 26,
            quick_only: false,
        };
        assert!(is_socially_cohesive(&g, &opts).unwrap().is_cohesive());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(binomial(7, 0), 1);
    }
}
