mod common;

use std::cmp::Ordering;

use cohesion::game::{
    blocks_grand, find_blocking_set, gamma, is_blocking, is_socially_cohesive, payoff_under,
    popularity, CheckOptions, GroupStructure, Status, TieCounts,
};
use cohesion::heuristics::{ap_heuristic, louvain, modularity, run_heuristic, Heuristic};
use cohesion::{Graph, NodeSet};
use common::{brute_not_cohesive, mask_blocks, masks};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A graph with a node subset and a coalition label per node.
fn triple(max_n: usize) -> impl Strategy<Value = (Graph, NodeSet, GroupStructure)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(0..n, n),
        )
            .prop_map(|(g, pick, labels)| {
                let s: NodeSet = (0..g.n()).filter(|&u| pick[u]).collect();
                (g, s, GroupStructure::from_assignment(&labels))
            })
    })
}

fn owner_masks(w: &GroupStructure) -> Vec<u64> {
    (0..w.n())
        .map(|u| w.coalition_of(u).to_mask().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn payoffs_sum_to_twice_the_edges((g, s, _w) in triple(12)) {
        prop_assume!(!s.is_empty());
        let total: u32 = s.iter().map(|u| popularity(&g, u, &s).numerator()).sum();
        for u in &s {
            prop_assert_eq!(popularity(&g, u, &s).denominator() as usize, s.len());
        }
        prop_assert_eq!(total as usize, 2 * g.induced_edge_count(&s));
    }

    #[test]
    fn tie_counts_partition_the_nodes((g, s, _w) in triple(12)) {
        let all = g.nodes();
        for u in &s {
            let t = TieCounts::in_graph(&g, u, &s);
            prop_assert_eq!(t, TieCounts::compute(&g, u, &s, &all));
            prop_assert_eq!(t.fin + t.fout, g.degree(u));
            prop_assert_eq!(t.fin + t.ein, s.len());
            prop_assert_eq!(t.fin + t.fout + t.ein + t.eout, g.n());
        }
    }

    #[test]
    fn gamma_criterion_matches_direct_blocking((g, s, _w) in triple(12)) {
        let grand = GroupStructure::grand(g.n());
        let direct = is_blocking(&g, &s, &grand).is_some();
        prop_assert_eq!(blocks_grand(&g, &s), direct);
        for u in &s {
            let better = popularity(&g, u, &s) > popularity(&g, u, &g.nodes());
            prop_assert_eq!(gamma(&g, u, &s) > 0, better);
        }
    }

    #[test]
    fn blocking_agrees_with_mask_arithmetic((g, s, w) in triple(12)) {
        let rows = masks(&g);
        let mask = s.to_mask().unwrap();
        prop_assert_eq!(is_blocking(&g, &s, &w).is_some(), mask_blocks(&rows, &owner_masks(&w), mask));
    }

    #[test]
    fn exact_and_float_comparisons_agree((g, s, w) in triple(14)) {
        // Denominators stay below 64, so distinct payoffs differ by more than
        // 1/4096 and double precision resolves every comparison.
        for u in &s {
            let a = popularity(&g, u, &s);
            let b = payoff_under(&g, &w, u);
            let fa = g.induced_degree(u, &s) as f64 / s.len() as f64;
            let own = w.coalition_of(u);
            let fb = g.induced_degree(u, own) as f64 / own.len() as f64;
            let float = if (fa - fb).abs() < 1e-12 { Ordering::Equal } else { fa.partial_cmp(&fb).unwrap() };
            prop_assert_eq!(a.cmp(&b), float);
        }
    }

    #[test]
    fn search_is_complete_and_minimal((g, _s, w) in triple(9)) {
        let rows = masks(&g);
        let owner = owner_masks(&w);
        let n = g.n();
        let smallest = (1u64..1 << n)
            .filter(|&m| mask_blocks(&rows, &owner, m))
            .map(u64::count_ones)
            .min();
        match find_blocking_set(&g, &w, None).unwrap() {
            Some(cert) => {
                prop_assert!(cert.verify(&g, &w));
                prop_assert!(g.is_connected(&cert.blocking_set));
                prop_assert_eq!(Some(cert.blocking_set.len() as u32), smallest);
            }
            None => prop_assert_eq!(smallest, None),
        }
    }

    #[test]
    fn cohesion_verdicts_are_right(g in graph(10)) {
        let truth = brute_not_cohesive(&g);
        let grand = GroupStructure::grand(g.n());
        let exact = is_socially_cohesive(&g, &CheckOptions::default()).unwrap();
        prop_assert_eq!(exact.is_not_cohesive(), truth);
        prop_assert_ne!(exact.status, Status::Inconclusive);
        if let Some(cert) = &exact.certificate {
            prop_assert!(cert.verify(&g, &grand));
        }
        let quick = is_socially_cohesive(&g, &CheckOptions::quick()).unwrap();
        match quick.status {
            Status::Cohesive => prop_assert!(!truth),
            Status::NotCohesive => {
                prop_assert!(truth);
                prop_assert!(quick.certificate.as_ref().unwrap().verify(&g, &grand));
            }
            Status::Inconclusive => {}
        }
    }

    #[test]
    fn louvain_output_is_a_partition_at_least_as_modular_as_singletons(g in graph(14)) {
        let w = louvain(&g, None);
        prop_assert_eq!(w.n(), g.n());
        let covered: usize = w.coalitions().iter().map(NodeSet::len).sum();
        prop_assert_eq!(covered, g.n());
        if g.edge_count() > 0 {
            let q = modularity(&g, &w).unwrap();
            prop_assert!(q + 1e-12 >= modularity(&g, &GroupStructure::singletons(g.n())).unwrap());
            prop_assert!(q + 1e-12 >= modularity(&g, &GroupStructure::grand(g.n())).unwrap());
        }
        let seeded = louvain(&g, Some(7));
        prop_assert_eq!(seeded.n(), g.n());
    }

    #[test]
    fn ap_output_is_a_group_structure(g in graph(14)) {
        let w = ap_heuristic(&g);
        let covered: usize = w.coalitions().iter().map(NodeSet::len).sum();
        prop_assert_eq!(covered, g.n());
        prop_assert!(w.is_group_structure(&g));
    }

    #[test]
    fn heuristic_certificates_reverify(g in graph(14)) {
        let grand = GroupStructure::grand(g.n());
        for method in Heuristic::ALL {
            let outcome = run_heuristic(&g, method, None);
            if let Some(cert) = &outcome.blocking_found {
                prop_assert!(cert.verify(&g, &grand));
                prop_assert!(outcome.structure.coalitions().contains(&cert.blocking_set));
            }
        }
    }
}
