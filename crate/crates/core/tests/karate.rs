mod common;

use cohesion::experiments::{real_study, ExperimentConfig};
use cohesion::game::{
    is_socially_cohesive, payoff_under, popularity, CheckOptions, GroupStructure, Status,
};
use cohesion::heuristics::{run_heuristic, Heuristic};
use common::karate;

#[test]
fn ingestion_counts() {
    let g = karate();
    assert_eq!((g.n(), g.edge_count()), (34, 78));
    assert!(g.is_connected_graph());
    assert_eq!(g.largest_component().n(), 34);
}

#[test]
fn louvain_finds_about_four_communities() {
    let g = karate();
    let w = run_heuristic(&g, Heuristic::Lm, None).structure;
    assert!((3..=5).contains(&w.len()), "{} communities", w.len());
}

#[test]
fn quick_tests_refute_cohesion() {
    let g = karate();
    let v = is_socially_cohesive(&g, &CheckOptions::quick()).unwrap();
    assert_eq!(v.status, Status::NotCohesive);
    assert!(v
        .certificate
        .unwrap()
        .verify(&g, &GroupStructure::grand(34)));
}

#[test]
fn louvain_improves_almost_everyone() {
    let g = karate();
    let w = run_heuristic(&g, Heuristic::Lm, None).structure;
    let v = g.nodes();
    let improved = (0..34)
        .filter(|&u| payoff_under(&g, &w, u) > popularity(&g, u, &v))
        .count();
    assert!(improved as f64 / 34.0 >= 0.95, "{improved} of 34");
}

#[test]
fn real_study_report() {
    let g = karate();
    let report = real_study("ZA", &g, &ExperimentConfig::default()).unwrap();
    assert!(report.refuted());
    assert_eq!((report.nodes, report.edges), (34, 78));
    let grand = report.row("grand").unwrap();
    assert_eq!(grand.communities, 1);
    let csv = report.to_csv();
    assert!(csv.starts_with("dataset,nodes,edges,method,communities"));
    assert_eq!(csv.lines().count(), 4);
    for row in ["lm", "ap"] {
        let r = report.row(row).unwrap();
        assert!(r.payoffs.q0 <= r.payoffs.q50 && r.payoffs.q50 <= r.payoffs.q100);
    }
}
