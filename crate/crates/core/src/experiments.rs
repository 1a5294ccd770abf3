//! Experiment drivers: exhaustive studies over small connected graphs,
//! random-sample studies, and runs on real networks.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{CohesionError, Result};
use crate::game::{
    is_socially_cohesive, payoff_under, popularity, CheckOptions, CohesionVerdict, GroupStructure,
    Popularity,
};
use crate::graph::{enumerate_connected_graphs, sample_with_stream, Graph};
use crate::heuristics::{evaluate_batch, run_heuristic, ExperimentReport, Heuristic};

/// Settings shared by the studies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub methods: Vec<Heuristic>,
    pub seed: u64,
    pub exact_cap: usize,
    /// Also check each heuristic structure for core stability, exactly.
    pub core_stability: bool,
    /// Sampling draws only connected graphs (by rejection) when set.
    pub connected_only: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            methods: Heuristic::ALL.to_vec(),
            seed: 0,
            exact_cap: crate::game::DEFAULT_EXACT_CAP,
            core_stability: true,
            connected_only: false,
        }
    }
}

impl ExperimentConfig {
    fn check(&self) -> CheckOptions {
        CheckOptions {
            exact_cap: self.exact_cap,
            quick_only: false,
        }
    }

    fn require_exact(&self, n: usize) -> Result<()> {
        if n > self.exact_cap {
            return Err(CohesionError::ExactCapExceeded {
                n,
                cap: self.exact_cap,
            });
        }
        Ok(())
    }
}

/// Default number of samples per size.
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Every connected graph on `n` nodes, one per isomorphism class.
pub fn enumerate_study(n: usize, config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.require_exact(n)?;
    let graphs = enumerate_connected_graphs(n)?;
    evaluate_batch(
        &n.to_string(),
        graphs.into_par_iter(),
        &config.methods,
        &config.check(),
        config.core_stability,
        config.seed,
    )
}

/// `count` uniform random graphs on `n` nodes (each pair an edge with
/// probability 1/2), drawn from independent streams of `config.seed`.
pub fn sample_study(n: usize, count: usize, config: &ExperimentConfig) -> Result<ExperimentReport> {
    if count == 0 {
        return Err(CohesionError::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    config.require_exact(n)?;
    let (graphs, draws) = if config.connected_only {
        let mut graphs = Vec::with_capacity(count);
        let mut index = 0u64;
        while graphs.len() < count {
            let g = sample_with_stream(n, config.seed, index);
            index += 1;
            if g.is_connected_graph() {
                graphs.push(g);
            }
        }
        (graphs, index)
    } else {
        let graphs: Vec<Graph> = (0..count as u64)
            .into_par_iter()
            .map(|i| sample_with_stream(n, config.seed, i))
            .collect();
        (graphs, count as u64)
    };
    let connected = graphs.iter().filter(|g| g.is_connected_graph()).count() as u64;
    let connected_fraction = if config.connected_only {
        count as f64 / draws as f64
    } else {
        connected as f64 / draws as f64
    };
    let mut report = evaluate_batch(
        &n.to_string(),
        graphs.into_par_iter(),
        &config.methods,
        &config.check(),
        config.core_stability,
        config.seed,
    )?;
    report.connected_fraction = Some(connected_fraction);
    Ok(report)
}

/// Five-number summary of payoffs by nearest rank, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PayoffQuantiles {
    pub q0: Popularity,
    pub q25: Popularity,
    pub q50: Popularity,
    pub q75: Popularity,
    pub q100: Popularity,
}

impl PayoffQuantiles {
    /// # Panics
    /// If `values` is empty.
    pub fn of(mut values: Vec<Popularity>) -> PayoffQuantiles {
        assert!(!values.is_empty(), "quantiles of an empty sample");
        values.sort();
        let at = |p: usize| {
            let rank = (p * values.len()).div_ceil(100).max(1);
            values[rank - 1]
        };
        PayoffQuantiles {
            q0: at(0),
            q25: at(25),
            q50: at(50),
            q75: at(75),
            q100: at(100),
        }
    }

    pub fn as_array(&self) -> [Popularity; 5] {
        [self.q0, self.q25, self.q50, self.q75, self.q100]
    }
}

/// Grand-coalition or heuristic results on one real network.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealRow {
    /// `grand`, `lm` or `ap`.
    pub method: String,
    pub communities: usize,
    pub blocking_found: bool,
    /// Share of nodes earning more than in the grand coalition.
    pub improved_node_rate: f64,
    pub payoffs: PayoffQuantiles,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealReport {
    pub dataset: String,
    pub nodes: usize,
    pub edges: usize,
    /// Quick-test verdict on the grand coalition.
    pub quick_verdict: Value,
    /// First heuristic certificate, re-verified, when the quick tests were
    /// inconclusive.
    pub heuristic_verdict: Option<Value>,
    pub rows: Vec<RealRow>,
}

impl RealReport {
    pub fn csv_header() -> &'static str {
        "dataset,nodes,edges,method,communities,blocking_found,improved_node_rate,q0,q25,q50,q75,q100"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::csv_header());
        out.push('\n');
        for r in &self.rows {
            let _ = write!(
                out,
                "{},{},{},{},{},{},{:.6}",
                self.dataset,
                self.nodes,
                self.edges,
                r.method,
                r.communities,
                r.blocking_found,
                r.improved_node_rate
            );
            for q in r.payoffs.as_array() {
                let _ = write!(out, ",{:.6}", q.to_f64());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn row(&self, method: &str) -> Option<&RealRow> {
        self.rows.iter().find(|r| r.method == method)
    }

    /// Whether the network was shown not cohesive, by quick test or heuristic.
    pub fn refuted(&self) -> bool {
        self.quick_verdict["status"] == "not_cohesive"
            || self
                .heuristic_verdict
                .as_ref()
                .is_some_and(|v| v["status"] == "not_cohesive")
    }
}

/// Heuristics on the largest connected component of `g`. Cohesion is only
/// probed with the quick tests; no exhaustive search is attempted.
pub fn real_study(dataset: &str, g: &Graph, config: &ExperimentConfig) -> Result<RealReport> {
    let g = g.largest_component();
    let n = g.n();
    if n == 0 {
        return Err(CohesionError::InvalidArgument("empty network".into()));
    }
    let grand = GroupStructure::grand(n);
    let v = g.nodes();
    let grand_payoffs: Vec<Popularity> = (0..n).map(|u| popularity(&g, u, &v)).collect();

    let quick: CohesionVerdict = is_socially_cohesive(&g, &CheckOptions::quick())?;
    let mut rows = vec![RealRow {
        method: "grand".into(),
        communities: 1,
        blocking_found: false,
        improved_node_rate: 0.0,
        payoffs: PayoffQuantiles::of(grand_payoffs.clone()),
    }];
    let mut heuristic_verdict = None;
    for &method in &config.methods {
        let outcome = run_heuristic(&g, method, None);
        if let Some(cert) = &outcome.blocking_found {
            assert!(
                cert.verify(&g, &grand),
                "heuristic certificate does not verify"
            );
            if heuristic_verdict.is_none() {
                heuristic_verdict = Some(outcome.verdict().to_json(&g));
            }
        }
        let payoffs: Vec<Popularity> = (0..n)
            .map(|u| payoff_under(&g, &outcome.structure, u))
            .collect();
        let improved = payoffs
            .iter()
            .zip(&grand_payoffs)
            .filter(|(p, q)| p > q)
            .count();
        rows.push(RealRow {
            method: method.name().into(),
            communities: outcome.structure.len(),
            blocking_found: outcome.blocking_found.is_some(),
            improved_node_rate: improved as f64 / n as f64,
            payoffs: PayoffQuantiles::of(payoffs),
        });
    }
    Ok(RealReport {
        dataset: dataset.to_string(),
        nodes: n,
        edges: g.edge_count(),
        quick_verdict: quick.to_json(&g),
        heuristic_verdict,
        rows,
    })
}

/// Renders saved reports as one CSV, or as a Markdown table.
pub fn render_reports(reports: &[ExperimentReport], markdown: bool) -> String {
    let rows = reports.iter().flat_map(|r| &r.rows);
    if !markdown {
        let merged = ExperimentReport {
            rows: rows.cloned().collect(),
            connected_fraction: None,
        };
        return merged.to_csv();
    }
    let mut out = String::from(
        "| n | method | s | b | c | accuracy | core stable | improved nodes |\n|---|---|---|---|---|---|---|---|\n",
    );
    for r in rows {
        let stable = r
            .core_stable_rate
            .map_or_else(|| "n/a".to_string(), |x| format!("{:.1}%", 100.0 * x));
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {:.1}% | {} | {:.1}% |",
            r.n,
            r.method,
            r.s,
            r.b,
            r.c,
            100.0 * r.accuracy,
            stable,
            100.0 * r.improved_node_rate
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantiles_by_nearest_rank() {
        let vals: Vec<Popularity> = (0..10).map(|i| Popularity::new(i, 10)).collect();
        let q = PayoffQuantiles::of(vals);
        assert_eq!(q.q0, Popularity::new(0, 1));
        assert_eq!(q.q25, Popularity::new(2, 10));
        assert_eq!(q.q50, Popularity::new(4, 10));
        assert_eq!(q.q75, Popularity::new(7, 10));
        assert_eq!(q.q100, Popularity::new(9, 10));
        let one = PayoffQuantiles::of(vec![Popularity::new(1, 3)]);
        assert!(one.as_array().iter().all(|&p| p == Popularity::new(1, 3)));
    }

    #[test]
    fn enumerate_five_counts_classes() {
        let config = ExperimentConfig {
            core_stability: false,
            ..ExperimentConfig::default()
        };
        let report = enumerate_study(5, &config).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert!(report.rows.iter().all(|r| r.s == 21));
    }

    #[test]
    fn sampling_is_deterministic() {
        let config = ExperimentConfig {
            seed: 11,
            ..ExperimentConfig::default()
        };
        let a = sample_study(8, 50, &config).unwrap();
        let b = sample_study(8, 50, &config).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert!(a.connected_fraction.unwrap() > 0.0);
        let connected = ExperimentConfig {
            connected_only: true,
            ..config
        };
        let c = sample_study(8, 20, &connected).unwrap();
        assert_eq!(c.rows[0].s, 20);
    }

    #[test]
    fn cap_is_checked() {
        let config = ExperimentConfig {
            exact_cap: 6,
            ..ExperimentConfig::default()
        };
        assert!(matches!(
            sample_study(8, 5, &config),
            Err(CohesionError::ExactCapExceeded { .. })
        ));
    }

    #[test]
    fn real_study_on_two_triangles() {
        let g = Graph::from_edges(
            7,
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
        .unwrap();
        let report = real_study("g1", &g, &ExperimentConfig::default()).unwrap();
        assert_eq!((report.nodes, report.edges), (6, 8));
        assert!(report.refuted());
        let lm = report.row("lm").unwrap();
        assert_eq!(lm.communities, 2);
        assert_eq!(lm.improved_node_rate, 1.0);
        assert!(report.to_csv().lines().count() == 4);
    }
}
