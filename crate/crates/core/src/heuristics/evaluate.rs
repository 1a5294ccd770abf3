use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run_heuristic, Heuristic};
use crate::game::{is_socially_cohesive, payoff_under, popularity, CheckOptions};
use crate::graph::Graph;
use crate::Result;

/// What one heuristic achieved on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MethodTally {
    pub method: Heuristic,
    pub found_blocking: bool,
    /// `None` when the exact core-stability check was skipped.
    pub core_stable: Option<bool>,
    /// Nodes earning strictly more under the heuristic's structure than in
    /// the grand coalition.
    pub improved_nodes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEvaluation {
    pub n: usize,
    pub cohesive: bool,
    pub methods: Vec<MethodTally>,
}

/// Exact ground truth plus every heuristic's result on `g`.
///
/// `core_stability` also runs the exact core-stability check on each
/// heuristic structure.
pub fn evaluate_graph(
    g: &Graph,
    methods: &[Heuristic],
    check: &CheckOptions,
    core_stability: bool,
) -> Result<GraphEvaluation> {
    let truth = is_socially_cohesive(g, check)?;
    let v = g.nodes();
    let methods = methods
        .iter()
        .map(|&method| {
            let mut outcome = run_heuristic(g, method, None);
            let found_blocking = outcome.blocking_found.is_some();
            assert!(
                !(found_blocking && truth.is_cohesive()),
                "heuristic certificate on a cohesive graph"
            );
            let core_stable = if core_stability {
                Some(outcome.verify_core_stability(g)?)
            } else {
                None
            };
            let improved_nodes = (0..g.n())
                .filter(|&u| payoff_under(g, &outcome.structure, u) > popularity(g, u, &v))
                .count();
            Ok(MethodTally {
                method,
                found_blocking,
                core_stable,
                improved_nodes,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GraphEvaluation {
        n: g.n(),
        cohesive: truth.is_cohesive(),
        methods,
    })
}

/// One CSV row: a heuristic's scores over a batch of graphs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    /// Node count, or a dataset name.
    pub n: String,
    /// Graphs evaluated.
    pub s: u64,
    /// Graphs where the heuristic found a blocking set.
    pub b: u64,
    /// Cohesive graphs.
    pub c: u64,
    pub accuracy: f64,
    /// `None` when core stability was not checked.
    pub core_stable_rate: Option<f64>,
    pub improved_node_rate: f64,
    pub method: Heuristic,
    pub seed: u64,
    pub core_stable: Option<u64>,
    pub improved_nodes: u64,
    pub total_nodes: u64,
}

impl ReportRow {
    pub fn csv_header() -> &'static str {
        "n,s,b,c,accuracy,core_stable_rate,improved_node_rate,method,seed"
    }

    pub fn csv_line(&self) -> String {
        let stable = self
            .core_stable_rate
            .map_or_else(|| "NA".to_string(), |r| format!("{r:.6}"));
        format!(
            "{},{},{},{},{:.6},{},{:.6},{},{}",
            self.n,
            self.s,
            self.b,
            self.c,
            self.accuracy,
            stable,
            self.improved_node_rate,
            self.method,
            self.seed
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
    /// Share of connected graphs among those drawn, in sampling runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected_fraction: Option<f64>,
}

impl ExperimentReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(ReportRow::csv_header());
        out.push('\n');
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.csv_line());
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn row(&self, method: Heuristic) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.method == method)
    }

    pub fn extend(&mut self, other: ExperimentReport) {
        self.rows.extend(other.rows);
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    s: u64,
    c: u64,
    nodes: u64,
    per_method: Vec<(u64, u64, u64)>,
}

impl Tally {
    fn of(e: &GraphEvaluation) -> Tally {
        Tally {
            s: 1,
            c: e.cohesive as u64,
            nodes: e.n as u64,
            per_method: e
                .methods
                .iter()
                .map(|m| {
                    (
                        m.found_blocking as u64,
                        m.core_stable.unwrap_or(false) as u64,
                        m.improved_nodes as u64,
                    )
                })
                .collect(),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        if self.s == 0 {
            return other;
        }
        if other.s == 0 {
            return self;
        }
        self.s += other.s;
        self.c += other.c;
        self.nodes += other.nodes;
        for (a, b) in self.per_method.iter_mut().zip(other.per_method) {
            a.0 += b.0;
            a.1 += b.1;
            a.2 += b.2;
        }
        self
    }
}

/// Evaluates every graph of the stream and aggregates per heuristic.
///
/// Aggregation only sums counts, so the report does not depend on how the
/// work is scheduled.
pub fn evaluate_batch(
    label: &str,
    graphs: impl ParallelIterator<Item = Graph>,
    methods: &[Heuristic],
    check: &CheckOptions,
    core_stability: bool,
    seed: u64,
) -> Result<ExperimentReport> {
    let tally = graphs
        .map(|g| evaluate_graph(&g, methods, check, core_stability).map(|e| Tally::of(&e)))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let ratio = |num: u64, den: u64| {
        if den == 0 {
            0.0
        } else {
            num as f64 / den as f64
        }
    };
    let rows = methods
        .iter()
        .enumerate()
        .map(|(i, &method)| {
            let (b, stable, improved) = tally.per_method.get(i).copied().unwrap_or_default();
            ReportRow {
                n: label.to_string(),
                s: tally.s,
                b,
                c: tally.c,
                accuracy: ratio(b + tally.c, tally.s),
                core_stable_rate: core_stability.then(|| ratio(stable, tally.s)),
                improved_node_rate: ratio(improved, tally.nodes),
                method,
                seed,
                core_stable: core_stability.then_some(stable),
                improved_nodes: improved,
                total_nodes: tally.nodes,
            }
        })
        .collect();
    Ok(ExperimentReport {
        rows,
        connected_fraction: None,
    })
}
