//! Heuristics that look for a blocking set of the grand coalition by first
//! building a group structure, and the batch evaluation used to score them.
//!
//! LM partitions the graph by Louvain modularity optimisation; AP repeatedly
//! takes the closed neighbourhood with the highest average payoff. Either way
//! each coalition is then tested against the grand coalition.

mod ap;
mod evaluate;
mod louvain;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use ap::ap_heuristic;
pub use evaluate::{
    evaluate_batch, evaluate_graph, ExperimentReport, GraphEvaluation, MethodTally, ReportRow,
};
pub use louvain::{louvain, modularity};

use crate::error::CohesionError;
use crate::game::{
    blocks_grand, is_blocking, is_core_stable, BlockingCertificate, CohesionVerdict,
    GroupStructure, Method,
};
use crate::graph::Graph;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Heuristic {
    /// Louvain modularity.
    Lm,
    /// Average-payoff greedy.
    Ap,
}

impl Heuristic {
    pub const ALL: [Heuristic; 2] = [Heuristic::Lm, Heuristic::Ap];

    pub fn name(self) -> &'static str {
        match self {
            Heuristic::Lm => "lm",
            Heuristic::Ap => "ap",
        }
    }

    /// The structure this heuristic builds. `seed` only affects LM, whose node
    /// visiting order is shuffled when a seed is given.
    pub fn structure(self, g: &Graph, seed: Option<u64>) -> GroupStructure {
        match self {
            Heuristic::Lm => louvain(g, seed),
            Heuristic::Ap => ap_heuristic(g),
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Heuristic {
    type Err = CohesionError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lm" => Ok(Heuristic::Lm),
            "ap" => Ok(Heuristic::Ap),
            other => Err(CohesionError::InvalidArgument(format!(
                "unknown heuristic `{other}` (expected lm or ap)"
            ))),
        }
    }
}

/// A heuristic structure and what was learned from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeuristicOutcome {
    pub structure: GroupStructure,
    /// The first coalition of `structure` that blocks the grand coalition.
    pub blocking_found: Option<BlockingCertificate>,
    /// Filled by [`HeuristicOutcome::verify_core_stability`].
    pub core_stable_exact: Option<bool>,
}

impl HeuristicOutcome {
    pub fn new(g: &Graph, structure: GroupStructure) -> HeuristicOutcome {
        let grand = GroupStructure::grand(g.n());
        let blocking_found = structure
            .coalitions()
            .iter()
            .find(|s| blocks_grand(g, s))
            .map(|s| is_blocking(g, s, &grand).expect("gamma criterion agrees with payoffs"));
        HeuristicOutcome {
            structure,
            blocking_found,
            core_stable_exact: None,
        }
    }

    /// Runs the exact core-stability check on the structure.
    pub fn verify_core_stability(&mut self, g: &Graph) -> Result<bool> {
        let stable = is_core_stable(g, &self.structure)?.is_cohesive();
        self.core_stable_exact = Some(stable);
        Ok(stable)
    }

    pub fn verdict(&self) -> CohesionVerdict {
        match &self.blocking_found {
            Some(cert) => CohesionVerdict::not_cohesive(Method::Heuristic, cert.clone()),
            None => CohesionVerdict::inconclusive(Method::Heuristic),
        }
    }
}

pub fn run_heuristic(g: &Graph, method: Heuristic, seed: Option<u64>) -> HeuristicOutcome {
    HeuristicOutcome::new(g, method.structure(g, seed))
}

/// `NotCohesive` with a certificate when some coalition of the heuristic's
/// structure blocks the grand coalition, `Inconclusive` otherwise.
pub fn heuristic_cohesion_test(g: &Graph, method: Heuristic) -> CohesionVerdict {
    run_heuristic(g, method, None).verdict()
}
