//! Popularity games on undirected social networks.
//!
//! Every node of a graph is a player whose payoff inside a coalition `S` is
//! its degree within `S` divided by `|S|`. The crate decides core stability of
//! coalition structures exactly, decides social cohesion (whether the grand
//! coalition is core stable) with checkable certificates, offers closed-form
//! oracles for special graph classes, builds the clique reduction showing the
//! decision problem is hard, and runs two heuristics together with the
//! experiment harness used to evaluate them.
//!
//! ```
//! use cohesion::{graph::Graph, game::is_socially_cohesive, game::Status, CheckOptions};
//!
//! let verdict = is_socially_cohesive(&Graph::complete(5), &CheckOptions::default()).unwrap();
//! assert_eq!(verdict.status, Status::Cohesive);
//! ```

pub mod characterize;
pub mod error;
pub mod experiments;
pub mod game;
pub mod graph;
pub mod heuristics;
pub mod nodeset;
pub mod reduction;

pub use error::{CohesionError, Result};
pub use game::CheckOptions;
pub use graph::{Graph, Node};
pub use nodeset::NodeSet;

// The guide's code listings run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/popularity.md")]
    mod popularity {}
    #[doc = include_str!("../../../book/src/cohesion.md")]
    mod cohesion {}
    #[doc = include_str!("../../../book/src/special_classes.md")]
    mod special_classes {}
    #[doc = include_str!("../../../book/src/structural.md")]
    mod structural {}
    #[doc = include_str!("../../../book/src/ndu2.md")]
    mod ndu2 {}
    #[doc = include_str!("../../../book/src/hardness.md")]
    mod hardness {}
    #[doc = include_str!("../../../book/src/heuristics.md")]
    mod heuristics {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
}
