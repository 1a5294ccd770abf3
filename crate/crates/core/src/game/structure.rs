use serde_json::Value;

use crate::error::{CohesionError, Result};
use crate::graph::{Graph, Node};
use crate::nodeset::NodeSet;

/// A partition of the node set into non-empty coalitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStructure {
    coalitions: Vec<NodeSet>,
    owner: Vec<usize>,
}

impl GroupStructure {
    /// Validates that `coalitions` partition `0..n`.
    pub fn new(n: usize, coalitions: Vec<Vec<Node>>) -> Result<GroupStructure> {
        let sets = coalitions
            .into_iter()
            .map(|c| {
                let set: NodeSet = c.iter().copied().collect();
                if set.len() != c.len() {
                    return Err(CohesionError::InvalidStructure(format!(
                        "coalition {c:?} repeats a node"
                    )));
                }
                Ok(set)
            })
            .collect::<Result<Vec<_>>>()?;
        GroupStructure::from_sets(n, sets)
    }

    pub fn from_sets(n: usize, coalitions: Vec<NodeSet>) -> Result<GroupStructure> {
        let mut owner = vec![usize::MAX; n];
        for (i, c) in coalitions.iter().enumerate() {
            if c.is_empty() {
                return Err(CohesionError::InvalidStructure("empty coalition".into()));
            }
            for u in c {
                if u >= n {
                    return Err(CohesionError::NodeOutOfRange { node: u, n });
                }
                if owner[u] != usize::MAX {
                    return Err(CohesionError::InvalidStructure(format!(
                        "node {u} is in two coalitions"
                    )));
                }
                owner[u] = i;
            }
        }
        if let Some(u) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(CohesionError::InvalidStructure(format!(
                "node {u} is in no coalition"
            )));
        }
        Ok(GroupStructure { coalitions, owner })
    }

    /// Builds a structure from a coalition index per node.
    pub fn from_assignment(assignment: &[usize]) -> GroupStructure {
        let k = assignment.iter().copied().max().map_or(0, |m| m + 1);
        let mut coalitions = vec![NodeSet::new(); k];
        for (u, &c) in assignment.iter().enumerate() {
            coalitions[c].insert(u);
        }
        coalitions.retain(|c| !c.is_empty());
        GroupStructure::from_sets(assignment.len(), coalitions).expect("assignment is a partition")
    }

    /// The grand coalition `{V}`.
    pub fn grand(n: usize) -> GroupStructure {
        let coalitions = if n == 0 {
            vec![]
        } else {
            vec![NodeSet::full(n)]
        };
        GroupStructure {
            coalitions,
            owner: vec![0; n],
        }
    }

    pub fn singletons(n: usize) -> GroupStructure {
        GroupStructure {
            coalitions: (0..n).map(NodeSet::singleton).collect(),
            owner: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.owner.len()
    }

    pub fn coalitions(&self) -> &[NodeSet] {
        &self.coalitions
    }

    pub fn len(&self) -> usize {
        self.coalitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coalitions.is_empty()
    }

    pub fn coalition_index(&self, u: Node) -> usize {
        self.owner[u]
    }

    pub fn coalition_of(&self, u: Node) -> &NodeSet {
        &self.coalitions[self.owner[u]]
    }

    /// Every coalition induces a connected subgraph.
    pub fn is_group_structure(&self, g: &Graph) -> bool {
        self.coalitions.iter().all(|c| g.is_connected(c))
    }

    /// Same partition regardless of coalition order.
    pub fn same_partition(&self, other: &GroupStructure) -> bool {
        self.n() == other.n()
            && (0..self.n()).all(|u| self.coalition_of(u) == other.coalition_of(u))
    }

    /// JSON array of coalitions, each an array of node labels (strings for
    /// labelled graphs, integers otherwise).
    pub fn to_json(&self, g: &Graph) -> Value {
        Value::Array(
            self.coalitions
                .iter()
                .map(|c| Value::Array(c.iter().map(|u| node_json(g, u)).collect()))
                .collect(),
        )
    }

    pub fn from_json(g: &Graph, value: &Value) -> Result<GroupStructure> {
        let bad = |msg: &str| CohesionError::InvalidStructure(msg.to_string());
        let outer = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let coalitions = outer
            .iter()
            .map(|c| {
                c.as_array()
                    .ok_or_else(|| bad("expected an array of arrays"))?
                    .iter()
                    .map(|x| {
                        let label = match x {
                            Value::String(s) => s.clone(),
                            Value::Number(num) => num.to_string(),
                            _ => return Err(bad("node labels are strings or integers")),
                        };
                        g.node_by_label(&label)
                            .ok_or_else(|| bad(&format!("unknown node `{label}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GroupStructure::new(g.n(), coalitions)
    }
}

pub(crate) fn node_json(g: &Graph, u: Node) -> Value {
    match g.labels() {
        Some(labels) => Value::String(labels[u].clone()),
        None => Value::from(u),
    }
}
