use serde::Serialize;
use serde_json::{json, Value};

use super::structure::node_json;
use super::{is_blocking, GroupStructure, Popularity};
use crate::graph::{Graph, Node};
use crate::nodeset::NodeSet;

/// One member's payoff inside the blocking set and under the challenged structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MemberPayoff {
    pub node: Node,
    pub in_set: Popularity,
    pub current: Popularity,
}

/// A set together with the per-member payoffs showing it blocks a structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockingCertificate {
    pub blocking_set: NodeSet,
    pub members: Vec<MemberPayoff>,
}

impl BlockingCertificate {
    /// Recomputes every payoff from scratch and checks the strict improvements.
    pub fn verify(&self, g: &Graph, w: &GroupStructure) -> bool {
        match is_blocking(g, &self.blocking_set, w) {
            Some(fresh) => fresh == *self,
            None => false,
        }
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        json!({
            "blocking_set": self.blocking_set.iter().map(|u| node_json(g, u)).collect::<Vec<_>>(),
            "members": self.members.iter().map(|m| json!({
                "node": node_json(g, m.node),
                "in_set": m.in_set.to_string(),
                "current": m.current.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The structure under test (the grand coalition when deciding cohesion)
    /// is core stable.
    Cohesive,
    NotCohesive,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    QuickTest,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohesionVerdict {
    pub status: Status,
    pub method: Method,
    pub certificate: Option<BlockingCertificate>,
}

impl CohesionVerdict {
    pub fn cohesive(method: Method) -> Self {
        CohesionVerdict {
            status: Status::Cohesive,
            method,
            certificate: None,
        }
    }

    pub fn not_cohesive(method: Method, certificate: BlockingCertificate) -> Self {
        CohesionVerdict {
            status: Status::NotCohesive,
            method,
            certificate: Some(certificate),
        }
    }

    pub fn inconclusive(method: Method) -> Self {
        CohesionVerdict {
            status: Status::Inconclusive,
            method,
            certificate: None,
        }
    }

    pub fn is_cohesive(&self) -> bool {
        self.status == Status::Cohesive
    }

    pub fn is_not_cohesive(&self) -> bool {
        self.status == Status::NotCohesive
    }

    /// `{status, method, certificate?}` with node labels.
    pub fn to_json(&self, g: &Graph) -> Value {
        let mut out = json!({
            "status": self.status,
            "method": self.method,
        });
        if let Some(cert) = &self.certificate {
            out["certificate"] = cert.to_json(g);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let g = Graph::star(4).with_edge(1, 2).unwrap();
        let cert = is_blocking(&g, &[1, 2].into(), &GroupStructure::grand(5)).unwrap();
        let v = CohesionVerdict::not_cohesive(Method::QuickTest, cert.clone());
        assert_eq!(
            v.to_json(&g).to_string(),
            r#"{"certificate":{"blocking_set":[1,2],"members":[{"current":"2/5","in_set":"1/2","node":1},{"current":"2/5","in_set":"1/2","node":2}]},"method":"quick_test","status":"not_cohesive"}"#
        );
        let c = CohesionVerdict::cohesive(Method::Exact);
        assert_eq!(
            c.to_json(&g).to_string(),
            r#"{"method":"exact","status":"cohesive"}"#
        );
        assert!(cert.verify(&g, &GroupStructure::grand(5)));
        assert!(!cert.verify(&g, &GroupStructure::singletons(5)));
    }
}
