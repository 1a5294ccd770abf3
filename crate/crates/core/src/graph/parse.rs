use std::collections::HashMap;

use super::Graph;
use crate::error::{CohesionError, Result};

/// Parses a whitespace-separated edge list.
///
/// One edge per line, `#` starts a comment line, blank lines are ignored.
/// Tokens become dense ids in first-seen order and are kept as labels.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(CohesionError::Parse {
                line: line_no,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            });
        };
        if a == b {
            return Err(CohesionError::SelfLoop {
                line: line_no,
                token: a.to_string(),
            });
        }
        let mut id = |tok| -> usize {
            *ids.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                adj.push(Vec::new());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(Graph::from_adjacency(adj, Some(labels)))
}
