use super::Graph;
use crate::error::{CohesionError, Result};
use crate::nodeset::{combinations, mask_bits, NodeSet};

/// Whether the subgraph induced by the nodes of `mask` is connected.
/// The empty mask is not connected.
#[inline]
pub fn is_connected_mask(rows: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reached = mask & mask.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0;
        for u in mask_bits(frontier) {
            next |= rows[u];
        }
        frontier = next & mask & !reached;
        reached |= frontier;
    }
    reached == mask
}

/// Every node set `S` with `min_size <= |S| <= max_size` inducing a connected
/// subgraph, each exactly once.
///
/// Sets come out by increasing size and, within a size, in increasing order of
/// their bitmask. Restricted to graphs with at most 64 nodes.
pub fn connected_subsets(
    g: &Graph,
    min_size: usize,
    max_size: usize,
) -> Result<impl Iterator<Item = NodeSet> + '_> {
    let n = g.n();
    if min_size == 0 || min_size > max_size || max_size > n {
        return Err(CohesionError::InvalidArgument(format!(
            "subset sizes {min_size}..={max_size} for {n} nodes"
        )));
    }
    let rows = g.rows_or_err("connected subset enumeration")?;
    Ok((min_size..=max_size)
        .flat_map(move |k| combinations(n, k))
        .filter(move |&m| is_connected_mask(rows, m))
        .map(NodeSet::from_mask))
}
