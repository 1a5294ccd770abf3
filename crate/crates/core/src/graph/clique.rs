use super::{Graph, Node};

/// Size of a largest clique, by branch and bound with a greedy colouring bound.
///
/// Exact; intended for graphs of a few dozen nodes. The empty graph has
/// clique number 0.
pub fn clique_number(g: &Graph) -> usize {
    let mut order: Vec<Node> = (0..g.n()).collect();
    // high-degree nodes first tightens the colouring bound early
    order.sort_by_key(|&u| std::cmp::Reverse(g.degree(u)));
    let mut best = 0;
    expand(g, 0, order, &mut best);
    best
}

fn expand(g: &Graph, size: usize, candidates: Vec<Node>, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = color_bound(g, &candidates);
    let mut remaining = candidates;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next: Vec<Node> = remaining
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        expand(g, size + 1, next, best);
        remaining.retain(|&w| w != v);
    }
}

/// Greedy sequential colouring; returns nodes sorted by colour with the
/// running colour count, which bounds the clique size among `order[..=i]`.
fn color_bound(g: &Graph, candidates: &[Node]) -> (Vec<Node>, Vec<usize>) {
    let mut classes: Vec<Vec<Node>> = Vec::new();
    for &v in candidates {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&w| !g.has_edge(v, w)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut colors = Vec::with_capacity(candidates.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            colors.push(c + 1);
        }
    }
    (order, colors)
}
