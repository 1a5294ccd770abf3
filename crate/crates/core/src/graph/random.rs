use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Uniform sample from all labelled graphs on `n` nodes: every pair is an
/// edge independently with probability 1/2. Deterministic per seed.
pub fn sample_random_graph(n: usize, seed: u64) -> Graph {
    sample_from(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// The `index`-th graph of the batch rooted at `seed`.
///
/// Each index reads its own ChaCha stream, so batches can be generated in
/// any order or in parallel with identical results.
pub fn sample_with_stream(n: usize, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    sample_from(n, &mut rng)
}

fn sample_from(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<bool>() {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled edges are valid")
}
