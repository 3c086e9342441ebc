//! Seeded random connected multigraphs for tests, benchmarks and the
//! `--random-corpus` helper.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct CorpusShape {
    pub vertices: RangeInclusive<usize>,
    /// Clamped below at `n - 1`.
    pub edges: RangeInclusive<usize>,
    pub weights: RangeInclusive<i64>,
}

impl CorpusShape {
    /// n in [3, 7], m up to 15, weights in [0, 20] with repeats.
    pub fn desk() -> Self {
        CorpusShape {
            vertices: 3..=7,
            edges: 0..=15,
            weights: 0..=20,
        }
    }
}

/// A random spanning tree plus extra edges (parallel edges allowed), with
/// edge order and orientation shuffled.
pub fn random_connected_graph<R: Rng>(rng: &mut R, shape: &CorpusShape) -> Graph<i64> {
    let n = rng.gen_range(shape.vertices.clone());
    let lo = (*shape.edges.start()).max(n - 1);
    let hi = (*shape.edges.end()).max(lo);
    let m = rng.gen_range(lo..=hi);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(usize, usize)> = (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    while pairs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(rng);

    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| {
            let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            (u, v, rng.gen_range(shape.weights.clone()))
        })
        .collect();
    Graph::new(n, edges).expect("generated edges are in range and loop-free")
}

/// `count` graphs from a ChaCha stream seeded with `seed`.
pub fn corpus(seed: u64, count: usize, shape: &CorpusShape) -> Vec<Graph<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_connected_graph(&mut rng, shape))
        .collect()
}
