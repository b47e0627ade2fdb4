#![allow(dead_code)]

use graphdesign_core::families::random;
use graphdesign_core::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected regular graph with `6 <= n <= max_n` and `d` in {3, 4}.
pub fn random_regular(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let d = rng.gen_range(3..=4);
        let n = rng.gen_range(6..=max_n);
        if let Some(g) = random::connected_regular(n, d, rng) {
            return g;
        }
    }
}

/// Nonempty proper subset drawn uniformly among masks.
pub fn random_proper_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    loop {
        let mask: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let s = VertexSet::from_mask(&mask);
        if s.is_proper() {
            return s;
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
