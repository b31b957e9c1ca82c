//! Shared instance generators for the benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use treedepth::Graph;

pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

pub fn random_tree(seed: u64, n: usize) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    Graph::new(n, (1..n).map(|v| (v, rng.random_range(0..v))))
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let idx = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, edges)
}
