//! Seeded random graph generators for reproducible corpora.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree: vertex `i` attaches to a uniform earlier
/// vertex, then ids are shuffled.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected(rng, n, 0.0)
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j]));
    }
    if p > 0.0 {
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// A connected graph with `2..=max_n` vertices and a random edge density.
pub fn random_small_connected<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    const DENSITIES: [f64; 7] = [0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.8];
    let n = rng.gen_range(2..=max_n.max(2));
    let p = *DENSITIES.choose(rng).unwrap();
    random_connected(rng, n, p)
}

/// Glues cliques of size `2..=5` one at a time at a uniform random existing
/// vertex until the next clique would push the order above `max_n`.
/// The result is a connected block graph with at least two vertices.
pub fn random_block_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let max_n = max_n.max(2);
    let first = rng.gen_range(2..=5usize.min(max_n));
    let mut n = first;
    let mut edges: Vec<(usize, usize)> = clique_edges(&(0..first).collect::<Vec<_>>());
    let target_blocks = rng.gen_range(1..=max_n);
    for _ in 1..target_blocks {
        let size = rng.gen_range(2..=5usize);
        if n + size - 1 > max_n {
            break;
        }
        let anchor = rng.gen_range(0..n);
        let members: Vec<usize> = std::iter::once(anchor).chain(n..n + size - 1).collect();
        edges.extend(clique_edges(&members));
        n += size - 1;
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

fn clique_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

/// Random terminal set of size `k` (requires `k <= n`).
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    ids.truncate(k);
    ids.sort_unstable();
    ids
}
