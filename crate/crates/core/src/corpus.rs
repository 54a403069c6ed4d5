//! Deterministic graph generators: named families and seeded random
//! connected graphs for the oracle-equivalence and property suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with the given number of leaves; vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Seeded generator stream for reproducible corpora.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph with n in [n_min, n_max]: a random spanning tree
/// (each vertex attaches to an earlier one) plus extra edges at a density
/// drawn per graph. Connectivity holds by construction.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n_min: usize, n_max: usize) -> Graph {
    assert!(1 <= n_min && n_min <= n_max);
    let n = rng.gen_range(n_min..=n_max);
    let mut g = Graph::with_vertices(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    let density: f64 = rng.gen_range(0.0..0.5);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniformly random subset of {0, …, n−1}, ascending.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}
