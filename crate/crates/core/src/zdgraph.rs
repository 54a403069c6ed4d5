//! Modular arithmetic over Z_n, zero-divisor enumeration, and construction of
//! the zero-divisor graph Γ(Z_n).
//!
//! Vertices of Γ(Z_n) are the nonzero zero-divisors of Z_n in ascending
//! residue order, with an edge between a and b exactly when a·b ≡ 0 (mod n).
//! For n = pq with p < q distinct primes this is the complete bipartite graph
//! K_{p−1,q−1}.

use thiserror::Error;

use crate::graph::{Graph, LabeledGraph, VertexTag};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaError {
    /// A prime modulus has no nonzero zero-divisors; the caller decides
    /// whether an empty graph is fatal.
    #[error("Z_{0} has no nonzero zero-divisors")]
    EmptyGraph(u64),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Trial-division primality test; inputs stay desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Nonzero residue modulo n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

/// Nonzero zero-divisors of Z_n in ascending order, via the gcd
/// characterization: a is a zero-divisor iff gcd(a, n) > 1.
pub fn zero_divisors(n: u64) -> Vec<Residue> {
    assert!(n >= 2, "modulus must be at least 2");
    (1..n)
        .filter(|&a| gcd(a, n) > 1)
        .map(|value| Residue { value, modulus: n })
        .collect()
}

/// Same set by the defining property: a is a zero-divisor iff some nonzero b
/// has a·b ≡ 0 (mod n). Quadratic; kept as the oracle the gcd path is checked
/// against.
pub fn zero_divisors_by_products(n: u64) -> Vec<Residue> {
    assert!(n >= 2, "modulus must be at least 2");
    (1..n)
        .filter(|&a| (1..n).any(|b| (a as u128 * b as u128) % n as u128 == 0))
        .map(|value| Residue { value, modulus: n })
        .collect()
}

/// Builds Γ(Z_n). Vertex ids follow ascending residue value, which fixes ids
/// deterministically across runs.
pub fn build_gamma(n: u64) -> Result<LabeledGraph, GammaError> {
    let zds = zero_divisors(n);
    if zds.is_empty() {
        return Err(GammaError::EmptyGraph(n));
    }
    let mut g = Graph::with_vertices(zds.len());
    for i in 0..zds.len() {
        for j in i + 1..zds.len() {
            let prod = zds[i].value as u128 * zds[j].value as u128;
            if prod % n as u128 == 0 {
                g.add_edge(i, j).expect("i < j over distinct residues");
            }
        }
    }
    let tags = zds.iter().map(|r| VertexTag::Ring(r.value)).collect();
    Ok(LabeledGraph::new(g, tags).expect("residues are distinct"))
}

/// Returns the side sizes (m, n) with m ≤ n when `g` is a complete bipartite
/// graph, identified by 2-coloring plus a full-adjacency check. Edgeless or
/// disconnected graphs yield `None`.
pub fn is_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() == 0 || !g.is_connected() {
        return None;
    }
    let mut color = vec![u8::MAX; n];
    let mut stack = vec![0];
    color[0] = 0;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                stack.push(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    let side0 = color.iter().filter(|&&c| c == 0).count();
    let side1 = n - side0;
    // Every cross pair must be an edge.
    if g.edge_count() != side0 * side1 {
        return None;
    }
    Some((side0.min(side1), side0.max(side1)))
}
