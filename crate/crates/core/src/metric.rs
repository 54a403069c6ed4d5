//! All-pairs distances, metric codes, resolving and fault-tolerant-resolving
//! predicates, and the pair-coverage structure consumed by the solver.
//!
//! A landmark set W resolves a graph when the distance vectors ("metric
//! codes") of all vertices with respect to W are pairwise distinct, and is
//! fault tolerant when it stays resolving after deleting any single member —
//! equivalently, when every vertex pair is distinguished by at least two
//! members of W. Both formulations are implemented; tests assert they agree.

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("x and y must be distinct vertices")]
    SamePair,
    #[error("duplicate landmark {0}")]
    DuplicateLandmark(usize),
}

/// All-pairs shortest-path distances. Disconnected pairs hold the sentinel
/// `n` (the vertex count), strictly larger than any real distance, so codes
/// stay totally ordered on disconnected inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Sentinel stored for unreachable pairs.
    pub fn unreachable(&self) -> u32 {
        self.n as u32
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Largest finite distance, or `None` when some pair is disconnected
    /// (or the graph has no vertex pair at all).
    pub fn diameter(&self) -> Option<u32> {
        let unreachable = self.unreachable();
        let mut max = 0;
        for &x in &self.d {
            if x == unreachable {
                return None;
            }
            max = max.max(x);
        }
        Some(max)
    }
}

/// Exact unweighted shortest-path distances via one BFS per source.
/// Sources run on the rayon pool; the result does not depend on worker count.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let unreachable = n as u32;
    let mut d = vec![unreachable; n * n];
    d.par_chunks_mut(n.max(1)).enumerate().for_each(|(s, row)| {
        let mut queue = std::collections::VecDeque::new();
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if row[v] == unreachable {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    });
    DistanceMatrix { n, d }
}

/// {v} ∪ N(v), sorted.
pub fn closed_neighborhood(g: &Graph, v: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(g.degree(v) + 1);
    out.extend_from_slice(g.neighbors(v));
    let pos = out.binary_search(&v).unwrap_err();
    out.insert(pos, v);
    out
}

/// True iff w sees x and y at different distances.
pub fn resolves(w: usize, x: usize, y: usize, d: &DistanceMatrix) -> Result<bool, MetricError> {
    if x == y {
        return Err(MetricError::SamePair);
    }
    Ok(d.get(w, x) != d.get(w, y))
}

/// Ordered landmark list; order matters for code vectors, duplicates are
/// rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LandmarkSet {
    vertices: Vec<usize>,
}

impl LandmarkSet {
    pub fn new(vertices: Vec<usize>) -> Result<Self, MetricError> {
        let mut seen = std::collections::BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(MetricError::DuplicateLandmark(v));
            }
        }
        Ok(LandmarkSet { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    /// Copy with the member at `idx` removed, preserving order.
    pub fn without_index(&self, idx: usize) -> LandmarkSet {
        let mut vertices = self.vertices.clone();
        vertices.remove(idx);
        LandmarkSet { vertices }
    }
}

/// Distance vector of one vertex with respect to an ordered landmark set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricCode {
    pub landmarks: Vec<usize>,
    pub entries: Vec<u32>,
}

pub fn metric_code(v: usize, w: &LandmarkSet, d: &DistanceMatrix) -> MetricCode {
    MetricCode {
        landmarks: w.vertices.clone(),
        entries: w.iter().map(|l| d.get(l, v)).collect(),
    }
}

fn code_entries(v: usize, w: &LandmarkSet, d: &DistanceMatrix) -> Vec<u32> {
    w.iter().map(|l| d.get(l, v)).collect()
}

/// True iff all vertices have pairwise distinct codes with respect to `w`.
/// Full vectors are compared exactly; no hashing shortcuts.
pub fn is_resolving(w: &LandmarkSet, d: &DistanceMatrix) -> bool {
    let n = d.vertex_count();
    if n <= 1 {
        return true;
    }
    if w.is_empty() {
        return false;
    }
    let mut codes: Vec<Vec<u32>> = (0..n).map(|v| code_entries(v, w, d)).collect();
    codes.sort_unstable();
    codes.windows(2).all(|pair| pair[0] != pair[1])
}

/// Number of members of `w` that resolve the pair (x, y).
pub fn resolving_multiplicity(
    w: &LandmarkSet,
    x: usize,
    y: usize,
    d: &DistanceMatrix,
) -> Result<usize, MetricError> {
    if x == y {
        return Err(MetricError::SamePair);
    }
    Ok(w.iter().filter(|&l| d.get(l, x) != d.get(l, y)).count())
}

/// Fault-tolerant resolving test via the multiplicity criterion: every pair
/// must be distinguished by at least two landmarks. Equivalent to the
/// remove-one definition (`is_ft_resolving_by_removal`).
pub fn is_ft_resolving(w: &LandmarkSet, d: &DistanceMatrix) -> bool {
    let n = d.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            let mut hits = 0;
            for l in w.iter() {
                if d.get(l, x) != d.get(l, y) {
                    hits += 1;
                    if hits == 2 {
                        break;
                    }
                }
            }
            if hits < 2 {
                return false;
            }
        }
    }
    true
}

/// Fault-tolerant resolving test straight from the definition: `w` resolves
/// and so does every one-element deletion.
pub fn is_ft_resolving_by_removal(w: &LandmarkSet, d: &DistanceMatrix) -> bool {
    if !is_resolving(w, d) {
        return false;
    }
    (0..w.len()).all(|i| is_resolving(&w.without_index(i), d))
}

/// For every unordered vertex pair, the set of vertices resolving it. This is
/// the sole solver input: a minimum resolving set is a minimum 1-cover of the
/// pairs by resolver sets, a minimum fault-tolerant one a minimum 2-cover.
#[derive(Clone, Debug)]
pub struct PairCoverage {
    n: usize,
    pairs: Vec<(u32, u32)>,
    resolvers: Vec<VertexSet>,
}

impl PairCoverage {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        let (x, y) = self.pairs[idx];
        (x as usize, y as usize)
    }

    pub fn resolver_set(&self, idx: usize) -> &VertexSet {
        &self.resolvers[idx]
    }

    /// Index of the pair (x, y) with x < y in the triangular layout.
    pub fn pair_index(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < y && y < self.n);
        x * self.n - x * (x + 1) / 2 + (y - x - 1)
    }

    /// Coverage formulation of the resolving predicates: `w` meets every
    /// resolver set at least `k` times.
    pub fn covers(&self, w: &LandmarkSet, k: usize) -> bool {
        let mut mask = VertexSet::new(self.n);
        for v in w.iter() {
            mask.insert(v);
        }
        self.resolvers
            .iter()
            .all(|r| r.intersection_count(&mask) >= k)
    }
}

/// Materializes resolver bitsets for all C(n, 2) pairs up front; solver
/// queries dominate and memory is trivial at desk scale.
pub fn pair_coverage(d: &DistanceMatrix) -> PairCoverage {
    let n = d.vertex_count();
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            pairs.push((x as u32, y as u32));
        }
    }
    let resolvers: Vec<VertexSet> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let (x, y) = (x as usize, y as usize);
            let mut set = VertexSet::new(n);
            for w in 0..n {
                if d.get(w, x) != d.get(w, y) {
                    set.insert(w);
                }
            }
            set
        })
        .collect();
    PairCoverage {
        n,
        pairs,
        resolvers,
    }
}
