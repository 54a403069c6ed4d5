//! Barycentric subdivision of a graph, and the canonical four-part labeling
//! (A, S^τ, T^τ, U) of BS(Γ(Z_pq)).
//!
//! BS(G) replaces every edge {u, v} with a fresh midpoint adjacent to exactly
//! u and v, so |V| grows by |E| and the edge count doubles. For Γ(Z_pq) the
//! result has pq−1 vertices and 2(p−1)(q−1) edges; its vertices split into
//! the q−1 multiples of p (class A, members r_i), the p−1 multiples of q
//! (class U, members u_τ), and the subdivision vertices grouped by their
//! U-endpoint into blocks T^1..T^{(p−1)/2} and S^1..S^{(p−1)/2}.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, LabeledGraph, VertexTag};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("not a subdivision of K_{{p-1,q-1}}: {0}")]
    BadShape(String),
}

/// Label of a vertex in the canonical partition of BS(Γ(Z_pq)).
///
/// `A(i)` is the ring vertex r_i (i-th multiple of p), `U(t)` the ring vertex
/// u_t (t-th multiple of q), and `T(t, i)` / `S(t, i)` the midpoint of the
/// edge (r_i, u_t) resp. (r_i, u_{(p−1)/2 + t}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartLabel {
    A(u32),
    U(u32),
    T(u32, u32),
    S(u32, u32),
}

impl fmt::Display for PartLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PartLabel::A(i) => write!(f, "r{i}"),
            PartLabel::U(t) => write!(f, "u{t}"),
            PartLabel::T(t, i) => write!(f, "t{t}_{i}"),
            PartLabel::S(t, i) => write!(f, "s{t}_{i}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unrecognized part label {0:?} (expected r<i>, u<t>, t<t>_<i> or s<t>_<i>)")]
pub struct ParsePartLabelError(String);

impl FromStr for PartLabel {
    type Err = ParsePartLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParsePartLabelError(s.to_owned());
        let (kind, rest) = s.split_at(s.len().min(1));
        match kind {
            "r" => rest.parse().map(PartLabel::A).map_err(|_| err()),
            "u" => rest.parse().map(PartLabel::U).map_err(|_| err()),
            "t" | "s" => {
                let (block, index) = rest.split_once('_').ok_or_else(err)?;
                let block = block.parse().map_err(|_| err())?;
                let index = index.parse().map_err(|_| err())?;
                Ok(if kind == "t" {
                    PartLabel::T(block, index)
                } else {
                    PartLabel::S(block, index)
                })
            }
            _ => Err(err()),
        }
    }
}

/// Structural subdivision: returns the new graph together with, for each
/// inserted midpoint (ids |V|..), the endpoints of the edge it split.
pub fn subdivide_structure(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut out = Graph::with_vertices(n + edges.len());
    for (k, &(u, v)) in edges.iter().enumerate() {
        let mid = n + k;
        out.add_edge(u, mid).expect("fresh midpoint");
        out.add_edge(mid, v).expect("fresh midpoint");
    }
    (out, edges)
}

/// Barycentric subdivision. Original vertices keep their tags and ids;
/// midpoints are appended in edge-sorted order and tagged with the endpoints
/// of the edge they split. Edgeless input returns a copy.
pub fn barycentric_subdivision(g: &LabeledGraph) -> LabeledGraph {
    let (graph, origins) = subdivide_structure(g.graph());
    let mut tags = g.tags().to_vec();
    tags.extend(origins.into_iter().map(|(u, v)| VertexTag::Sub(u, v)));
    LabeledGraph::new(graph, tags).expect("subdivision tags are distinct")
}

/// Canonical labeling of BS(Γ(Z_pq)): a bijection between vertices and part
/// labels, with p, q recorded.
#[derive(Clone, Debug)]
pub struct PqPartition {
    p: u64,
    q: u64,
    labels: Vec<PartLabel>,
    index: BTreeMap<PartLabel, usize>,
}

impl PqPartition {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of T blocks (equals the number of S blocks), (p−1)/2.
    pub fn blocks_per_layer(&self) -> u32 {
        ((self.p - 1) / 2) as u32
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label_of(&self, v: usize) -> PartLabel {
        self.labels[v]
    }

    pub fn vertex_of(&self, label: PartLabel) -> Option<usize> {
        self.index.get(&label).copied()
    }

    pub fn labels(&self) -> &[PartLabel] {
        &self.labels
    }

    /// Ids of r_1..r_{q−1} in index order.
    pub fn a_vertices(&self) -> Vec<usize> {
        (1..self.q as u32)
            .map(|i| self.index[&PartLabel::A(i)])
            .collect()
    }

    /// Ids of u_1..u_{p−1} in index order.
    pub fn u_vertices(&self) -> Vec<usize> {
        (1..self.p as u32)
            .map(|t| self.index[&PartLabel::U(t)])
            .collect()
    }
}

/// Assigns the canonical labels to `bs`, which must be the barycentric
/// subdivision of Γ(Z_pq) for the given distinct odd primes p < q.
///
/// A-labels go to the q−1 ring vertices of degree p−1 (multiples of p) in
/// ascending residue order, U-labels to the p−1 ring vertices of degree q−1
/// (multiples of q) likewise. The midpoint of (r_i, u_τ) becomes t^τ_i for
/// τ ≤ (p−1)/2 and s^{τ−(p−1)/2}_i above that; the T blocks sit on the low
/// half of U because exactly that assignment reproduces the reference
/// coordinate tables.
pub fn canonical_pq_labeling(
    bs: &LabeledGraph,
    p: u64,
    q: u64,
) -> Result<PqPartition, SubdivisionError> {
    let bad = |msg: String| SubdivisionError::BadShape(msg);
    if p >= q {
        return Err(bad(format!("need p < q, got p={p}, q={q}")));
    }
    let (pn, qn) = (p as usize, q as usize);
    let expect_v = pn * qn - 1;
    let expect_e = 2 * (pn - 1) * (qn - 1);
    if bs.vertex_count() != expect_v || bs.edge_count() != expect_e {
        return Err(bad(format!(
            "expected {expect_v} vertices / {expect_e} edges, got {} / {}",
            bs.vertex_count(),
            bs.edge_count()
        )));
    }

    // Ring vertices sorted by residue; degree separates the two sides.
    let mut a_side = Vec::new();
    let mut u_side = Vec::new();
    for (v, tag) in bs.tags().iter().enumerate() {
        if let VertexTag::Ring(r) = *tag {
            match bs.graph().degree(v) {
                d if d == pn - 1 => a_side.push((r, v)),
                d if d == qn - 1 => u_side.push((r, v)),
                d => return Err(bad(format!("ring vertex {r} has degree {d}"))),
            }
        }
    }
    a_side.sort_unstable();
    u_side.sort_unstable();
    if a_side.len() != qn - 1 || u_side.len() != pn - 1 {
        return Err(bad(format!(
            "expected {} A-vertices and {} U-vertices, got {} and {}",
            qn - 1,
            pn - 1,
            a_side.len(),
            u_side.len()
        )));
    }
    if a_side.iter().any(|&(r, _)| r % p != 0) || u_side.iter().any(|&(r, _)| r % q != 0) {
        return Err(bad("side residues are not multiples of p resp. q".into()));
    }

    let mut labels = vec![None; bs.vertex_count()];
    let mut a_index = vec![0u32; bs.vertex_count()]; // vertex id -> i of r_i
    let mut u_index = vec![0u32; bs.vertex_count()]; // vertex id -> τ of u_τ
    for (i, &(_, v)) in a_side.iter().enumerate() {
        labels[v] = Some(PartLabel::A(i as u32 + 1));
        a_index[v] = i as u32 + 1;
    }
    for (t, &(_, v)) in u_side.iter().enumerate() {
        labels[v] = Some(PartLabel::U(t as u32 + 1));
        u_index[v] = t as u32 + 1;
    }

    let half = ((p - 1) / 2) as u32;
    let mut seen_pairs = std::collections::BTreeSet::new();
    for (v, tag) in bs.tags().iter().enumerate() {
        if matches!(tag, VertexTag::Ring(_)) {
            continue;
        }
        if bs.graph().degree(v) != 2 {
            return Err(bad(format!("subdivision vertex {v} has degree != 2")));
        }
        let (x, y) = (bs.graph().neighbors(v)[0], bs.graph().neighbors(v)[1]);
        let (i, t) = match (a_index[x], u_index[y], a_index[y], u_index[x]) {
            (i, t, _, _) if i > 0 && t > 0 => (i, t),
            (_, _, i, t) if i > 0 && t > 0 => (i, t),
            _ => return Err(bad(format!("midpoint {v} does not join A to U"))),
        };
        if !seen_pairs.insert((i, t)) {
            return Err(bad(format!("duplicate midpoint for (r_{i}, u_{t})")));
        }
        labels[v] = Some(if t <= half {
            PartLabel::T(t, i)
        } else {
            PartLabel::S(t - half, i)
        });
    }
    if seen_pairs.len() != (pn - 1) * (qn - 1) {
        return Err(bad("missing midpoints: sides are not fully joined".into()));
    }

    let labels: Vec<PartLabel> = labels.into_iter().map(Option::unwrap).collect();
    let index = labels.iter().enumerate().map(|(v, &l)| (l, v)).collect();
    Ok(PqPartition {
        p,
        q,
        labels,
        index,
    })
}
