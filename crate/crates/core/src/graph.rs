//! Simple undirected graphs with sorted adjacency lists, plus per-vertex
//! semantic tags used by the ring-graph and subdivision constructions.

use thiserror::Error;

use crate::subdivision::PartLabel;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    OutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} tags, got {got}")]
    TagCount { expected: usize, got: usize },
    #[error("duplicate vertex tag at vertex {0}")]
    DuplicateTag(usize),
}

/// Undirected simple graph. Neighbor lists are kept sorted and symmetric;
/// self-loops and parallel edges are rejected at insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::OutOfRange(u, n));
        }
        if v >= n {
            return Err(GraphError::OutOfRange(v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Half the degree sum.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// True for connected graphs with at least one edge whose degree sequence
    /// is that of a path (two endpoints of degree 1, the rest degree 2).
    pub fn is_path(&self) -> bool {
        let n = self.adj.len();
        if n < 2 || !self.is_connected() {
            return false;
        }
        let ones = self.adj.iter().filter(|a| a.len() == 1).count();
        let twos = self.adj.iter().filter(|a| a.len() == 2).count();
        ones == 2 && twos == n - 2
    }
}

/// Semantic tag attached to a vertex: a ring residue, a subdivision vertex
/// remembering the endpoints of the edge it split, or a partition label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexTag {
    /// Nonzero zero-divisor residue in Z_n.
    Ring(u64),
    /// Midpoint inserted on the edge between the two given original vertex
    /// ids (a < b); the endpoints were adjacent before subdivision.
    Sub(usize, usize),
    /// Part label of the canonical four-part labeling.
    Part(PartLabel),
}

/// Graph whose vertices carry pairwise distinct tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    tags: Vec<VertexTag>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, tags: Vec<VertexTag>) -> Result<Self, GraphError> {
        if tags.len() != graph.vertex_count() {
            return Err(GraphError::TagCount {
                expected: graph.vertex_count(),
                got: tags.len(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for (v, t) in tags.iter().enumerate() {
            if !seen.insert(t) {
                return Err(GraphError::DuplicateTag(v));
            }
        }
        Ok(LabeledGraph { graph, tags })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn tag(&self, v: usize) -> &VertexTag {
        &self.tags[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn find_tag(&self, tag: &VertexTag) -> Option<usize> {
        self.tags.iter().position(|t| t == tag)
    }
}
