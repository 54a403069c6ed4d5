//! Graph documents and their serializations: JSON (full fidelity, round
//! trips with identical ids), CSV/edge-list (numeric ids, importable), DOT
//! and GraphML (label-carrying, minimal subsets).

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use zdmetric::{Graph, LabeledGraph, PqPartition, VertexTag};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
}

/// Flat description of a (labeled) graph. Edges are (u, v) with u < v,
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDoc {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Rebuilds the adjacency structure, validating ids and simplicity.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.vertices.len(), &self.edges).context("invalid edge list")
    }

    /// Display label for a vertex: explicit label, else residue, else v<id>.
    pub fn display_label(&self, v: usize) -> String {
        let doc = &self.vertices[v];
        doc.label
            .clone()
            .or_else(|| doc.residue.map(|r| r.to_string()))
            .unwrap_or_else(|| format!("v{v}"))
    }
}

/// Γ(Z_n): ids ascending by residue, residues attached, no labels.
pub fn gamma_doc(g: &LabeledGraph, n: u64) -> GraphDoc {
    let vertices = g
        .tags()
        .iter()
        .enumerate()
        .map(|(id, tag)| VertexDoc {
            id,
            label: None,
            residue: match tag {
                VertexTag::Ring(r) => Some(*r),
                _ => None,
            },
        })
        .collect();
    GraphDoc {
        n: Some(n),
        p: None,
        q: None,
        vertices,
        edges: g.graph().edges(),
    }
}

/// BS(Γ(Z_pq)) with part labels; ring vertices keep their residues.
pub fn subdivision_doc(bs: &LabeledGraph, part: &PqPartition, n: u64) -> GraphDoc {
    let vertices = (0..bs.vertex_count())
        .map(|id| VertexDoc {
            id,
            label: Some(part.label_of(id).to_string()),
            residue: match bs.tag(id) {
                VertexTag::Ring(r) => Some(*r),
                _ => None,
            },
        })
        .collect();
    GraphDoc {
        n: Some(n),
        p: Some(part.p()),
        q: Some(part.q()),
        vertices,
        edges: bs.graph().edges(),
    }
}

pub fn to_json(doc: &GraphDoc) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<GraphDoc> {
    let doc: GraphDoc = serde_json::from_str(text).context("malformed graph JSON")?;
    for (i, v) in doc.vertices.iter().enumerate() {
        if v.id != i {
            bail!("vertex ids must be 0..{} in order, found {} at {i}", doc.vertices.len(), v.id);
        }
    }
    doc.to_graph()?;
    Ok(doc)
}

/// Numeric edge list with a vertex-count header comment; importable by
/// `from_edge_list` and by `solve --edges`.
pub fn to_csv_edges(doc: &GraphDoc) -> String {
    let mut out = format!("# vertices: {}\nsource,target\n", doc.vertex_count());
    for &(u, v) in &doc.edges {
        out.push_str(&format!("{u},{v}\n"));
    }
    out
}

/// Reads "u v" or "u,v" lines; `#` starts a comment, and a
/// `# vertices: N` comment preserves isolated vertices.
pub fn from_edge_list(text: &str) -> Result<GraphDoc> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(count) = rest.trim().strip_prefix("vertices:") {
                declared = Some(
                    count
                        .trim()
                        .parse::<usize>()
                        .with_context(|| format!("bad vertex count on line {}", lineno + 1))?,
                );
            }
            continue;
        }
        if line.is_empty() || line == "source,target" {
            continue;
        }
        let mut parts = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty());
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => bail!("line {}: expected two vertex ids, got {line:?}", lineno + 1),
        };
        let u: usize = u.parse().with_context(|| format!("line {}: bad id {u:?}", lineno + 1))?;
        let v: usize = v.parse().with_context(|| format!("line {}: bad id {v:?}", lineno + 1))?;
        edges.push((u.min(v), u.max(v)));
    }
    let seen = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(seen).max(seen);
    edges.sort_unstable();
    let vertices = (0..n)
        .map(|id| VertexDoc {
            id,
            label: None,
            residue: None,
        })
        .collect();
    let doc = GraphDoc {
        n: None,
        p: None,
        q: None,
        vertices,
        edges,
    };
    doc.to_graph()?;
    Ok(doc)
}

pub fn to_dot(doc: &GraphDoc) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..doc.vertex_count() {
        out.push_str(&format!("  {} [label=\"{}\"];\n", v, doc.display_label(v)));
    }
    for &(u, v) in &doc.edges {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn to_graphml(doc: &GraphDoc) -> String {
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n\
         \u{20} <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n\
         \u{20} <graph id=\"g\" edgedefault=\"undirected\">\n",
    );
    for v in 0..doc.vertex_count() {
        out.push_str(&format!(
            "    <node id=\"n{v}\"><data key=\"label\">{}</data></node>\n",
            doc.display_label(v)
        ));
    }
    for (i, &(u, v)) in doc.edges.iter().enumerate() {
        out.push_str(&format!(
            "    <edge id=\"e{i}\" source=\"n{u}\" target=\"n{v}\"/>\n"
        ));
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}
