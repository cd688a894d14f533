//! Serialization of Bruhat graphs: the versioned JSON document and DOT.
//!
//! Both formats are byte-stable across runs: vertex ids come from the
//! deterministic (length, word) ordering, edges are sorted by (from, to),
//! and field order is fixed.

use bruhat::{BruhatGraph, Permutation};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub version: String,
    pub permutation: Vec<u8>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: u32,
    pub word: Vec<u8>,
    pub length: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: u32,
    pub to: u32,
    /// The transposition `(a b)` as the pair `[a, b]`.
    pub transposition: [u8; 2],
}

impl GraphDocument {
    pub fn from_graph(sigma: &Permutation, g: &BruhatGraph) -> Self {
        Self {
            version: FORMAT_VERSION.to_string(),
            permutation: sigma.word().to_vec(),
            vertices: g
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, label)| VertexDoc {
                    id: id as u32,
                    word: label.word().to_vec(),
                    length: label.coxeter_length() as u32,
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    from: e.from,
                    to: e.to,
                    transposition: [e.transposition.a() as u8, e.transposition.b() as u8],
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

/// DOT rendering: vertex names are the one-line words, edge labels are
/// "(a b)", and vertices of equal length share a rank so drawings stratify
/// by length.
pub fn render_dot(sigma: &Permutation, g: &BruhatGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"B({sigma})\" {{\n"));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    let mut by_length: Vec<(usize, Vec<String>)> = Vec::new();
    for (id, label) in g.vertices().iter().enumerate() {
        let len = g.length(id as u32);
        match by_length.last_mut() {
            Some((l, names)) if *l == len => names.push(label.to_string()),
            _ => by_length.push((len, vec![label.to_string()])),
        }
    }
    for (_, names) in &by_length {
        out.push_str("  { rank=same;");
        for name in names {
            out.push_str(&format!(" \"{name}\";"));
        }
        out.push_str(" }\n");
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            g.label(e.from),
            g.label(e.to),
            e.transposition
        ));
    }
    out.push_str("}\n");
    out
}
