//! Graph export in Graphviz and JSON form.

use serde_json::{json, Value};

use fockcrystal::crystal::CrystalGraph;
use fockcrystal::ChargedMultipartition;

/// Canonical vertex key: multipartition and charge in input notation.
pub fn key(x: &ChargedMultipartition) -> String {
    format!("{} @ {}", x.mp(), x.charge())
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    for v in &g.vertices {
        out.push_str(&format!("  {};\n", quoted(&key(v))));
    }
    for e in &g.edges {
        out.push_str(&format!(
            "  {} -> {} [label=\"{}\"];\n",
            quoted(&key(&g.vertices[e.from])),
            quoted(&key(&g.vertices[e.to])),
            e.residue
        ));
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &CrystalGraph) -> Value {
    let vertices: Vec<String> = g.vertices.iter().map(key).collect();
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| {
            json!({
                "from": vertices[e.from],
                "to": vertices[e.to],
                "residue": e.residue,
            })
        })
        .collect();
    json!({ "rank": g.rank, "vertices": vertices, "edges": edges })
}
