//! Edge-list graph files and DOT export.
//!
//! ```text
//! vertices: a b c d e
//! a b
//! b c
//! ```

use std::fmt::Write as _;

use ultragraph_core::SimpleGraph;

use crate::error::CliError;

pub fn parse_graph(text: &str) -> Result<SimpleGraph, CliError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if vertices.is_some() {
                return Err(CliError::parse(line_no, "duplicate `vertices` line"));
            }
            vertices = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        if vertices.is_none() {
            return Err(CliError::parse(line_no, "`vertices:` header must come first"));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = toks[..] else {
            return Err(CliError::parse(line_no, format!("expected `u v`, got {line:?}")));
        };
        edges.push((u.to_string(), v.to_string(), line_no));
    }
    let labels = vertices.ok_or_else(|| CliError::Input("graph file has no `vertices:` header".into()))?;
    let mut g = SimpleGraph::edgeless(labels).map_err(CliError::from)?;
    for (u, v, line_no) in edges {
        let (Some(a), Some(b)) = (g.index_of(&u), g.index_of(&v)) else {
            return Err(CliError::parse(line_no, format!("edge {u} {v} names an undeclared vertex")));
        };
        g.add_edge(a, b).map_err(|e| CliError::parse(line_no, e.to_string()))?;
    }
    Ok(g)
}

pub fn emit_graph(g: &SimpleGraph) -> String {
    let mut out = format!("vertices: {}\n", g.labels().join(" "));
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

/// Undirected DOT. Vertices in label order, edges lexicographic.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.label(u)), quote(g.label(v)));
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
