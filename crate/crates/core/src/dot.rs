//! Graphviz DOT export.

use crate::graph::{Colour, ColouredGraph};
use crate::topo::{Necklace, NecklaceCut};
use std::collections::BTreeMap;
use std::fmt::Write;

fn label(c: &Colour) -> String {
    c.to_string().replace('"', "'")
}

/// Optional styling per vertex and per edge.
#[derive(Clone, Debug, Default)]
pub struct Style {
    pub vertex: BTreeMap<usize, String>,
    pub edge: BTreeMap<(usize, usize), String>,
}

/// The graph as an undirected DOT graph. Non-plain vertex colours become
/// labels; non-plain arc colours become edge labels.
pub fn graph_to_dot(g: &ColouredGraph) -> String {
    styled_dot(g, &Style::default())
}

pub fn styled_dot(g: &ColouredGraph, style: &Style) -> String {
    let plain = Colour::plain();
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let mut attrs = Vec::new();
        if g.vertex_colour(v) != &plain {
            attrs.push(format!("xlabel=\"{}\"", label(g.vertex_colour(v))));
        }
        if let Some(s) = style.vertex.get(&v) {
            attrs.push(s.clone());
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for &(a, b) in g.edges() {
        let mut attrs = Vec::new();
        match (g.colour(a, b), g.colour(b, a)) {
            (Some(x), Some(y)) if x == y && x == &plain => {}
            (Some(x), Some(y)) if x == y => attrs.push(format!("label=\"{}\"", label(x))),
            (Some(x), Some(y)) => attrs.push(format!("label=\"{} / {}\"", label(x), label(y))),
            _ => {}
        }
        if let Some(s) = style.edge.get(&(a, b)) {
            attrs.push(s.clone());
        }
        if attrs.is_empty() {
            writeln!(out, "  {a} -- {b};").unwrap();
        } else {
            writeln!(out, "  {a} -- {b} [{}];", attrs.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Highlights a necklace: the paths of its systems in blue, articulation
/// vertices filled red, and, when given, cut-graph edges in green.
pub fn necklace_to_dot(g: &ColouredGraph, b: &Necklace, cut: Option<&NecklaceCut>) -> String {
    let mut style = Style::default();
    if let Some(c) = cut {
        for &e in &c.cut.edges {
            style.edge.insert(e, "color=green".into());
        }
        for &v in &c.interior {
            style.vertex.insert(v, "style=dashed".into());
        }
    }
    for &e in &b.subgraph().edges {
        style.edge.insert(e, "color=blue, penwidth=2".into());
    }
    for v in b.art_vertices() {
        style.vertex.insert(v, "style=filled, fillcolor=red".into());
    }
    styled_dot(g, &style)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::path;

    #[test]
    fn path_dot() {
        assert_eq!(graph_to_dot(&path(3)), "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    }
}
