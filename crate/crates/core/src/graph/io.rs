//! The `coloredgraph v1` text format and DOT export.

use std::collections::BTreeSet;

use super::{Color, ColoredGraph};
use crate::error::GraphError;

const HEADER: &str = "coloredgraph v1";

/// Header, then vertices by id, then edges in sorted order.
pub fn to_text(g: &ColoredGraph) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for (id, v) in g.vertices() {
        out.push_str(&format!("v {id} {} {}\n", v.weight, v.color));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

/// Lines in any order; blank lines and `#` comments are skipped.
pub fn parse_graph(text: &str) -> Result<ColoredGraph, GraphError> {
    let err = |line: usize, msg: &str| GraphError::Format { line, msg: msg.to_string() };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, l)) if l == HEADER => {}
        Some((n, _)) => return Err(err(n, "expected header `coloredgraph v1`")),
        None => return Err(err(1, "empty input")),
    }
    let mut g = ColoredGraph::new();
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let id = |s: &str| s.parse::<usize>().map_err(|_| err(n, &format!("bad id `{s}`")));
        match fields.as_slice() {
            ["v", i, w, c] => {
                let i = id(i)?;
                let w: i64 = w.parse().map_err(|_| err(n, &format!("bad weight `{w}`")))?;
                let c = Color::from_name(c).ok_or_else(|| err(n, &format!("bad color `{c}`")))?;
                if !seen.insert(i) {
                    return Err(err(n, &format!("duplicate vertex {i}")));
                }
                g.insert_vertex(i, w, c);
            }
            ["e", a, b] => edges.push((n, id(a)?, id(b)?)),
            _ => return Err(err(n, "expected `v <id> <weight> <color>` or `e <id> <id>`")),
        }
    }
    for (n, a, b) in edges {
        if a == b {
            return Err(err(n, "loops are not allowed"));
        }
        if !seen.contains(&a) || !seen.contains(&b) {
            return Err(err(n, "edge to an undeclared vertex"));
        }
        g.add_edge(a, b);
    }
    Ok(g)
}

/// Undirected DOT; zero is blue, infinity red, dicritical green.
pub fn to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph resolution {\n");
    for (id, v) in g.vertices() {
        let color = match v.color {
            Color::Zero => "blue",
            Color::Infty => "red",
            Color::Dicritical => "green",
        };
        out.push_str(&format!("  {id} [label=\"{}\", color={color}];\n", v.weight));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {a} -- {b};\n"));
    }
    out.push_str("}\n");
    out
}
