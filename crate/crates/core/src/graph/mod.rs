//! Weighted colored dual graphs and the blow-up/blow-down moves between them.

mod canon;
mod io;
mod resolve;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::GraphError;

pub use canon::{canonical_form, graph_iso, graphs_equivalent, reduce, Reduction, ISO_LIMIT};
pub use io::{parse_graph, to_dot, to_text};
pub use resolve::{resolve_factors, resolve_pencil, split_components, Resolution};

/// Value of the pencil map on a component: `0`, `∞`, or non-constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Zero,
    Infty,
    Dicritical,
}

impl Color {
    pub fn name(self) -> &'static str {
        match self {
            Color::Zero => "zero",
            Color::Infty => "infty",
            Color::Dicritical => "dicritical",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "zero" | "0" => Some(Color::Zero),
            "infty" | "inf" => Some(Color::Infty),
            "dicritical" | "dic" => Some(Color::Dicritical),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub weight: i64,
    pub color: Color,
}

/// Vertices keyed by id; edges form a loop-free multigraph stored as sorted pairs `(a, b)`,
/// `a < b`, with repeats.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoredGraph {
    vertices: BTreeMap<usize, Vertex>,
    edges: Vec<(usize, usize)>,
}

impl ColoredGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex with the next free id.
    pub fn add_vertex(&mut self, weight: i64, color: Color) -> usize {
        let id = self.vertices.keys().next_back().map_or(0, |k| k + 1);
        self.vertices.insert(id, Vertex { weight, color });
        id
    }

    pub fn insert_vertex(&mut self, id: usize, weight: i64, color: Color) {
        self.vertices.insert(id, Vertex { weight, color });
    }

    /// Panics on a loop or an unknown endpoint.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        assert!(self.vertices.contains_key(&a) && self.vertices.contains_key(&b), "unknown endpoint");
        let e = (a.min(b), a.max(b));
        let pos = self.edges.partition_point(|x| *x <= e);
        self.edges.insert(pos, e);
    }

    pub fn vertex(&self, id: usize) -> Option<Vertex> {
        self.vertices.get(&id).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (usize, Vertex)> + '_ {
        self.vertices.iter().map(|(k, v)| (*k, *v))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Neighbors with repetition, one entry per edge.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn edge_count(&self, a: usize, b: usize) -> usize {
        let e = (a.min(b), a.max(b));
        self.edges.iter().filter(|x| **x == e).count()
    }

    /// Sorted `(weight, color)` pairs.
    pub fn label_multiset(&self) -> Vec<(i64, Color)> {
        let mut out: Vec<(i64, Color)> = self.vertices.values().map(|v| (v.weight, v.color)).collect();
        out.sort();
        out
    }

    /// The subgraph on vertices of one color.
    pub fn color_subgraph(&self, c: Color) -> ColoredGraph {
        let vertices: BTreeMap<usize, Vertex> = self.vertices.iter().filter(|(_, v)| v.color == c).map(|(k, v)| (*k, *v)).collect();
        let edges = self.edges.iter().filter(|(a, b)| vertices.contains_key(a) && vertices.contains_key(b)).copied().collect();
        ColoredGraph { vertices, edges }
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let ids: Vec<usize> = self.vertices.keys().copied().collect();
        let index = |v: usize| ids.binary_search(&v).expect("known vertex");
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = ids.len();
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    /// A forest: no cycles and no repeated edges.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components() == self.vertices.len()
    }

    fn remove_vertex(&mut self, v: usize) {
        self.vertices.remove(&v);
        self.edges.retain(|&(a, b)| a != v && b != v);
    }

    fn bump(&mut self, v: usize, delta: i64) {
        self.vertices.get_mut(&v).expect("known vertex").weight += delta;
    }

    fn check_move_color(c: Color) -> Result<(), GraphError> {
        if c == Color::Dicritical {
            Err(GraphError::DicriticalMove)
        } else {
            Ok(())
        }
    }

    /// Contracts a `(−1)` vertex colored `0` or `∞` of valence 1 or 2.
    pub fn blow_down(&self, v: usize) -> Result<ColoredGraph, GraphError> {
        let vert = self.vertex(v).ok_or(GraphError::UnknownVertex(v))?;
        if vert.weight != -1 {
            return Err(GraphError::NotBlowDownable(v, format!("weight {} is not -1", vert.weight)));
        }
        if vert.color == Color::Dicritical {
            return Err(GraphError::NotBlowDownable(v, "dicritical components stay".into()));
        }
        let nb = self.neighbors(v);
        let mut g = self.clone();
        match nb.as_slice() {
            [a] => {
                g.remove_vertex(v);
                g.bump(*a, 1);
            }
            [a, b] if a == b => return Err(GraphError::WouldCreateLoop(v)),
            [a, b] => {
                g.remove_vertex(v);
                g.bump(*a, 1);
                g.bump(*b, 1);
                g.add_edge(*a, *b);
            }
            _ => return Err(GraphError::NotBlowDownable(v, format!("valence {} is not 1 or 2", nb.len()))),
        }
        Ok(g)
    }

    /// Attaches a new leaf `(−1, c)` to `v`, whose weight drops by one; returns the graph and
    /// the new vertex id.
    pub fn blow_up_vertex(&self, v: usize, c: Color) -> Result<(ColoredGraph, usize), GraphError> {
        Self::check_move_color(c)?;
        self.vertex(v).ok_or(GraphError::UnknownVertex(v))?;
        let mut g = self.clone();
        let id = g.add_vertex(-1, c);
        g.bump(v, -1);
        g.add_edge(v, id);
        Ok((g, id))
    }

    /// Subdivides the edge between `a` and `b` by a new `(−1, c)`; both endpoints drop by one.
    pub fn blow_up_edge(&self, a: usize, b: usize, c: Color) -> Result<(ColoredGraph, usize), GraphError> {
        Self::check_move_color(c)?;
        let e = (a.min(b), a.max(b));
        let pos = self.edges.iter().position(|x| *x == e).ok_or(GraphError::UnknownEdge(a, b))?;
        let mut g = self.clone();
        g.edges.remove(pos);
        let id = g.add_vertex(-1, c);
        g.bump(a, -1);
        g.bump(b, -1);
        g.add_edge(a, id);
        g.add_edge(id, b);
        Ok((g, id))
    }
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[(i64, Color)]) -> ColoredGraph {
        let mut g = ColoredGraph::new();
        let ids: Vec<usize> = labels.iter().map(|&(w, c)| g.add_vertex(w, c)).collect();
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1]);
        }
        g
    }

    #[test]
    fn absorption() {
        let g = path(&[(-3, Color::Infty), (-1, Color::Infty)]);
        let h = g.blow_down(1).unwrap();
        assert_eq!(h.label_multiset(), vec![(-2, Color::Infty)]);
        assert!(h.edges().is_empty());
    }

    #[test]
    fn contraction_in_a_chain() {
        let g = path(&[(-2, Color::Zero), (-1, Color::Zero), (-3, Color::Zero)]);
        let h = g.blow_down(1).unwrap();
        assert_eq!(h.label_multiset(), vec![(-2, Color::Zero), (-1, Color::Zero)]);
        assert_eq!(h.edges(), &[(0, 2)]);
    }

    #[test]
    fn forbidden_moves() {
        let g = path(&[(-2, Color::Zero), (-1, Color::Dicritical)]);
        assert!(matches!(g.blow_down(1), Err(GraphError::NotBlowDownable(1, _))));
        assert!(matches!(g.blow_down(0), Err(GraphError::NotBlowDownable(0, _))));
        assert_eq!(g.blow_up_vertex(0, Color::Dicritical).unwrap_err(), GraphError::DicriticalMove);
        assert_eq!(g.blow_down(7).unwrap_err(), GraphError::UnknownVertex(7));
        let lone = path(&[(-1, Color::Zero)]);
        assert!(matches!(lone.blow_down(0), Err(GraphError::NotBlowDownable(0, _))));
        let mut double = path(&[(0, Color::Zero), (-1, Color::Zero)]);
        double.add_edge(0, 1);
        assert_eq!(double.blow_down(1).unwrap_err(), GraphError::WouldCreateLoop(1));
    }

    #[test]
    fn blow_ups_invert_blow_downs() {
        let g = path(&[(-2, Color::Infty), (-3, Color::Zero)]);
        let (h, id) = g.blow_up_vertex(1, Color::Zero).unwrap();
        assert_eq!(h.vertex(1).unwrap().weight, -4);
        assert_eq!(h.blow_down(id).unwrap(), g);
        let (h, id) = g.blow_up_edge(0, 1, Color::Infty).unwrap();
        assert_eq!(h.label_multiset(), vec![(-4, Color::Zero), (-3, Color::Infty), (-1, Color::Infty)]);
        assert_eq!(h.blow_down(id).unwrap(), g);
    }

    #[test]
    fn forests_and_subgraphs() {
        let mut g = path(&[(0, Color::Zero), (0, Color::Infty), (0, Color::Zero)]);
        assert!(g.is_forest());
        assert_eq!(g.color_subgraph(Color::Zero).num_vertices(), 2);
        assert!(g.color_subgraph(Color::Zero).edges().is_empty());
        g.add_edge(0, 2);
        assert!(!g.is_forest());
    }
}
