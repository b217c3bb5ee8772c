//! Simple undirected graphs with integer vertex labels.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::Vertex;
use crate::error::{Error, Result};

/// A simple graph: no loops, no multi-edges. Edges are stored as `(a, b)`
/// with `a < b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Graph {
    /// Validating constructor. Endpoints missing from `vertices` are an
    /// error, as are loops and repeated edges.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            for v in [a, b] {
                if !vertices.contains(&v) {
                    return Err(Error::invalid(format!("edge endpoint {v} is not a vertex")));
                }
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::invalid(format!("repeated edge ({a},{b})")));
            }
        }
        Ok(Graph {
            vertices,
            edges: set,
        })
    }

    /// Vertex set is the union of all endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        let vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Self::new(vertices, edges)
    }

    /// Duplicates are merged; callers guarantee no loops.
    pub(crate) fn from_parts_unchecked(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Self {
        Graph {
            vertices: vertices.into_iter().collect(),
            edges: edges
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect(),
        }
    }

    /// `K_n` on vertices `1..=n`.
    pub fn complete(n: u32) -> Self {
        let edges = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b)));
        Self::from_parts_unchecked(1..=n, edges)
    }

    /// `C_n` on vertices `1..=n`.
    pub fn cycle(n: u32) -> Self {
        let edges = (1..=n).map(|a| (a, a % n + 1));
        Self::from_parts_unchecked(1..=n, edges)
    }

    /// Complete multipartite graph; parts are consecutive label blocks.
    pub fn complete_multipartite(parts: &[u32]) -> Self {
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size as usize));
        }
        let n = part_of.len() as u32;
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if part_of[a as usize - 1] != part_of[b as usize - 1] {
                    edges.push((a, b));
                }
            }
        }
        Self::from_parts_unchecked(1..=n, edges)
    }

    /// Circulant graph on `1..=n`: `a ~ b` when `(b - a) mod n` is a jump.
    pub fn circulant(n: u32, jumps: &[u32]) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for &j in jumps {
                let b = (a + j) % n;
                if a != b {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        Self::from_parts_unchecked(1..=n, edges)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn adjacency(&self) -> HashMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: HashMap<Vertex, BTreeSet<Vertex>> = self
            .vertices
            .iter()
            .map(|&v| (v, BTreeSet::new()))
            .collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        adj
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_triangle_free(&self) -> bool {
        let adj = self.adjacency();
        self.edges
            .iter()
            .all(|(a, b)| adj[a].intersection(&adj[b]).next().is_none())
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Induced subgraph on `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .copied()
                .collect(),
        }
    }

    /// Graphviz text. `name` maps labels to node identifiers.
    pub fn to_dot(&self, graph_name: &str, name: impl Fn(Vertex) -> String) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{graph_name}\" {{");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", name(*v));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", name(*a), name(*b));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Graph::new([1, 2], [(1, 1)]).is_err());
        assert!(Graph::new([1, 2], [(1, 3)]).is_err());
        assert!(Graph::new([1, 2], [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new([1, 2, 3], [(1, 2)]).is_ok());
    }

    #[test]
    fn families() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        let oct = Graph::complete_multipartite(&[2, 2, 2]);
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        let t = Graph::circulant(13, &[1, 3, 4, 9, 10, 12]);
        assert_eq!(t.edge_count(), 39);
        assert!(t.vertices().all(|v| t.degree(v) == 6));
    }

    #[test]
    fn dot_output() {
        let dot = Graph::cycle(3).to_dot("c3", |v| v.to_string());
        assert!(dot.starts_with("graph \"c3\" {"));
        assert_eq!(dot.matches("--").count(), 3);
    }
}
