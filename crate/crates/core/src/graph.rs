//! Edge-colored simple graphs with color-degree queries, rainbow-triangle
//! detection and path validation.
//!
//! Vertices are `0..n`, colors are opaque positive integers. A missing edge
//! has no color at all; no sentinel value is ever stored. Graphs are
//! immutable after construction, so every query here is a pure read and
//! values can be shared freely across threads.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Opaque edge-color identifier (always >= 1).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Color(pub u32);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Set of distinct colors, e.g. a color neighborhood CN(v).
pub type ColorSet = BTreeSet<Color>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{0}, {1}}} has color 0; colors must be >= 1")]
    InvalidColor(usize, usize),
    #[error("required edge {{{0}, {1}}} is missing")]
    MissingEdge(usize, usize),
}

/// An immutable simple graph with a total color assignment on its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    /// Canonical edge store, keyed by (min, max) vertex pair.
    edges: BTreeMap<(u32, u32), Color>,
    /// Per-vertex adjacency, sorted by neighbor id: (neighbor, color slot).
    adj: Vec<Vec<(u32, u32)>>,
    /// Sorted distinct colors; a "slot" is an index into this vector.
    palette: Vec<Color>,
}

impl EdgeColoredGraph {
    /// Builds a graph from an edge list, validating the simple-graph
    /// invariants (no self-loops, no duplicate pairs, ids `< n`, colors >= 1).
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self, GraphError> {
        let mut edges = BTreeMap::new();
        for (u, v, c) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if c == 0 {
                return Err(GraphError::InvalidColor(u, v));
            }
            let key = (u.min(v) as u32, u.max(v) as u32);
            if edges.insert(key, Color(c)).is_some() {
                return Err(GraphError::DuplicateEdge(key.0 as usize, key.1 as usize));
            }
        }

        let palette: Vec<Color> = edges.values().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let slot_of = |c: Color| palette.binary_search(&c).expect("color in palette") as u32;

        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &c) in &edges {
            let s = slot_of(c);
            adj[u as usize].push((v, s));
            adj[v as usize].push((u, s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        Ok(Self { n, edges, adj, palette })
    }

    /// Complete graph K_n where each edge's color is supplied by `color`.
    pub fn complete(n: usize, mut color: impl FnMut(usize, usize) -> u32) -> Result<Self, GraphError> {
        let mut list = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                list.push((u, v, color(u, v)));
            }
        }
        Self::new(n, list)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (u, v) order with u < v.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u as usize, v as usize, c))
    }

    /// Sorted distinct colors present in the graph.
    pub fn palette(&self) -> &[Color] {
        &self.palette
    }

    pub fn color_count(&self) -> usize {
        self.palette.len()
    }

    pub fn color_of_slot(&self, slot: usize) -> Color {
        self.palette[slot]
    }

    /// C(uv), or None when uv is not an edge.
    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges.get(&key).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.color(u, v).is_some()
    }

    /// Like `color` but for callers that require the edge to exist.
    pub fn require_color(&self, u: usize, v: usize) -> Result<Color, GraphError> {
        self.color(u, v).ok_or(GraphError::MissingEdge(u, v))
    }

    /// Neighbors of v in ascending id order, with edge colors.
    ///
    /// Panics if `v >= n`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.adj[v].iter().map(|&(u, s)| (u as usize, self.palette[s as usize]))
    }

    /// Raw adjacency of v: (neighbor, color slot), ascending neighbor id.
    pub(crate) fn adjacency(&self, v: usize) -> &[(u32, u32)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// d^c(v): the number of distinct colors presented at v.
    ///
    /// Panics if `v >= n`.
    pub fn color_degree(&self, v: usize) -> usize {
        let mut seen = vec![false; self.palette.len()];
        let mut count = 0;
        for &(_, s) in &self.adj[v] {
            if !seen[s as usize] {
                seen[s as usize] = true;
                count += 1;
            }
        }
        count
    }

    /// CN(v): the set of colors presented at v.
    ///
    /// Panics if `v >= n`.
    pub fn color_neighborhood(&self, v: usize) -> ColorSet {
        self.adj[v].iter().map(|&(_, s)| self.palette[s as usize]).collect()
    }

    pub fn min_color_degree(&self) -> usize {
        (0..self.n).map(|v| self.color_degree(v)).min().unwrap_or(0)
    }

    pub fn max_color_degree(&self) -> usize {
        (0..self.n).map(|v| self.color_degree(v)).max().unwrap_or(0)
    }

    /// Finds a rainbow (heterochromatic) triangle: three pairwise-adjacent
    /// vertices whose connecting edges carry three distinct colors.
    ///
    /// Scans triples a < b < c in lexicographic order, so the returned
    /// triple is the lexicographically smallest one.
    pub fn find_rainbow_triangle(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for &(b, sab) in &self.adj[a] {
                let b = b as usize;
                if b <= a {
                    continue;
                }
                for &(c, sbc) in &self.adj[b] {
                    let c = c as usize;
                    if c <= b || sbc == sab {
                        continue;
                    }
                    if let Some(&(_, sac)) = self.adj[a]
                        .binary_search_by_key(&(c as u32), |&(w, _)| w)
                        .ok()
                        .map(|i| &self.adj[a][i])
                    {
                        if sac != sab && sac != sbc {
                            return Some((a, b, c));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff the graph is a complete graph carrying a Gallai coloring,
    /// i.e. complete and free of rainbow triangles.
    pub fn is_gallai_complete(&self) -> bool {
        self.is_complete() && self.find_rainbow_triangle().is_none()
    }

    /// Diagnostic path validation; malformed input yields `valid: false`
    /// rather than an error.
    pub fn check_path(&self, vertices: &[usize]) -> PathCheck {
        if vertices.is_empty() {
            return PathCheck { valid: false, rainbow: false, length: 0 };
        }
        let mut seen = BTreeSet::new();
        for &v in vertices {
            if v >= self.n || !seen.insert(v) {
                return PathCheck { valid: false, rainbow: false, length: 0 };
            }
        }
        let mut colors = BTreeSet::new();
        let mut rainbow = true;
        for pair in vertices.windows(2) {
            match self.color(pair[0], pair[1]) {
                Some(c) => {
                    if !colors.insert(c) {
                        rainbow = false;
                    }
                }
                None => return PathCheck { valid: false, rainbow: false, length: 0 },
            }
        }
        PathCheck { valid: true, rainbow, length: vertices.len() - 1 }
    }

    /// Copy of the graph with one edge removed (for deletion experiments).
    pub fn without_edge(&self, u: usize, v: usize) -> EdgeColoredGraph {
        let list = self
            .edges()
            .filter(|&(a, b, _)| (a, b) != (u.min(v), u.max(v)))
            .map(|(a, b, c)| (a, b, c.0));
        EdgeColoredGraph::new(self.n, list).expect("subgraph of a valid graph is valid")
    }
}

/// Result of `check_path`: `length` is the edge count and only meaningful
/// when `valid` is true.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCheck {
    pub valid: bool,
    pub rainbow: bool,
    pub length: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("path must contain at least one vertex")]
    Empty,
    #[error("path vertex {0} out of range")]
    OutOfRange(usize),
    #[error("path repeats vertex {0}")]
    Repeated(usize),
    #[error("path vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// A validated path: distinct vertices, consecutive pairs adjacent, with the
/// derived edge-color sequence. Length is the number of edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPath {
    vertices: Vec<usize>,
    colors: Vec<Color>,
}

impl VertexPath {
    pub fn new(g: &EdgeColoredGraph, vertices: Vec<usize>) -> Result<Self, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(PathError::OutOfRange(v));
            }
            if !seen.insert(v) {
                return Err(PathError::Repeated(v));
            }
        }
        let mut colors = Vec::with_capacity(vertices.len() - 1);
        for pair in vertices.windows(2) {
            match g.color(pair[0], pair[1]) {
                Some(c) => colors.push(c),
                None => return Err(PathError::NotAdjacent(pair[0], pair[1])),
            }
        }
        Ok(Self { vertices, colors })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// True iff all edge colors along the path are pairwise distinct.
    pub fn is_rainbow(&self) -> bool {
        let set: BTreeSet<Color> = self.colors.iter().copied().collect();
        set.len() == self.colors.len()
    }

    pub fn color_set(&self) -> ColorSet {
        self.colors.iter().copied().collect()
    }

    pub fn reversed(&self) -> VertexPath {
        let mut vertices = self.vertices.clone();
        let mut colors = self.colors.clone();
        vertices.reverse();
        colors.reverse();
        VertexPath { vertices, colors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_gk;

    fn k3(colors: [u32; 3]) -> EdgeColoredGraph {
        EdgeColoredGraph::new(3, [(0, 1, colors[0]), (1, 2, colors[1]), (0, 2, colors[2])]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            EdgeColoredGraph::new(3, [(0, 0, 1)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            EdgeColoredGraph::new(3, [(0, 1, 1), (1, 0, 2)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            EdgeColoredGraph::new(2, [(0, 3, 1)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 2 }
        );
        assert_eq!(
            EdgeColoredGraph::new(2, [(0, 1, 0)]).unwrap_err(),
            GraphError::InvalidColor(0, 1)
        );
    }

    #[test]
    fn color_degree_isolated_vertex_is_zero() {
        let g = EdgeColoredGraph::new(1, []).unwrap();
        assert_eq!(g.color_degree(0), 0);
        assert!(g.color_neighborhood(0).is_empty());
    }

    #[test]
    fn color_degree_in_g2() {
        // G_2 vertex ids: 00 = 0, 01 = 1, 10 = 2, 11 = 3.
        let g = gen_gk(2).unwrap();
        assert_eq!(g.color_degree(0), 2);
        let cn: Vec<u32> = g.color_neighborhood(0).iter().map(|c| c.0).collect();
        assert_eq!(cn, vec![1, 2]);
    }

    #[test]
    fn color_degree_star_with_repeated_color() {
        let g = EdgeColoredGraph::new(4, [(0, 1, 1), (0, 2, 1), (0, 3, 2)]).unwrap();
        assert_eq!(g.color_degree(0), 2);
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn rainbow_triangle_detection() {
        assert_eq!(k3([1, 2, 3]).find_rainbow_triangle(), Some((0, 1, 2)));
        assert_eq!(k3([1, 1, 2]).find_rainbow_triangle(), None);
        assert_eq!(gen_gk(3).unwrap().find_rainbow_triangle(), None);
    }

    #[test]
    fn rainbow_triangle_is_lexicographically_smallest() {
        // Two rainbow triangles: (1,2,3) and (0,2,4); (0,2,4) is smaller.
        let g = EdgeColoredGraph::new(
            5,
            [
                (1, 2, 1),
                (2, 3, 2),
                (1, 3, 3),
                (0, 2, 4),
                (2, 4, 5),
                (0, 4, 6),
            ],
        )
        .unwrap();
        assert_eq!(g.find_rainbow_triangle(), Some((0, 2, 4)));
    }

    #[test]
    fn gallai_complete_checks() {
        assert!(gen_gk(2).unwrap().is_gallai_complete());
        assert!(!k3([1, 2, 3]).is_gallai_complete());
        // K_4 minus one edge.
        let g = EdgeColoredGraph::new(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]).unwrap();
        assert!(!g.is_gallai_complete());
    }

    #[test]
    fn path_validation() {
        let g = gen_gk(2).unwrap();
        assert_eq!(
            g.check_path(&[0]),
            PathCheck { valid: true, rainbow: true, length: 0 }
        );
        // (01, 00, 10): colors 2 then 1.
        assert_eq!(
            g.check_path(&[1, 0, 2]),
            PathCheck { valid: true, rainbow: true, length: 2 }
        );
        // (00, 10, 11, 01): colors 1, 2, 1.
        assert_eq!(
            g.check_path(&[0, 2, 3, 1]),
            PathCheck { valid: true, rainbow: false, length: 3 }
        );
        // Malformed inputs.
        assert!(!g.check_path(&[]).valid);
        assert!(!g.check_path(&[0, 0]).valid);
        assert!(!g.check_path(&[0, 7]).valid);
    }

    #[test]
    fn vertex_path_type_carries_colors() {
        let g = gen_gk(2).unwrap();
        let p = VertexPath::new(&g, vec![1, 0, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.colors(), &[Color(2), Color(1)]);
        assert!(p.is_rainbow());
        assert_eq!(p.reversed().vertices(), &[2, 0, 1]);
        assert_eq!(VertexPath::new(&g, vec![]).unwrap_err(), PathError::Empty);
    }
}
