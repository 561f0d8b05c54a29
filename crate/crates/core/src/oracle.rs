//! Exact longest-heterochromatic-path search by depth-first backtracking.
//!
//! States are (current endpoint, visited set, used color set). Two pruning
//! bounds are applied, both admissible: a rainbow path can gain at most one
//! edge per color not yet used, and at most one edge per vertex not yet
//! visited, so a branch whose current length plus the smaller of those two
//! counts cannot strictly beat the incumbent is cut. Starts and neighbors
//! are scanned in ascending vertex id and only strict improvements replace
//! the incumbent, which makes the result the lexicographically smallest
//! vertex sequence among the maximum-length paths. Admissibility of the
//! bounds is covered by the brute-force equivalence tests on small graphs.
//!
//! An exhausted budget never yields a silently wrong answer: the outcome is
//! flagged `exact: false` and carries the best path found so far.

use crate::graph::{EdgeColoredGraph, VertexPath};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Caps on the search effort. Node and time caps may be combined; an
/// unlimited budget makes the search exact.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_max_nodes(max_nodes: u64) -> Self {
        Self { max_nodes: Some(max_nodes), time_limit: None }
    }
}

/// Search result: the best path found, whether the search ran to
/// completion, and how many nodes were expanded.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub path: VertexPath,
    pub exact: bool,
    pub nodes: u64,
}

struct Search<'a> {
    g: &'a EdgeColoredGraph,
    visited: Vec<bool>,
    used: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    node_cap: u64,
    deadline: Option<Instant>,
    truncated: bool,
}

impl<'a> Search<'a> {
    fn extend(&mut self, v: usize) {
        if self.truncated {
            return;
        }
        if self.nodes >= self.node_cap {
            self.truncated = true;
            return;
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.truncated = true;
                    return;
                }
            }
        }

        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }

        let unused_colors = self.g.color_count() - (self.current.len() - 1);
        let unvisited = self.g.vertex_count() - self.current.len();
        if self.current.len() + unused_colors.min(unvisited) <= self.best.len() {
            return;
        }

        for &(nb, slot) in self.g.adjacency(v) {
            let (nb, slot) = (nb as usize, slot as usize);
            if self.visited[nb] || self.used[slot] {
                continue;
            }
            self.visited[nb] = true;
            self.used[slot] = true;
            self.current.push(nb);
            self.extend(nb);
            self.current.pop();
            self.used[slot] = false;
            self.visited[nb] = false;
            if self.truncated {
                return;
            }
        }
    }
}

/// Finds a maximum-length rainbow path, starting at `from` when given.
///
/// Exact when the budget is not exhausted. Panics if the graph has no
/// vertices or `from` is out of range.
pub fn longest_rainbow_path(
    g: &EdgeColoredGraph,
    from: Option<usize>,
    budget: &SearchBudget,
) -> SearchOutcome {
    let n = g.vertex_count();
    assert!(n > 0, "longest_rainbow_path needs at least one vertex");
    if let Some(v) = from {
        assert!(v < n, "start vertex {v} out of range (n = {n})");
    }

    let mut search = Search {
        g,
        visited: vec![false; n],
        used: vec![false; g.color_count()],
        current: Vec::with_capacity(n),
        best: Vec::new(),
        nodes: 0,
        node_cap: budget.max_nodes.unwrap_or(u64::MAX),
        deadline: budget.time_limit.map(|d| Instant::now() + d),
        truncated: false,
    };

    let starts: Vec<usize> = match from {
        Some(v) => vec![v],
        None => (0..n).collect(),
    };
    for s in starts {
        search.visited[s] = true;
        search.current.push(s);
        search.extend(s);
        search.current.pop();
        search.visited[s] = false;
        if search.truncated {
            break;
        }
    }

    let path = VertexPath::new(g, search.best).expect("search produces valid paths");
    SearchOutcome { path, exact: !search.truncated, nodes: search.nodes }
}

/// Reference oracle: enumerates every rainbow path outright (a prefix with a
/// repeated color is never extended, since subpaths of rainbow paths are
/// rainbow). No other pruning, no incumbent bound; kept deliberately
/// independent of `longest_rainbow_path`, which it cross-checks on small
/// instances. Same determinism contract.
pub fn exhaustive_longest_rainbow_path(g: &EdgeColoredGraph, from: Option<usize>) -> VertexPath {
    let n = g.vertex_count();
    assert!(n > 0, "exhaustive_longest_rainbow_path needs at least one vertex");

    fn recurse(
        g: &EdgeColoredGraph,
        trail: &mut Vec<usize>,
        colors: &mut Vec<crate::graph::Color>,
        best: &mut Vec<usize>,
    ) {
        if trail.len() > best.len() {
            *best = trail.clone();
        }
        let v = *trail.last().unwrap();
        for (nb, c) in g.neighbors(v) {
            if trail.contains(&nb) || colors.contains(&c) {
                continue;
            }
            trail.push(nb);
            colors.push(c);
            recurse(g, trail, colors, best);
            colors.pop();
            trail.pop();
        }
    }

    let mut best = Vec::new();
    let starts: Vec<usize> = match from {
        Some(v) => vec![v],
        None => (0..n).collect(),
    };
    for s in starts {
        let mut trail = vec![s];
        let mut colors = Vec::new();
        recurse(g, &mut trail, &mut colors, &mut best);
    }
    VertexPath::new(g, best).expect("enumeration produces valid paths")
}

/// Enumerates rainbow paths with exactly `length` edges, in DFS order over
/// ascending starts and neighbors, keeping at most `cap` paths per start
/// vertex. Deterministic given its arguments; used by the harness to sample
/// short paths for the spoke-lemma checks, which hold for any rainbow path
/// of length >= 5.
pub fn enumerate_rainbow_paths(g: &EdgeColoredGraph, length: usize, cap: usize) -> Vec<VertexPath> {
    fn recurse(
        g: &EdgeColoredGraph,
        visited: &mut Vec<bool>,
        used: &mut Vec<bool>,
        trail: &mut Vec<usize>,
        length: usize,
        cap: usize,
        out: &mut Vec<VertexPath>,
    ) {
        if out.len() == cap {
            return;
        }
        if trail.len() == length + 1 {
            out.push(VertexPath::new(g, trail.clone()).expect("enumeration produces valid paths"));
            return;
        }
        let v = *trail.last().unwrap();
        for &(nb, slot) in g.adjacency(v) {
            let (nb, slot) = (nb as usize, slot as usize);
            if visited[nb] || used[slot] {
                continue;
            }
            visited[nb] = true;
            used[slot] = true;
            trail.push(nb);
            recurse(g, visited, used, trail, length, cap, out);
            trail.pop();
            used[slot] = false;
            visited[nb] = false;
            if out.len() == cap {
                return;
            }
        }
    }

    let mut out = Vec::new();
    let mut visited = vec![false; g.vertex_count()];
    let mut used = vec![false; g.color_count()];
    for s in 0..g.vertex_count() {
        let quota = out.len() + cap;
        visited[s] = true;
        let mut trail = vec![s];
        recurse(g, &mut visited, &mut used, &mut trail, length, quota, &mut out);
        visited[s] = false;
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundCheckError {
    #[error("theorem requires k >= 6 (got {0})")]
    KTooSmall(usize),
    #[error("minimum color degree {actual} is below the claimed k = {required}")]
    MinColorDegreeTooSmall { required: usize, actual: usize },
    #[error("graph has a rainbow triangle ({0}, {1}, {2})")]
    RainbowTriangle(usize, usize, usize),
}

/// Outcome of the 3k/4 bound check. `holds` may legitimately be true on an
/// inexact search (any found path already witnesses the lower bound); the
/// combination `!holds && !exact` is inconclusive rather than a failure.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub lmax: usize,
    pub bound: usize,
    pub holds: bool,
    pub exact: bool,
    pub nodes: u64,
}

/// Checks that a rainbow-triangle-free graph with minimum color degree
/// >= k >= 6 has a rainbow path of length at least ceil(3k/4). Lengths are
/// integers, so the ceiling is equivalent to the stated 3k/4.
pub fn verify_bound34(
    g: &EdgeColoredGraph,
    k: usize,
    budget: &SearchBudget,
) -> Result<BoundCheck, BoundCheckError> {
    if k < 6 {
        return Err(BoundCheckError::KTooSmall(k));
    }
    let actual = g.min_color_degree();
    if actual < k {
        return Err(BoundCheckError::MinColorDegreeTooSmall { required: k, actual });
    }
    if let Some((a, b, c)) = g.find_rainbow_triangle() {
        return Err(BoundCheckError::RainbowTriangle(a, b, c));
    }
    let outcome = longest_rainbow_path(g, None, budget);
    let bound = (3 * k).div_ceil(4);
    Ok(BoundCheck {
        lmax: outcome.path.len(),
        bound,
        holds: outcome.path.len() >= bound,
        exact: outcome.exact,
        nodes: outcome.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_gk, gen_kgood_triangle_free, gen_uniform_coloring};
    use crate::graph::EdgeColoredGraph;

    #[test]
    fn path_graph_gives_its_length() {
        let g = EdgeColoredGraph::new(3, [(0, 1, 1), (1, 2, 2)]).unwrap();
        let out = longest_rainbow_path(&g, None, &SearchBudget::unlimited());
        assert!(out.exact);
        assert_eq!(out.path.len(), 2);
        assert_eq!(out.path.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn ties_break_to_the_lexicographically_smallest_sequence() {
        let g = EdgeColoredGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let out = longest_rainbow_path(&g, None, &SearchBudget::unlimited());
        assert_eq!(out.path.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn gk_longest_is_exactly_k() {
        for k in 1..=5u32 {
            let g = gen_gk(k).unwrap();
            let out = longest_rainbow_path(&g, None, &SearchBudget::unlimited());
            assert!(out.exact);
            assert_eq!(out.path.len(), k as usize, "G_{k}");
        }
    }

    #[test]
    fn from_vertex_is_respected() {
        let g = gen_gk(3).unwrap();
        let out = longest_rainbow_path(&g, Some(5), &SearchBudget::unlimited());
        assert_eq!(out.path.start(), 5);
        assert_eq!(out.path.len(), 3);
    }

    #[test]
    fn single_color_caps_length_at_one() {
        let g = gen_uniform_coloring(5, 1, 3).unwrap();
        let out = longest_rainbow_path(&g, None, &SearchBudget::unlimited());
        assert_eq!(out.path.len(), 1);
    }

    #[test]
    fn matches_exhaustive_enumeration_on_small_uniform_graphs() {
        for seed in 0..40 {
            let n = 2 + (seed as usize % 7);
            let colors = 1 + (seed as u32 % 9);
            let g = gen_uniform_coloring(n, colors, seed).unwrap();
            let fast = longest_rainbow_path(&g, None, &SearchBudget::unlimited());
            let slow = exhaustive_longest_rainbow_path(&g, None);
            assert!(fast.exact);
            assert_eq!(fast.path.len(), slow.len(), "n={n} colors={colors} seed={seed}");
            assert_eq!(fast.path.vertices(), slow.vertices());
        }
    }

    #[test]
    fn enumeration_emits_exact_length_paths_up_to_the_cap() {
        let g = gen_gk(3).unwrap();
        let paths = enumerate_rainbow_paths(&g, 2, 25);
        assert_eq!(paths.len(), 25);
        for p in &paths {
            assert_eq!(p.len(), 2);
            assert!(p.is_rainbow());
        }
        // Length beyond the color budget yields nothing.
        assert!(enumerate_rainbow_paths(&g, 4, 10).is_empty());
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let g = gen_uniform_coloring(9, 9, 1).unwrap();
        let out = longest_rainbow_path(&g, None, &SearchBudget::with_max_nodes(5));
        assert!(!out.exact);
        assert!(out.nodes <= 5);
        // The partial result is still a valid rainbow path.
        assert!(out.path.is_rainbow());
    }

    #[test]
    fn deleting_an_edge_never_lengthens_the_longest_path() {
        for seed in 0..10 {
            let g = gen_uniform_coloring(6, 4, seed).unwrap();
            let full = longest_rainbow_path(&g, None, &SearchBudget::unlimited()).path.len();
            let (u, v, _) = g.edges().next().unwrap();
            let reduced = g.without_edge(u, v);
            let less = longest_rainbow_path(&reduced, None, &SearchBudget::unlimited()).path.len();
            assert!(less <= full);
        }
    }

    #[test]
    fn bound34_on_generated_instance() {
        let g = gen_kgood_triangle_free(12, 6, 11).unwrap();
        let check = verify_bound34(&g, 6, &SearchBudget::unlimited()).unwrap();
        assert_eq!(check.bound, 5);
        assert!(check.exact);
        assert!(check.holds);
    }

    #[test]
    fn bound34_rejects_bad_preconditions() {
        let g = gen_gk(3).unwrap();
        assert_eq!(verify_bound34(&g, 5, &SearchBudget::unlimited()).unwrap_err(), BoundCheckError::KTooSmall(5));
        assert_eq!(
            verify_bound34(&g, 6, &SearchBudget::unlimited()).unwrap_err(),
            BoundCheckError::MinColorDegreeTooSmall { required: 6, actual: 3 }
        );
        let rainbow = EdgeColoredGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        // k precondition fails first on this tiny graph; force a direct
        // triangle report with an adequate fake k by checking the variant.
        assert!(matches!(
            verify_bound34(&rainbow, 6, &SearchBudget::unlimited()).unwrap_err(),
            BoundCheckError::MinColorDegreeTooSmall { .. }
        ));
    }
}
