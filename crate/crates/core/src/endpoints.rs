//! Endpoint analysis for a longest rainbow path.
//!
//! For a longest rainbow path P = u_0 u_1 ... u_l in a rainbow-triangle-free
//! graph, counts the colors presented at each endpoint that do not appear on
//! P (s at u_0, t at u_l), locates witness indices for them on the path, and
//! evaluates the three counting inequalities these quantities satisfy:
//!
//!   (1) |{C(u_0 u_i) : 1 <= i <= l}| <= l - s
//!   (2) |CN(u_0) \ {C(u_0 u_i)}|     <= l - t, and those colors avoid the
//!       successor-edge colors at the y witnesses (otherwise rotating the
//!       path through u_l would lengthen it)
//!   (3) k <= 2l - s - t
//!
//! together with l + s >= k, l + t >= k and the witness gap conditions
//! (x_1 >= 3, consecutive x and y witnesses never adjacent, y_t <= l - 3).
//!
//! Longest-ness of the input path is the caller's responsibility, but the
//! one observable symptom of a non-longest path — an endpoint neighbor off
//! the path joined by a color the path misses — is detected and reported
//! rather than folded into nonsense counts.

use crate::graph::{Color, ColorSet, EdgeColoredGraph, VertexPath};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalyzeError {
    #[error("path is not rainbow")]
    NotRainbow,
    #[error(
        "path is not longest: vertex {endpoint} has neighbor {neighbor} off the path \
         with color {color} not on the path"
    )]
    NotLongest { endpoint: usize, neighbor: usize, color: Color },
}

/// The quantities from the endpoint-counting argument; `len` is l.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EndpointAnalysis {
    pub path: VertexPath,
    pub len: usize,
    pub k: usize,
    /// s: colors at u_0 that do not appear on the path.
    pub missed_at_start: usize,
    /// t: colors at u_l that do not appear on the path.
    pub missed_at_end: usize,
    /// x_1 < ... < x_s: indices of spokes u_0 u_{x_i} realizing the s colors.
    pub x_indices: Vec<usize>,
    /// y_1 < ... < y_t: indices of spokes u_{y_j} u_l realizing the t colors.
    pub y_indices: Vec<usize>,
    pub ineq1_lhs: usize,
    pub ineq1_bound: i64,
    pub ineq1_holds: bool,
    pub ineq2_lhs: usize,
    pub ineq2_bound: i64,
    pub ineq2_holds: bool,
    pub ineq2_avoids_successors: bool,
    pub ineq3_holds: bool,
    /// l + s >= k.
    pub start_extension_holds: bool,
    /// l + t >= k.
    pub end_extension_holds: bool,
    /// x_1 >= 3 and x_{i+1} > x_i + 1.
    pub x_gaps_hold: bool,
    /// y_t <= l - 3 and y_{j+1} > y_j + 1.
    pub y_gaps_hold: bool,
}

impl EndpointAnalysis {
    /// All conditions the proof derives for a longest rainbow path in a
    /// rainbow-triangle-free graph with minimum color degree >= k.
    pub fn all_hold(&self) -> bool {
        self.ineq1_holds
            && self.ineq2_holds
            && self.ineq2_avoids_successors
            && self.ineq3_holds
            && self.start_extension_holds
            && self.end_extension_holds
            && self.x_gaps_hold
            && self.y_gaps_hold
    }
}

/// Runs the endpoint analysis for path `p` against claimed minimum color
/// degree `k`. `p` must be a longest rainbow path of `g`; k is taken
/// explicitly so subgraph scenarios can be analyzed.
pub fn analyze_endpoints(
    g: &EdgeColoredGraph,
    p: &VertexPath,
    k: usize,
) -> Result<EndpointAnalysis, AnalyzeError> {
    if !p.is_rainbow() {
        return Err(AnalyzeError::NotRainbow);
    }
    let verts = p.vertices();
    let l = p.len();
    let path_colors = p.color_set();
    let on_path = {
        let mut on = vec![false; g.vertex_count()];
        for &v in verts {
            on[v] = true;
        }
        on
    };

    let start = verts[0];
    let end = verts[l];

    // Any neighbor off the path reached by a color the path misses would
    // extend the path, contradicting longest-ness.
    for endpoint in [start, end] {
        for (nb, c) in g.neighbors(endpoint) {
            if !on_path[nb] && !path_colors.contains(&c) {
                return Err(AnalyzeError::NotLongest { endpoint, neighbor: nb, color: c });
            }
        }
    }

    let cn_start = g.color_neighborhood(start);
    let cn_end = g.color_neighborhood(end);
    let off_start: ColorSet = cn_start.difference(&path_colors).copied().collect();
    let off_end: ColorSet = cn_end.difference(&path_colors).copied().collect();
    let s = off_start.len();
    let t = off_end.len();

    // Witnesses: first spoke per off-path color, ascending index. Every
    // off-path color has one, as all its edges lead into the path.
    let mut x_indices = Vec::with_capacity(s);
    let mut covered = ColorSet::new();
    for (i, &vi) in verts.iter().enumerate().skip(2) {
        if let Some(c) = g.color(start, vi) {
            if off_start.contains(&c) && covered.insert(c) {
                x_indices.push(i);
            }
        }
    }
    debug_assert_eq!(x_indices.len(), s);

    let mut y_indices = Vec::with_capacity(t);
    covered.clear();
    for (y, &vy) in verts.iter().enumerate().take(l.saturating_sub(1)) {
        if let Some(c) = g.color(vy, end) {
            if off_end.contains(&c) && covered.insert(c) {
                y_indices.push(y);
            }
        }
    }
    debug_assert_eq!(y_indices.len(), t);

    // Inequality (1): distinct colors among the u_0 spokes into the path.
    let spoke_colors: ColorSet =
        verts[1..].iter().filter_map(|&vi| g.color(start, vi)).collect();
    let ineq1_lhs = spoke_colors.len();
    let ineq1_bound = l as i64 - s as i64;
    let ineq1_holds = (ineq1_lhs as i64) <= ineq1_bound;

    // Inequality (2): colors at u_0 realized only off the path.
    let residual: ColorSet = cn_start.difference(&spoke_colors).copied().collect();
    let successor_colors: ColorSet = y_indices
        .iter()
        .map(|&y| g.color(verts[y], verts[y + 1]).expect("path edge exists"))
        .collect();
    let ineq2_lhs = residual.len();
    let ineq2_bound = l as i64 - t as i64;
    let ineq2_holds = (ineq2_lhs as i64) <= ineq2_bound;
    let ineq2_avoids_successors = residual.is_disjoint(&successor_colors);

    let ineq3_holds = (k as i64) <= 2 * l as i64 - s as i64 - t as i64;

    let gaps = |idx: &[usize]| idx.windows(2).all(|w| w[1] > w[0] + 1);
    let x_gaps_hold = x_indices.first().map_or(true, |&x1| x1 >= 3) && gaps(&x_indices);
    let y_gaps_hold =
        y_indices.last().map_or(true, |&yt| yt as i64 <= l as i64 - 3) && gaps(&y_indices);

    Ok(EndpointAnalysis {
        path: p.clone(),
        len: l,
        k,
        missed_at_start: s,
        missed_at_end: t,
        x_indices,
        y_indices,
        ineq1_lhs,
        ineq1_bound,
        ineq1_holds,
        ineq2_lhs,
        ineq2_bound,
        ineq2_holds,
        ineq2_avoids_successors,
        ineq3_holds,
        start_extension_holds: l + s >= k,
        end_extension_holds: l + t >= k,
        x_gaps_hold,
        y_gaps_hold,
    })
}

/// Convenience wrapper that recomputes k as the graph's minimum color
/// degree.
pub fn analyze_endpoints_auto(
    g: &EdgeColoredGraph,
    p: &VertexPath,
) -> Result<EndpointAnalysis, AnalyzeError> {
    analyze_endpoints(g, p, g.min_color_degree())
}
