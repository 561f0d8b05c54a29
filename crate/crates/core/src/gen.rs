//! Deterministic and seeded instance generators.
//!
//! Every generator is a pure function of its parameters and seed, so
//! experiment trials reproduce exactly. `gen_gk` builds the extremal
//! complete graph on binary k-tuples; `gen_gallai_substitution` builds
//! random Gallai-colored complete graphs by recursive substitution;
//! `gen_kgood_triangle_free` produces rainbow-triangle-free graphs with
//! minimum color degree at least k; `gen_uniform_coloring` gives
//! negative-control complete graphs with i.i.d. colors.

use crate::graph::{Color, EdgeColoredGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("k = {0} too large for the hypercube family (limit 19)")]
    TooLarge(u32),
    #[error("no rainbow-triangle-free instance with n = {n} and min color degree {k} reachable")]
    Infeasible { n: usize, k: usize },
}

/// Parameters for one generated instance; `Display` gives the canonical
/// description string used in experiment reports.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    Gk { k: u32 },
    GallaiSubstitution { n: usize, seed: u64 },
    KGoodTriangleFree { n: usize, k: usize, seed: u64 },
    UniformRandom { n: usize, colors: u32, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> Result<EdgeColoredGraph, GenError> {
        match *self {
            GenSpec::Gk { k } => gen_gk(k),
            GenSpec::GallaiSubstitution { n, seed } => gen_gallai_substitution(n, seed),
            GenSpec::KGoodTriangleFree { n, k, seed } => gen_kgood_triangle_free(n, k, seed),
            GenSpec::UniformRandom { n, colors, seed } => gen_uniform_coloring(n, colors, seed),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenSpec::Gk { k } => write!(f, "gk k={k}"),
            GenSpec::GallaiSubstitution { n, seed } => write!(f, "gallai-substitution n={n} seed={seed}"),
            GenSpec::KGoodTriangleFree { n, k, seed } => {
                write!(f, "kgood-trianglefree n={n} k={k} seed={seed}")
            }
            GenSpec::UniformRandom { n, colors, seed } => {
                write!(f, "uniform-random n={n} colors={colors} seed={seed}")
            }
        }
    }
}

/// The extremal family G_k: complete graph on the 2^k ordered k-tuples of
/// 0's and 1's. Vertex id encodes the tuple most-significant bit first, and
/// edge {u, v} gets color j where j is the 1-based position (from the most
/// significant coordinate) of the first coordinate where u and v differ.
///
/// Every vertex has color degree exactly k and the coloring has no rainbow
/// triangle, while only k colors exist in total.
pub fn gen_gk(k: u32) -> Result<EdgeColoredGraph, GenError> {
    if k == 0 {
        return Err(GenError::InvalidParameter("gk requires k >= 1".into()));
    }
    if k >= 20 {
        return Err(GenError::TooLarge(k));
    }
    let n = 1usize << k;
    EdgeColoredGraph::complete(n, |u, v| {
        let highest_bit = 31 - ((u ^ v) as u32).leading_zeros();
        k - highest_bit
    })
    .map_err(|e| GenError::InvalidParameter(e.to_string()))
}

/// Random Gallai-colored complete graph on n vertices, built recursively:
/// split the vertex set into 2 or 3 blocks, color all edges between a pair
/// of blocks with one of 2 fresh colors, recurse inside blocks with fresh
/// colors. A triangle either lies inside a block (induction) or touches at
/// least two blocks, in which case two of its edges share a base color, so
/// no rainbow triangle can appear.
pub fn gen_gallai_substitution(n: usize, seed: u64) -> Result<EdgeColoredGraph, GenError> {
    if n == 0 {
        return Err(GenError::InvalidParameter("gallai-substitution requires n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut next_color = 1u32;
    substitute(&mut rng, &vertices, &mut next_color, &mut edges);
    EdgeColoredGraph::new(n, edges).map_err(|e| GenError::InvalidParameter(e.to_string()))
}

fn substitute(rng: &mut ChaCha8Rng, verts: &[usize], next_color: &mut u32, out: &mut Vec<(usize, usize, u32)>) {
    match verts.len() {
        0 | 1 => return,
        2 => {
            let c = *next_color;
            *next_color += 1;
            out.push((verts[0], verts[1], c));
            return;
        }
        _ => {}
    }
    let block_count = if rng.gen_bool(0.5) { 2 } else { 3.min(verts.len()) };
    let mut cuts: Vec<usize> = Vec::new();
    while cuts.len() < block_count - 1 {
        let c = rng.gen_range(1..verts.len());
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    cuts.push(verts.len());
    let mut blocks: Vec<&[usize]> = Vec::with_capacity(block_count);
    let mut start = 0;
    for &c in &cuts {
        blocks.push(&verts[start..c]);
        start = c;
    }

    let base = [*next_color, *next_color + 1];
    *next_color += 2;
    for p in 0..blocks.len() {
        for q in (p + 1)..blocks.len() {
            let c = base[rng.gen_range(0..2usize)];
            for &u in blocks[p] {
                for &v in blocks[q] {
                    out.push((u, v, c));
                }
            }
        }
    }
    for block in blocks {
        substitute(rng, block, next_color, out);
    }
}

/// Uniform random coloring of K_n with colors drawn i.i.d. from 1..=colors.
/// Not rainbow-triangle-free in general; used as a negative control and for
/// oracle equivalence tests.
pub fn gen_uniform_coloring(n: usize, colors: u32, seed: u64) -> Result<EdgeColoredGraph, GenError> {
    if n == 0 || colors == 0 {
        return Err(GenError::InvalidParameter("uniform coloring requires n >= 1 and colors >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    EdgeColoredGraph::complete(n, |_, _| rng.gen_range(1..=colors))
        .map_err(|e| GenError::InvalidParameter(e.to_string()))
}

/// Rainbow-triangle-free graph with minimum color degree >= k, with edges
/// randomly thinned toward that threshold. See `gen_kgood_triangle_free`.
pub fn gen_kgood_triangle_free_with_budget(
    n: usize,
    k: usize,
    seed: u64,
    max_deletions: Option<u64>,
) -> Result<EdgeColoredGraph, GenError> {
    if n < k + 1 {
        return Err(GenError::InvalidParameter(format!(
            "kgood-trianglefree requires n >= k + 1 (got n = {n}, k = {k})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = kgood_base(n, k, &mut rng)?;
    debug_assert!(base.find_rainbow_triangle().is_none());
    let thinned = thin_preserving_color_degree(&base, k, rng.gen(), max_deletions);
    debug_assert!(thinned.min_color_degree() >= k);
    debug_assert!(thinned.find_rainbow_triangle().is_none());
    Ok(thinned)
}

/// As above with an unlimited deletion budget (one full greedy pass).
pub fn gen_kgood_triangle_free(n: usize, k: usize, seed: u64) -> Result<EdgeColoredGraph, GenError> {
    gen_kgood_triangle_free_with_budget(n, k, seed, None)
}

/// Picks a rainbow-triangle-free base coloring whose minimum color degree
/// is at least k.
///
/// Complete Gallai colorings cannot reach beyond floor(log2 n): by Gallai's
/// decomposition every such coloring substitutes blocks into a base complete
/// graph carrying at most 2 colors, which pins the minimum color degree to
/// at most floor(log2 n) (the G_k family is extremal). So for larger k the
/// base switches to a triangle-free one: a complete bipartite graph with a
/// cyclic Latin coloring, where both sides have at least c vertices and
/// every vertex consequently sees all c >= k colors.
fn kgood_base(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<EdgeColoredGraph, GenError> {
    let log2n = usize::BITS as usize - 1 - n.leading_zeros() as usize;
    if k <= log2n {
        for _ in 0..32 {
            let g = gen_gallai_substitution(n, rng.gen())
                .expect("n >= k + 1 >= 1 already validated");
            if g.min_color_degree() >= k {
                return Ok(g);
            }
        }
        if n.is_power_of_two() {
            return gen_gk(log2n as u32);
        }
    }
    if n >= 2 * k {
        return Ok(bipartite_latin(n, k, rng));
    }
    Err(GenError::Infeasible { n, k })
}

/// Complete bipartite graph with parts of size a and n - a (both >= c),
/// edge (i, j) colored ((i + j) mod c) + 1 so each vertex sees all c colors.
/// Bipartite graphs have no triangles at all, hence no rainbow triangles.
fn bipartite_latin(n: usize, k: usize, rng: &mut ChaCha8Rng) -> EdgeColoredGraph {
    let a = rng.gen_range(k..=(n - k));
    let b = n - a;
    let c = rng.gen_range(k..=(a.min(b).min(k + 2)));
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            let color = ((i + j) % c + 1) as u32;
            edges.push((relabel[i], relabel[a + j], color));
        }
    }
    EdgeColoredGraph::new(n, edges).expect("bipartite base is a valid simple graph")
}

/// One greedy pass over a random edge order, deleting an edge whenever both
/// endpoints keep color degree >= k without it. Edge deletion can never
/// create a rainbow triangle, so rainbow-triangle-freeness is preserved.
pub fn thin_preserving_color_degree(
    g: &EdgeColoredGraph,
    k: usize,
    seed: u64,
    max_deletions: Option<u64>,
) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<(usize, usize, Color)> = g.edges().collect();
    order.shuffle(&mut rng);

    // color multiplicity per vertex; color degree = number of nonzero entries
    let mut counts: Vec<BTreeMap<Color, usize>> = vec![BTreeMap::new(); g.vertex_count()];
    for (u, v, c) in g.edges() {
        *counts[u].entry(c).or_insert(0) += 1;
        *counts[v].entry(c).or_insert(0) += 1;
    }

    let mut deleted = 0u64;
    let mut keep: Vec<(usize, usize, u32)> = Vec::with_capacity(order.len());
    for (u, v, c) in order {
        let budget_left = max_deletions.map_or(true, |m| deleted < m);
        let safe = |counts: &Vec<BTreeMap<Color, usize>>, w: usize| {
            counts[w][&c] >= 2 || counts[w].len() - 1 >= k
        };
        if budget_left && safe(&counts, u) && safe(&counts, v) {
            for w in [u, v] {
                let cnt = counts[w].get_mut(&c).unwrap();
                *cnt -= 1;
                if *cnt == 0 {
                    counts[w].remove(&c);
                }
            }
            deleted += 1;
        } else {
            keep.push((u, v, c.0));
        }
    }
    EdgeColoredGraph::new(g.vertex_count(), keep).expect("subgraph of a valid graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gk_small_cases() {
        let g1 = gen_gk(1).unwrap();
        assert_eq!(g1.vertex_count(), 2);
        assert_eq!(g1.edges().collect::<Vec<_>>(), vec![(0, 1, Color(1))]);

        let g2 = gen_gk(2).unwrap();
        let edges: Vec<(usize, usize, u32)> = g2.edges().map(|(u, v, c)| (u, v, c.0)).collect();
        assert_eq!(
            edges,
            vec![(0, 1, 2), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 2)]
        );
    }

    #[test]
    fn gk_rejects_out_of_range_k() {
        assert!(gen_gk(0).is_err());
        assert_eq!(gen_gk(20).unwrap_err(), GenError::TooLarge(20));
    }

    #[test]
    fn gk_color_degree_and_no_rainbow_triangle() {
        for k in 1..=5u32 {
            let g = gen_gk(k).unwrap();
            assert_eq!(g.color_count(), k as usize);
            for v in 0..g.vertex_count() {
                assert_eq!(g.color_degree(v), k as usize, "G_{k} vertex {v}");
            }
            assert_eq!(g.find_rainbow_triangle(), None, "G_{k}");
        }
    }

    #[test]
    fn gk_color_class_sizes() {
        // Each vertex has exactly 2^(k-j) incident edges of color j.
        for k in 1..=5u32 {
            let g = gen_gk(k).unwrap();
            for v in 0..g.vertex_count() {
                let mut per_color = BTreeMap::new();
                for (_, c) in g.neighbors(v) {
                    *per_color.entry(c).or_insert(0usize) += 1;
                }
                for j in 1..=k {
                    assert_eq!(per_color[&Color(j)], 1usize << (k - j));
                }
            }
        }
    }

    #[test]
    fn substitution_is_gallai_complete() {
        for seed in 0..20 {
            let n = 1 + (seed as usize * 7) % 64;
            let g = gen_gallai_substitution(n, seed).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert!(g.is_complete());
            assert_eq!(g.find_rainbow_triangle(), None, "n={n} seed={seed}");
        }
    }

    #[test]
    fn substitution_tiny_cases() {
        let g = gen_gallai_substitution(1, 5).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = gen_gallai_substitution(2, 5).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.color_count(), 1);
    }

    #[test]
    fn substitution_is_deterministic() {
        let a = gen_gallai_substitution(33, 42).unwrap();
        let b = gen_gallai_substitution(33, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn thinning_budget_zero_keeps_base() {
        let base = gen_gk(3).unwrap();
        let same = thin_preserving_color_degree(&base, 3, 7, Some(0));
        assert_eq!(same, base);
    }

    #[test]
    fn thinning_g3_preserves_color_degree() {
        // In G_3 with k = 3 every deletion must keep all color degrees at 3.
        let base = gen_gk(3).unwrap();
        for seed in 0..10 {
            let g = thin_preserving_color_degree(&base, 3, seed, None);
            for v in 0..g.vertex_count() {
                assert_eq!(g.color_degree(v), 3);
            }
            assert_eq!(g.find_rainbow_triangle(), None);
        }
    }

    #[test]
    fn kgood_meets_contract_across_regimes() {
        // Low k: complete Gallai base. High k at small n: bipartite base.
        for (n, k, seed) in [(12, 3, 1u64), (24, 6, 2), (16, 8, 3), (24, 8, 4), (32, 6, 5)] {
            let g = gen_kgood_triangle_free(n, k, seed).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert!(g.min_color_degree() >= k, "n={n} k={k}");
            assert_eq!(g.find_rainbow_triangle(), None, "n={n} k={k}");
        }
    }

    #[test]
    fn kgood_rejects_tiny_n() {
        assert!(gen_kgood_triangle_free(6, 6, 0).is_err());
    }

    #[test]
    fn kgood_infeasible_between_regimes() {
        // n = 13, k = 7: complete Gallai tops out at floor(log2 13) = 3 and
        // the bipartite base needs n >= 14.
        assert_eq!(
            gen_kgood_triangle_free(13, 7, 0).unwrap_err(),
            GenError::Infeasible { n: 13, k: 7 }
        );
    }

    #[test]
    fn uniform_coloring_cases() {
        let g = gen_uniform_coloring(3, 3, 0).unwrap();
        assert!(g.is_complete());
        // Over a few seeds, K_3 with 3 colors realizes both rainbow and
        // non-rainbow triangles.
        let mut saw_rainbow = false;
        let mut saw_plain = false;
        for seed in 0..64 {
            let g = gen_uniform_coloring(3, 3, seed).unwrap();
            match g.find_rainbow_triangle() {
                Some(_) => saw_rainbow = true,
                None => saw_plain = true,
            }
        }
        assert!(saw_rainbow && saw_plain);
    }

    #[test]
    fn gen_spec_dispatch_and_display() {
        let spec = GenSpec::KGoodTriangleFree { n: 16, k: 6, seed: 9 };
        assert_eq!(spec.to_string(), "kgood-trianglefree n=16 k=6 seed=9");
        let g = spec.generate().unwrap();
        assert!(g.min_color_degree() >= 6);
    }
}
