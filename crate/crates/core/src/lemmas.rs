//! Checkers for the two structural facts about spokes from the start of a
//! rainbow path of length >= 5 in a rainbow-triangle-free graph.
//!
//! Both concern edges u_0 u_i from the path's first vertex back into the
//! path ("spokes") whose colors do not appear on the path. The first: for
//! two such spokes u_0 u_i and u_0 u_j with distinct colors and i + 1 < j,
//! the stretch between them must contain a missing spoke or two spokes
//! sharing a color. The second: a single such spoke forces i >= 3, and the
//! prefix before it must contain a missing spoke or a repeated spoke color.
//! Neither conclusion needs the path to be longest — only rainbow and long
//! enough — so any search-produced path qualifies.

use crate::graph::{EdgeColoredGraph, VertexPath};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LemmaError {
    #[error("index {index} out of range for a path of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("indices must satisfy i < j (got i = {i}, j = {j})")]
    BadIndexOrder { i: usize, j: usize },
}

/// How the conclusion is realized, when it holds.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum LemmaWitness {
    /// The spoke u_0 u_s does not exist.
    MissingSpoke { s: usize },
    /// The spokes u_0 u_s and u_0 u_t share a color.
    RepeatedSpokes { s: usize, t: usize },
}

/// `applicable` reflects the lemma's hypotheses; `conclusion_holds` and
/// `witness` are only meaningful when it is true. On rainbow-triangle-free
/// input an applicable check must conclude true — a false conclusion there
/// disproves the implementation, not the lemma.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaOutcome {
    pub applicable: bool,
    pub conclusion_holds: bool,
    pub witness: Option<LemmaWitness>,
}

impl LemmaOutcome {
    fn inapplicable() -> Self {
        Self { applicable: false, conclusion_holds: false, witness: None }
    }
}

/// Two-spoke check (i and j with 2 <= i, i + 1 < j <= l): between them there
/// is a missing spoke (i < s < j) or a repeated spoke color (i < s < t <= j).
pub fn check_lemma1(
    g: &EdgeColoredGraph,
    p: &VertexPath,
    i: usize,
    j: usize,
) -> Result<LemmaOutcome, LemmaError> {
    let l = p.len();
    for index in [i, j] {
        if index < 1 || index > l {
            return Err(LemmaError::IndexOutOfRange { index, len: l });
        }
    }
    if i >= j {
        return Err(LemmaError::BadIndexOrder { i, j });
    }

    let verts = p.vertices();
    let u0 = verts[0];
    let path_colors = p.color_set();
    let applicable = p.is_rainbow() && l >= 5 && i >= 2 && i + 1 < j && {
        match (g.color(u0, verts[i]), g.color(u0, verts[j])) {
            (Some(ci), Some(cj)) => {
                ci != cj && !path_colors.contains(&ci) && !path_colors.contains(&cj)
            }
            _ => false,
        }
    };
    if !applicable {
        return Ok(LemmaOutcome::inapplicable());
    }

    for s in (i + 1)..j {
        if !g.has_edge(u0, verts[s]) {
            return Ok(LemmaOutcome {
                applicable: true,
                conclusion_holds: true,
                witness: Some(LemmaWitness::MissingSpoke { s }),
            });
        }
    }
    for s in (i + 1)..j {
        for t in (s + 1)..=j {
            if g.color(u0, verts[s]) == g.color(u0, verts[t]) {
                return Ok(LemmaOutcome {
                    applicable: true,
                    conclusion_holds: true,
                    witness: Some(LemmaWitness::RepeatedSpokes { s, t }),
                });
            }
        }
    }
    Ok(LemmaOutcome { applicable: true, conclusion_holds: false, witness: None })
}

/// Single-spoke check: an off-path colored spoke u_0 u_i forces i >= 3 plus
/// a missing spoke (2 <= s < i) or a repeated spoke color (2 <= s < t <= i).
pub fn check_lemma2(
    g: &EdgeColoredGraph,
    p: &VertexPath,
    i: usize,
) -> Result<LemmaOutcome, LemmaError> {
    let l = p.len();
    if i < 1 || i > l {
        return Err(LemmaError::IndexOutOfRange { index: i, len: l });
    }

    let verts = p.vertices();
    let u0 = verts[0];
    let path_colors = p.color_set();
    let applicable = p.is_rainbow()
        && l >= 5
        && g.color(u0, verts[i]).is_some_and(|c| !path_colors.contains(&c));
    if !applicable {
        return Ok(LemmaOutcome::inapplicable());
    }

    if i < 3 {
        return Ok(LemmaOutcome { applicable: true, conclusion_holds: false, witness: None });
    }
    for s in 2..i {
        if !g.has_edge(u0, verts[s]) {
            return Ok(LemmaOutcome {
                applicable: true,
                conclusion_holds: true,
                witness: Some(LemmaWitness::MissingSpoke { s }),
            });
        }
    }
    for s in 2..i {
        for t in (s + 1)..=i {
            match (g.color(u0, verts[s]), g.color(u0, verts[t])) {
                (Some(cs), Some(ct)) if cs == ct => {
                    return Ok(LemmaOutcome {
                        applicable: true,
                        conclusion_holds: true,
                        witness: Some(LemmaWitness::RepeatedSpokes { s, t }),
                    });
                }
                _ => {}
            }
        }
    }
    Ok(LemmaOutcome { applicable: true, conclusion_holds: false, witness: None })
}

/// Runs both checks over every qualifying index tuple of a path, feeding a
/// pass/violation tally. Returns (tuples checked, violations).
pub fn check_all_lemma_tuples(g: &EdgeColoredGraph, p: &VertexPath) -> (u64, u64) {
    let l = p.len();
    if !p.is_rainbow() || l < 5 {
        return (0, 0);
    }
    let mut checked = 0;
    let mut violations = 0;
    for i in 1..=l {
        let out = check_lemma2(g, p, i).expect("index in range");
        if out.applicable {
            checked += 1;
            if !out.conclusion_holds {
                violations += 1;
            }
        }
        for j in (i + 2)..=l {
            let out = check_lemma1(g, p, i, j).expect("indices in range");
            if out.applicable {
                checked += 1;
                if !out.conclusion_holds {
                    violations += 1;
                }
            }
        }
    }
    (checked, violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeColoredGraph;

    /// Path 0-1-...-len colored 1..=len, plus the given spokes from u_0.
    fn path_with_spokes(len: usize, spokes: &[(usize, u32)]) -> (EdgeColoredGraph, VertexPath) {
        let mut edges: Vec<(usize, usize, u32)> =
            (0..len).map(|i| (i, i + 1, i as u32 + 1)).collect();
        for &(target, color) in spokes {
            edges.push((0, target, color));
        }
        let g = EdgeColoredGraph::new(len + 1, edges).unwrap();
        let p = VertexPath::new(&g, (0..=len).collect()).unwrap();
        (g, p)
    }

    #[test]
    fn short_paths_are_inapplicable() {
        let (g, p) = path_with_spokes(4, &[(2, 10), (4, 11)]);
        let out = check_lemma1(&g, &p, 2, 4).unwrap();
        assert!(!out.applicable);
    }

    #[test]
    fn lemma1_missing_spoke_branch() {
        // Spokes at 2 and 5 with distinct off-path colors; no spoke at 3, 4.
        let (g, p) = path_with_spokes(6, &[(2, 10), (5, 11)]);
        let out = check_lemma1(&g, &p, 2, 5).unwrap();
        assert!(out.applicable);
        assert!(out.conclusion_holds);
        assert_eq!(out.witness, Some(LemmaWitness::MissingSpoke { s: 3 }));
    }

    #[test]
    fn lemma1_repeated_color_branch() {
        let (g, p) = path_with_spokes(6, &[(2, 10), (5, 11), (3, 12), (4, 12)]);
        let out = check_lemma1(&g, &p, 2, 5).unwrap();
        assert!(out.conclusion_holds);
        assert_eq!(out.witness, Some(LemmaWitness::RepeatedSpokes { s: 3, t: 4 }));
    }

    #[test]
    fn lemma1_needs_the_triangle_free_hypothesis() {
        // The proof's contradiction pattern: u_0 adjacent to everything in
        // (i, j] with pairwise-distinct off-path colors. The conclusion
        // fails, and the graph indeed contains a rainbow triangle.
        let (g, p) = path_with_spokes(6, &[(2, 10), (5, 11), (3, 12), (4, 13)]);
        let out = check_lemma1(&g, &p, 2, 5).unwrap();
        assert!(out.applicable);
        assert!(!out.conclusion_holds);
        assert!(g.find_rainbow_triangle().is_some());
    }

    #[test]
    fn lemma1_rejects_bad_indices() {
        let (g, p) = path_with_spokes(6, &[(2, 10), (5, 11)]);
        assert_eq!(
            check_lemma1(&g, &p, 0, 5).unwrap_err(),
            LemmaError::IndexOutOfRange { index: 0, len: 6 }
        );
        assert_eq!(check_lemma1(&g, &p, 5, 2).unwrap_err(), LemmaError::BadIndexOrder { i: 5, j: 2 });
    }

    #[test]
    fn lemma1_off_path_color_requirement() {
        // Spoke color 1 appears on the path: not applicable.
        let (g, p) = path_with_spokes(6, &[(2, 1), (5, 11)]);
        assert!(!check_lemma1(&g, &p, 2, 5).unwrap().applicable);
    }

    #[test]
    fn lemma2_missing_spoke_branch() {
        // u_0 u_4 off-path, u_0 u_2 missing.
        let (g, p) = path_with_spokes(5, &[(4, 9), (3, 3)]);
        let out = check_lemma2(&g, &p, 4).unwrap();
        assert!(out.applicable);
        assert!(out.conclusion_holds);
        assert_eq!(out.witness, Some(LemmaWitness::MissingSpoke { s: 2 }));
    }

    #[test]
    fn lemma2_small_i_fails_the_conclusion() {
        // An off-path spoke at i = 2 can only exist next to a rainbow
        // triangle; the checker reports the conclusion as false.
        let (g, p) = path_with_spokes(5, &[(2, 9)]);
        let out = check_lemma2(&g, &p, 2).unwrap();
        assert!(out.applicable);
        assert!(!out.conclusion_holds);
        assert!(g.find_rainbow_triangle().is_some());
    }

    #[test]
    fn tuple_sweep_flags_violations_only_next_to_rainbow_triangles() {
        let (g, p) = path_with_spokes(6, &[(2, 10), (5, 11)]);
        let (checked, violations) = check_all_lemma_tuples(&g, &p);
        assert!(checked >= 3);
        // The off-path spoke at i = 2 violates the single-spoke conclusion,
        // and indeed the gadget contains a rainbow triangle.
        assert!(violations >= 1);
        assert!(g.find_rainbow_triangle().is_some());
    }

    #[test]
    fn tuple_sweep_is_clean_on_triangle_free_instances() {
        let g = crate::gen::gen_kgood_triangle_free(14, 6, 3).unwrap();
        let out = crate::oracle::longest_rainbow_path(
            &g,
            None,
            &crate::oracle::SearchBudget::unlimited(),
        );
        let (_, violations) = check_all_lemma_tuples(&g, &out.path);
        assert_eq!(violations, 0);
    }
}
