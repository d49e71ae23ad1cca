//! Exhaustive check of the 7-vertex bound: a `K₄`-free graph with a
//! triangle, a 2-edge matching avoiding that triangle, and no two
//! vertex-disjoint triangles has fewer than `2^12` orientations without a
//! cyclic triangle.

use serde::Serialize;

use crate::count::Count;
use crate::enumerate::generate_all;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::orientation::count_orientations;

const ORDER: usize = 7;
const CAP: u64 = 1 << 12;

#[derive(Debug, Clone, Serialize)]
pub struct QualifyingGraph {
    pub graph6: String,
    pub count: Count,
    /// Every triangle, not just some triangle, admits such a matching.
    pub universal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaClaimReport {
    pub classes: usize,
    /// Classes meeting the hypotheses for some triangle and matching.
    pub qualifying: usize,
    /// Classes meeting them for every triangle.
    pub qualifying_universal: usize,
    pub max_count: Count,
    pub max_graph6: String,
    pub violations: Vec<QualifyingGraph>,
    /// Classes satisfying the existential reading but not the universal one
    /// whose count reaches the bound (expected empty).
    pub existential_only_violations: Vec<QualifyingGraph>,
    pub graphs: Vec<QualifyingGraph>,
    pub pass: bool,
}

fn triangle_sets(g: &Graph) -> Vec<VertexSet> {
    g.triangles_of()
        .into_iter()
        .map(|(a, b, c)| VertexSet::from_vertices([a, b, c]))
        .collect()
}

/// Whether the vertices outside `t` span two disjoint edges.
fn has_matching_avoiding(g: &Graph, t: VertexSet) -> bool {
    let rest: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !t.contains(u) && !t.contains(v))
        .collect();
    rest.iter().enumerate().any(|(i, &(a, b))| {
        rest[i + 1..]
            .iter()
            .any(|&(c, d)| VertexSet::from_vertices([a, b]).is_disjoint(VertexSet::from_vertices([c, d])))
    })
}

/// `(existential, universal)` readings of the hypotheses.
pub fn hypotheses(g: &Graph) -> (bool, bool) {
    if g.contains_clique(4) {
        return (false, false);
    }
    let tris = triangle_sets(g);
    if tris.is_empty() {
        return (false, false);
    }
    let disjoint_pair = tris
        .iter()
        .enumerate()
        .any(|(i, a)| tris[i + 1..].iter().any(|b| a.is_disjoint(*b)));
    if disjoint_pair {
        return (false, false);
    }
    let ok: Vec<bool> = tris.iter().map(|&t| has_matching_avoiding(g, t)).collect();
    (ok.iter().any(|&b| b), ok.iter().all(|&b| b))
}

pub fn verify_lemma_claim() -> Result<LemmaClaimReport> {
    let classes = generate_all(ORDER)?;
    let cap = Count::from(CAP);
    let mut graphs = Vec::new();
    for g in &classes {
        let (exists, forall) = hypotheses(g);
        if !exists {
            continue;
        }
        graphs.push(QualifyingGraph {
            graph6: emit_graph6(g),
            count: count_orientations(g),
            universal: forall,
        });
    }
    let top = graphs
        .iter()
        .max_by(|a, b| a.count.cmp(&b.count).then(b.graph6.cmp(&a.graph6)))
        .cloned();
    let violations: Vec<QualifyingGraph> = graphs.iter().filter(|q| q.count >= cap).cloned().collect();
    let existential_only_violations = violations.iter().filter(|q| !q.universal).cloned().collect();
    let qualifying = graphs.len();
    Ok(LemmaClaimReport {
        classes: classes.len(),
        qualifying,
        qualifying_universal: graphs.iter().filter(|q| q.universal).count(),
        max_count: top.as_ref().map(|q| q.count.clone()).unwrap_or_default(),
        max_graph6: top.map(|q| q.graph6).unwrap_or_default(),
        pass: violations.is_empty() && qualifying > 0,
        violations,
        existential_only_violations,
        graphs,
    })
}
