//! Extension counts between two disjoint vertex sets.
//!
//! For disjoint `A` and `B`, let `T = G[A] ∪ G[B]`. The extension count is
//! the maximum, over cyclic-triangle-free orientations of `T`, of the number
//! of orientations of the cross edges `E(A, B)` that complete it to a
//! cyclic-triangle-free orientation of `G[A ∪ B]`.

use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::orientation::{enumerate_orientations, Completer, Orientation};

/// Upper limit on `|E(T)| + |E(A, B)|` for exhaustive evaluation.
pub const EXT_EDGE_LIMIT: usize = 30;

/// A host graph with two disjoint nonempty vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtConfig {
    g: Graph,
    a: VertexSet,
    b: VertexSet,
}

impl ExtConfig {
    pub fn new(g: Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        g.edges_between(a, b)?;
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(ExtConfig { g, a, b })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn a(&self) -> VertexSet {
        self.a
    }

    pub fn b(&self) -> VertexSet {
        self.b
    }

    /// The same configuration with `A` and `B` exchanged.
    pub fn swapped(&self) -> Self {
        ExtConfig {
            g: self.g.clone(),
            a: self.b,
            b: self.a,
        }
    }

    /// `T = G[A] ∪ G[B]` as a spanning subgraph, so labels are unchanged.
    pub fn t_graph(&self) -> Graph {
        let mut idx = self.g.edges_within(self.a).indices().to_vec();
        idx.extend_from_slice(self.g.edges_within(self.b).indices());
        let edges = EdgeSet::new(idx, self.g.edge_count()).expect("indices come from the graph");
        self.g.spanning_subgraph(&edges)
    }

    /// `G[A ∪ B]` as a spanning subgraph.
    pub fn host(&self) -> Graph {
        self.g
            .spanning_subgraph(&self.g.edges_within(self.a.union(self.b)))
    }

    /// Number of cross edges `|E(A, B)|`.
    pub fn cross_edge_count(&self) -> usize {
        self.g.edges_between(self.a, self.b).expect("validated").len()
    }

    fn check_size(&self, t: &Graph) -> Result<()> {
        let total = t.edge_count() + self.cross_edge_count();
        if total > EXT_EDGE_LIMIT {
            return Err(Error::Guard {
                what: "|E(T)| + |E(A,B)|",
                value: total,
                limit: EXT_EDGE_LIMIT,
            });
        }
        Ok(())
    }
}

/// Maximum extension count with the lexicographically smallest orientation
/// of `T` attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtResult {
    pub value: Count,
    /// Directions over the edges of [`ExtResult::t_graph`].
    pub witness: Orientation,
    pub t_graph: Graph,
}

impl ExtResult {
    pub fn witness_arcs(&self) -> Vec<(usize, usize)> {
        self.witness.arcs(&self.t_graph).collect()
    }
}

/// Number of orientations of `E(A, B)` compatible with `t_orient`, an
/// orientation of the edges of [`ExtConfig::t_graph`].
pub fn compatible_count(cfg: &ExtConfig, t_orient: &Orientation) -> Result<Count> {
    let t = cfg.t_graph();
    if t_orient.len() != t.edge_count() {
        return Err(Error::OrientationLength {
            expected: t.edge_count(),
            found: t_orient.len(),
        });
    }
    if let Some(tri) = t_orient.cyclic_triangle(&t) {
        return Err(Error::CyclicTriangle(tri));
    }
    let seeds: Vec<_> = t_orient.arcs(&t).collect();
    Ok(Completer::new(&cfg.host()).count_with_arcs(&seeds))
}

/// Exhaustive extension count.
pub fn ext(cfg: &ExtConfig) -> Result<ExtResult> {
    let t = cfg.t_graph();
    cfg.check_size(&t)?;
    let mut completer = Completer::new(&cfg.host());
    let mut best: Option<(Count, Orientation)> = None;
    let mut seeds = Vec::with_capacity(t.edge_count());
    // Visits come in lexicographic order, so a strict improvement test keeps
    // the smallest witness among ties.
    enumerate_orientations(&t, |o| {
        seeds.clear();
        seeds.extend(o.arcs(&t));
        let c = completer.count_with_arcs(&seeds);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, o.clone()));
        }
    });
    let (value, witness) = best.expect("every graph has an acyclic orientation");
    Ok(ExtResult {
        value,
        witness,
        t_graph: t,
    })
}

/// The vertex ordering of a transitive tournament: every edge of `o` points
/// from an earlier vertex to a later one. `g` must be complete.
pub fn transitive_ordering(g: &Graph, o: &Orientation) -> Result<Vec<usize>> {
    if !g.is_clique(g.vertices()) {
        return Err(Error::NotAClique);
    }
    if o.len() != g.edge_count() {
        return Err(Error::OrientationLength {
            expected: g.edge_count(),
            found: o.len(),
        });
    }
    if let Some(tri) = o.cyclic_triangle(g) {
        return Err(Error::CyclicTriangle(tri));
    }
    // In a transitive tournament the in-degrees are exactly 0, 1, ..., n-1.
    let mut order = vec![usize::MAX; g.n()];
    let mut indeg = vec![0usize; g.n()];
    for (_, head) in o.arcs(g) {
        indeg[head] += 1;
    }
    for (v, &d) in indeg.iter().enumerate() {
        order[d] = v;
    }
    Ok(order)
}
