//! Simple undirected graphs on at most 64 vertices with bitset adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices packed into one machine word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The first `n` vertices.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    /// The half-open range `lo..hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet(Self::full(hi).0 & !Self::full(lo).0)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// Strictly increasing indices into [`Graph::edges`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    pub fn new(mut indices: Vec<usize>, edge_count: usize) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&last) = indices.last() {
            if last >= edge_count {
                return Err(Error::Invalid(format!(
                    "edge index {last} out of range for {edge_count} edges"
                )));
            }
        }
        Ok(EdgeSet(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }
}

/// An undirected simple graph. Immutable once built.
///
/// `edges` lists every pair `(u, v)` with `u < v` in lexicographic order; edge
/// indices everywhere else in the crate refer to positions in this list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        })
    }

    /// Builds from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n).0;
        for (u, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in Bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::Invalid(format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Self::from_symmetric(adj))
    }

    fn from_symmetric(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in Bits(row >> u >> 1) {
                edges.push((u, u + 1 + v));
            }
        }
        Graph { n, adj, edges }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_symmetric(adj))
    }

    pub fn complete(r: usize) -> Result<Self> {
        Self::complete_multipartite(&vec![1; r])
    }

    /// Consecutive blocks of the given sizes, joined completely across blocks.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n).0;
        let mut adj = vec![0u64; n];
        let mut start = 0;
        for &p in parts {
            let block = VertexSet::range(start, start + p).0;
            for row in &mut adj[start..start + p] {
                *row = full & !block;
            }
            start += p;
        }
        Ok(Self::from_symmetric(adj))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Invalid(format!("cycle needs 3 vertices, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Vertex-disjoint union; `other` is relabelled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_edges(n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Invalid(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        Self::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            let vertex = s.difference(self.vertices()).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing order of the
    /// original labels. The returned map sends new labels to original ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map: Vec<usize> = s.iter().collect();
        let adj = map
            .iter()
            .map(|&u| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u] >> v & 1 == 1)
                    .fold(0u64, |row, (j, _)| row | 1 << j)
            })
            .collect();
        Ok((Self::from_symmetric(adj), map))
    }

    /// All triangles `(a, b, c)` with `a < b < c`, lexicographically.
    pub fn triangles_of(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            let common = self.adj[a] & self.adj[b] & !VertexSet::full(b + 1).0;
            out.extend(Bits(common).map(|c| (a, b, c)));
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| self.adj[a] & self.adj[b] == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    /// Size of a maximum clique.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        self.expand_cliques(0, self.vertices().0, &mut best);
        best
    }

    fn expand_cliques(&self, size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.expand_cliques(size + 1, cand & self.adj[v], best);
        }
        *best = (*best).max(size);
    }

    /// Whether some `k` vertices are pairwise adjacent.
    pub fn contains_clique(&self, k: usize) -> bool {
        fn search(g: &Graph, k: usize, cand: u64) -> bool {
            if k == 0 {
                return true;
            }
            if (cand.count_ones() as usize) < k {
                return false;
            }
            Bits(cand).any(|v| search(g, k - 1, cand & g.adj[v] & !VertexSet::full(v + 1).0))
        }
        search(self, k, self.vertices().0)
    }

    /// Edges with one endpoint in `a` and the other in `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> Result<EdgeSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        if !a.is_disjoint(b) {
            return Err(Error::Overlap(a.intersection(b).0));
        }
        let idx = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| {
                (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))
            })
            .map(|(i, _)| i)
            .collect();
        Ok(EdgeSet(idx))
    }

    /// `|N(x) ∩ N(y) ∩ within|`.
    pub fn common_neighbors(&self, x: usize, y: usize, within: VertexSet) -> usize {
        debug_assert_ne!(x, y);
        (self.adj[x] & self.adj[y] & within.0).count_ones() as usize
    }

    /// Edge indices of the subgraph induced by `s`.
    pub fn edges_within(&self, s: VertexSet) -> EdgeSet {
        EdgeSet(
            self.edges
                .iter()
                .enumerate()
                .filter(|&(_, &(u, v))| s.contains(u) && s.contains(v))
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn spanning_subgraph(&self, edges: &EdgeSet) -> Graph {
        let mut adj = vec![0u64; self.n];
        for &i in edges.indices() {
            let (u, v) = self.edges[i];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self::from_symmetric(adj)
    }

    /// Same vertex set with `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Self::from_symmetric(adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus() -> Graph {
        // u1=0, u2=1, v1=2, v2=3; u2v2 missing
        Graph::from_edges(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn multipartite_edge_counts() {
        assert_eq!(Graph::complete_multipartite(&[1, 1, 1]).unwrap().edge_count(), 3);
        assert_eq!(Graph::complete_multipartite(&[4, 4]).unwrap().edge_count(), 16);
        assert_eq!(Graph::complete_multipartite(&[1, 2, 2]).unwrap().edge_count(), 8);
        let empty = Graph::complete_multipartite(&[]).unwrap();
        assert_eq!((empty.n(), empty.edge_count()), (0, 0));
        assert_eq!(Graph::complete_multipartite(&[2, 0]), Err(Error::ZeroPart));
        assert!(Graph::complete_multipartite(&[40, 25]).is_err());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, [(3, 1), (2, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(g.edge_index(3, 1), Some(2));
        assert_eq!(g.edge_index(0, 3), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::from_adjacency(vec![0b10, 0]).is_err());
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5).unwrap();
        let (h, map) = k5.induced_subgraph(VertexSet::from_vertices([0, 2, 4])).unwrap();
        assert_eq!(h, Graph::complete(3).unwrap());
        assert_eq!(map, vec![0, 2, 4]);

        let k44 = Graph::complete_multipartite(&[4, 4]).unwrap();
        let (side, _) = k44.induced_subgraph(VertexSet::range(0, 4)).unwrap();
        assert_eq!(side, Graph::empty(4).unwrap());

        let (all, map) = k44.induced_subgraph(k44.vertices()).unwrap();
        assert_eq!(all, k44);
        assert_eq!(map, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(Graph::complete(4).unwrap().triangles_of().len(), 4);
        assert!(Graph::complete_multipartite(&[4, 4]).unwrap().triangles_of().is_empty());
        // K_{1,2,2}: the hub with one vertex from each side, 2*2 choices.
        let t = Graph::complete_multipartite(&[1, 2, 2]).unwrap().triangles_of();
        assert_eq!(t, vec![(0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 4)]);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(Graph::complete(7).unwrap().clique_number(), 7);
        assert_eq!(Graph::complete_multipartite(&[4, 4]).unwrap().clique_number(), 2);
        assert_eq!(Graph::complete_multipartite(&[1, 3, 3]).unwrap().clique_number(), 3);
        assert_eq!(Graph::empty(5).unwrap().clique_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().clique_number(), 0);
        assert!(Graph::complete(4).unwrap().contains_clique(4));
        assert!(!k4_minus().contains_clique(4));
    }

    #[test]
    fn cross_edges() {
        let k44 = Graph::complete_multipartite(&[4, 4]).unwrap();
        let e = k44
            .edges_between(VertexSet::range(0, 4), VertexSet::range(4, 8))
            .unwrap();
        assert_eq!(e.len(), 16);

        let two = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert!(two
            .edges_between(VertexSet::range(0, 3), VertexSet::range(3, 6))
            .unwrap()
            .is_empty());

        let g = k4_minus();
        let a = VertexSet::from_vertices([0, 1]);
        let b = VertexSet::from_vertices([2, 3]);
        assert_eq!(g.edges_between(a, b).unwrap().len(), 3);
        assert_eq!(
            g.edges_between(a, VertexSet::from_vertices([1, 2])),
            Err(Error::Overlap(0b10))
        );
    }

    #[test]
    fn common_neighbor_counts() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.common_neighbors(0, 1, VertexSet::from_vertices([2, 3, 4])), 3);
        let k44 = Graph::complete_multipartite(&[4, 4]).unwrap();
        assert_eq!(k44.common_neighbors(0, 1, VertexSet::range(4, 8)), 4);
        assert_eq!(k4_minus().common_neighbors(1, 3, VertexSet::from_vertices([0, 2])), 2);
    }

    #[test]
    fn relabel_and_union() {
        let p = Graph::path(3).unwrap();
        let q = p.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(q.edges(), &[(0, 1), (0, 2)]);
        assert!(p.relabel(&[0, 0, 1]).is_err());
        let u = p.disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(u.edges(), &[(0, 1), (1, 2), (3, 4)]);
    }
}
