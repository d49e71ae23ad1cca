//! Canonical forms of small graphs.
//!
//! The form is the lexicographically smallest upper-triangle bitstring
//! (column order, as in graph6) over every labelling compatible with the
//! ordered partition produced by colour refinement. Because that partition
//! is itself labelling-independent, the minimum is an isomorphism invariant.
//! Within a cell, only candidates that minimise the next column are explored,
//! and of two interchangeable twins only one is tried.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::graph6::emit_graph6;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 10;

/// Canonical upper-triangle bitstring. The first bit, `x(0,1)`, is the most
/// significant of the `n(n-1)/2` low bits of `bits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The bitstring as `0`/`1` characters.
    pub fn bit_string(&self) -> String {
        let len = pair_count(self.n);
        (0..len)
            .map(|k| if self.bits >> (len - 1 - k) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// The graph under its canonical labelling.
    pub fn to_graph(&self) -> Graph {
        let len = pair_count(self.n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(self.n, edges).expect("canonical bits describe a simple graph")
    }

    pub fn graph6(&self) -> String {
        emit_graph6(&self.to_graph())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.graph6())
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Column-order bits of `g` under the labelling `order[position] = vertex`.
fn bits_under(g: &Graph, order: &[usize]) -> u64 {
    let adj = g.adjacency();
    let mut bits = 0u64;
    for j in 1..order.len() {
        for &u in &order[..j] {
            bits = bits << 1 | (adj[u] >> order[j] & 1);
        }
    }
    bits
}

/// Stable colour refinement starting from degrees. Returns colour classes
/// in increasing colour order.
pub fn refined_cells(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let adj = g.adjacency();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = Bits(adj[v]).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![0u64; classes];
    for (v, &c) in colour.iter().enumerate() {
        cells[c] |= 1 << v;
    }
    cells
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    total: usize,
    /// Cell mask for every position.
    slot: Vec<u64>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn column(&self, pos: usize, v: usize) -> u64 {
        self.order[..pos]
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | (self.adj[u] >> v & 1))
    }

    fn dfs(&mut self, pos: usize, prefix: u64, used: u64) {
        if let Some((best, _)) = &self.best {
            let len = pair_count(pos);
            match prefix.cmp(&(best >> (self.total - len))) {
                Ordering::Greater => return,
                Ordering::Less if pos == self.n => {}
                Ordering::Equal if pos == self.n => return,
                _ => {}
            }
        }
        if pos == self.n {
            self.best = Some((prefix, self.order.clone()));
            return;
        }
        let avail = self.slot[pos] & !used;
        let mut min_col = u64::MAX;
        let mut ties = 0u64;
        for v in Bits(avail) {
            let c = self.column(pos, v);
            match c.cmp(&min_col) {
                Ordering::Less => {
                    min_col = c;
                    ties = 1 << v;
                }
                Ordering::Equal => ties |= 1 << v,
                Ordering::Greater => {}
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(ties) {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            self.order.push(v);
            self.dfs(pos + 1, prefix << pos | min_col, used | 1 << v);
            self.order.pop();
        }
    }

    fn twins(&self, v: usize, w: usize) -> bool {
        self.adj[v] & !(1 << w) == self.adj[w] & !(1 << v)
    }
}

/// Canonical form and a labelling attaining it: `order[position] = vertex`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertices for canonical form",
            value: n,
            limit: CANON_MAX_VERTICES,
        });
    }
    let slot = refined_cells(g)
        .into_iter()
        .flat_map(|cell| std::iter::repeat_n(cell, cell.count_ones() as usize))
        .collect();
    let mut search = Search {
        adj: g.adjacency(),
        n,
        total: pair_count(n),
        slot,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.dfs(0, 0, 0);
    let (bits, order) = search.best.expect("some labelling exists");
    Ok((CanonicalForm { n, bits }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(f, _)| f)
}

/// Minimum of the bitstring over all `n!` labellings, by brute force.
/// Used to validate [`canonical_form`] on small orders.
pub fn brute_force_min_form(g: &Graph) -> Result<CanonicalForm> {
    const LIMIT: usize = 8;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::Guard {
            what: "vertices for brute-force canonical form",
            value: n,
            limit: LIMIT,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = bits_under(g, &order);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let k = if i % 2 == 0 { 0 } else { c[i] };
            order.swap(k, i);
            best = best.min(bits_under(g, &order));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalForm { n, bits: best })
}

/// Number of automorphisms, by extending partial maps that preserve
/// adjacency and refined colours.
pub fn automorphism_count(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertices for automorphism count",
            value: n,
            limit: CANON_MAX_VERTICES,
        });
    }
    let cells = refined_cells(g);
    let cell_of: Vec<u64> = (0..n)
        .map(|v| *cells.iter().find(|c| *c >> v & 1 == 1).expect("covered"))
        .collect();
    fn extend(g: &Graph, cell_of: &[u64], image: &mut Vec<usize>, used: u64) -> u64 {
        let v = image.len();
        if v == g.n() {
            return 1;
        }
        let adj = g.adjacency();
        let mut total = 0;
        for w in Bits(cell_of[v] & !used) {
            let ok = image
                .iter()
                .enumerate()
                .all(|(u, &iu)| (adj[u] >> v & 1) == (adj[iu] >> w & 1));
            if ok {
                image.push(w);
                total += extend(g, cell_of, image, used | 1 << w);
                image.pop();
            }
        }
        total
    }
    Ok(extend(g, &cell_of, &mut Vec::with_capacity(n), 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_labellings_agree() {
        let k3 = Graph::complete(3).unwrap();
        let f = canonical_form(&k3).unwrap();
        for perm in [[0, 1, 2], [1, 2, 0], [2, 1, 0]] {
            assert_eq!(canonical_form(&k3.relabel(&perm).unwrap()).unwrap(), f);
        }
        assert_eq!(f.bit_string(), "111");
    }

    #[test]
    fn paths_agree() {
        let abc = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let bac = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&abc).unwrap(), canonical_form(&bac).unwrap());
        assert_eq!(canonical_form(&abc).unwrap().bit_string(), "011");
    }

    #[test]
    fn k44_versus_two_k4() {
        let k44 = Graph::complete_multipartite(&[4, 4]).unwrap();
        let relabelled = k44.relabel(&[3, 6, 0, 5, 1, 7, 2, 4]).unwrap();
        let two_k4 = Graph::complete(4).unwrap().disjoint_union(&Graph::complete(4).unwrap()).unwrap();
        let f = canonical_form(&k44).unwrap();
        assert_eq!(canonical_form(&relabelled).unwrap(), f);
        assert_ne!(canonical_form(&two_k4).unwrap(), f);
        assert_eq!(f.to_graph().edge_count(), 16);
    }

    #[test]
    fn labeling_realises_form() {
        let g = Graph::from_edges(6, [(0, 3), (3, 5), (5, 1), (1, 2), (2, 4), (0, 5)]).unwrap();
        let (f, order) = canonical_labeling(&g).unwrap();
        assert_eq!(bits_under(&g, &order), f.bits());
        let mut perm = vec![0; 6];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(g.relabel(&perm).unwrap(), f.to_graph());
    }

    #[test]
    fn form_round_trips_through_graph() {
        let g = Graph::cycle(7).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        assert_eq!(f.n(), 7);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            canonical_form(&Graph::empty(11).unwrap()),
            Err(Error::Guard { .. })
        ));
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap().bits(), 0);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Graph::complete(5).unwrap()).unwrap(), 120);
        assert_eq!(automorphism_count(&Graph::cycle(6).unwrap()).unwrap(), 12);
        assert_eq!(automorphism_count(&Graph::path(4).unwrap()).unwrap(), 2);
        let k44 = Graph::complete_multipartite(&[4, 4]).unwrap();
        assert_eq!(automorphism_count(&k44).unwrap(), 2 * 24 * 24);
    }

    /// At n ≤ 5 the pruned form partitions all labelled graphs exactly as the
    /// brute-force minimum over every permutation does.
    #[test]
    fn agrees_with_brute_force_partition() {
        use std::collections::HashMap;
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut pairing: HashMap<CanonicalForm, CanonicalForm> = HashMap::new();
            let mut reverse: HashMap<CanonicalForm, CanonicalForm> = HashMap::new();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let fast = canonical_form(&g).unwrap();
                let slow = brute_force_min_form(&g).unwrap();
                assert_eq!(*pairing.entry(fast).or_insert(slow), slow);
                assert_eq!(*reverse.entry(slow).or_insert(fast), fast);
            }
        }
    }
}
