//! Orientations of a [`Graph`] in which every triangle is transitive.
//!
//! The counting engine is a depth-first search over the edges in a fixed
//! triangle-closing order. Every assignment is propagated with the triangle
//! rule (a directed 2-path forces its closing edge), and an unset edge whose
//! triangles are already fully determined contributes a factor of two without
//! branching.

use num_bigint::BigUint;
use num_traits::One;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Upper limit on edges for the brute-force oracle.
pub const ORACLE_EDGE_LIMIT: usize = 30;

/// A direction for every edge: `false` points from the lower label to the
/// higher one, `true` the reverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    dir: Vec<bool>,
}

impl Orientation {
    pub fn new(g: &Graph, dir: Vec<bool>) -> Result<Self> {
        if dir.len() != g.edge_count() {
            return Err(Error::OrientationLength {
                expected: g.edge_count(),
                found: dir.len(),
            });
        }
        Ok(Orientation { dir })
    }

    /// Orientation induced by a vertex ordering: earlier vertices point to later ones.
    pub fn from_ordering(g: &Graph, order: &[usize]) -> Result<Self> {
        let mut rank = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            if v >= g.n() || rank[v] != usize::MAX {
                return Err(Error::Invalid("ordering is not a permutation".into()));
            }
            rank[v] = i;
        }
        if order.len() != g.n() {
            return Err(Error::Invalid("ordering is not a permutation".into()));
        }
        let dir = g.edges().iter().map(|&(u, v)| rank[u] > rank[v]).collect();
        Ok(Orientation { dir })
    }

    /// Builds from the low bits of `mask`, bit `i` giving edge `i`.
    pub fn from_mask(g: &Graph, mask: u64) -> Result<Self> {
        if g.edge_count() > 64 {
            return Err(Error::Guard {
                what: "edges",
                value: g.edge_count(),
                limit: 64,
            });
        }
        Ok(Orientation {
            dir: (0..g.edge_count()).map(|i| mask >> i & 1 == 1).collect(),
        })
    }

    pub fn directions(&self) -> &[bool] {
        &self.dir
    }

    pub fn len(&self) -> usize {
        self.dir.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dir.is_empty()
    }

    /// `(tail, head)` of edge `i`.
    pub fn arc(&self, g: &Graph, i: usize) -> (usize, usize) {
        let (u, v) = g.edges()[i];
        if self.dir[i] {
            (v, u)
        } else {
            (u, v)
        }
    }

    pub fn arcs<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (usize, usize)> + 'a {
        (0..self.dir.len()).map(move |i| self.arc(g, i))
    }

    /// Direction bits as a `0`/`1` string in edge order.
    pub fn bit_string(&self) -> String {
        self.dir.iter().map(|&d| if d { '1' } else { '0' }).collect()
    }

    /// The first cyclic triangle found, if any.
    pub fn cyclic_triangle(&self, g: &Graph) -> Option<(usize, usize, usize)> {
        g.triangles_of().into_iter().find(|&(a, b, c)| {
            let d = |x, y| self.dir[g.edge_index(x, y).expect("triangle edge")];
            let (ab, bc, ac) = (d(a, b), d(b, c), d(a, c));
            // a→b→c→a or its reverse
            ab == bc && ac != ab
        })
    }

    pub fn is_cyclic_triangle_free(&self, g: &Graph) -> bool {
        self.cyclic_triangle(g).is_none()
    }
}

pub fn is_cyclic_triangle_free(g: &Graph, o: &Orientation) -> bool {
    o.is_cyclic_triangle_free(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    Unset,
    /// Lower label to higher label.
    Forward,
    Backward,
}

/// Search state: some edges directed, the rest open.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrientation {
    states: Vec<EdgeState>,
}

impl PartialOrientation {
    pub fn new(g: &Graph) -> Self {
        PartialOrientation {
            states: vec![EdgeState::Unset; g.edge_count()],
        }
    }

    pub fn from_states(g: &Graph, states: Vec<EdgeState>) -> Result<Self> {
        if states.len() != g.edge_count() {
            return Err(Error::OrientationLength {
                expected: g.edge_count(),
                found: states.len(),
            });
        }
        Ok(PartialOrientation { states })
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    pub fn state(&self, i: usize) -> EdgeState {
        self.states[i]
    }

    pub fn set(&mut self, i: usize, s: EdgeState) {
        self.states[i] = s;
    }

    /// Sets edge `{tail, head}` to point from `tail` to `head`.
    pub fn set_arc(&mut self, g: &Graph, tail: usize, head: usize) -> Result<()> {
        let i = g
            .edge_index(tail, head)
            .ok_or_else(|| Error::Invalid(format!("{tail}-{head} is not an edge")))?;
        self.states[i] = if tail < head {
            EdgeState::Forward
        } else {
            EdgeState::Backward
        };
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.states.iter().all(|&s| s != EdgeState::Unset)
    }

    pub fn unset_count(&self) -> usize {
        self.states.iter().filter(|&&s| s == EdgeState::Unset).count()
    }

    pub fn to_orientation(&self) -> Option<Orientation> {
        self.states
            .iter()
            .map(|s| match s {
                EdgeState::Unset => None,
                EdgeState::Forward => Some(false),
                EdgeState::Backward => Some(true),
            })
            .collect::<Option<Vec<_>>>()
            .map(|dir| Orientation { dir })
    }

    fn arcs<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (usize, usize)> + 'a {
        g.edges()
            .iter()
            .zip(&self.states)
            .filter_map(|(&(u, v), s)| match s {
                EdgeState::Unset => None,
                EdgeState::Forward => Some((u, v)),
                EdgeState::Backward => Some((v, u)),
            })
    }
}

impl From<&Orientation> for PartialOrientation {
    fn from(o: &Orientation) -> Self {
        PartialOrientation {
            states: o
                .dir
                .iter()
                .map(|&d| if d { EdgeState::Backward } else { EdgeState::Forward })
                .collect(),
        }
    }
}

/// Outcome of [`propagate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    /// Fixed point of the triangle rule; `forced` lists the edges it set.
    Consistent {
        result: PartialOrientation,
        forced: Vec<usize>,
    },
    Contradiction,
}

/// Applies the triangle rule until nothing changes.
pub fn propagate(g: &Graph, p: &PartialOrientation) -> Propagation {
    let mut arcs = Arcs::new(g);
    if !arcs.seed(p.arcs(g)) {
        return Propagation::Contradiction;
    }
    let mut result = p.clone();
    let mut forced = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if p.states[i] == EdgeState::Unset {
            let s = arcs.state(u, v);
            if s != EdgeState::Unset {
                result.states[i] = s;
                forced.push(i);
            }
        }
    }
    Propagation::Consistent { result, forced }
}

/// Directed arcs as out/in bitsets with an undo trail.
#[derive(Debug, Clone)]
struct Arcs {
    adj: Vec<u64>,
    out: Vec<u64>,
    inn: Vec<u64>,
    trail: Vec<(u8, u8)>,
    queue: Vec<(u8, u8)>,
}

impl Arcs {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        Arcs {
            adj: g.adjacency().to_vec(),
            out: vec![0; n],
            inn: vec![0; n],
            trail: Vec::with_capacity(g.edge_count()),
            queue: Vec::with_capacity(g.edge_count()),
        }
    }

    #[inline]
    fn is_set(&self, u: usize, v: usize) -> bool {
        (self.out[u] | self.inn[u]) >> v & 1 == 1
    }

    fn state(&self, u: usize, v: usize) -> EdgeState {
        debug_assert!(u < v);
        if self.out[u] >> v & 1 == 1 {
            EdgeState::Forward
        } else if self.inn[u] >> v & 1 == 1 {
            EdgeState::Backward
        } else {
            EdgeState::Unset
        }
    }

    #[inline]
    fn push(&mut self, x: usize, y: usize) {
        self.out[x] |= 1 << y;
        self.inn[y] |= 1 << x;
        self.trail.push((x as u8, y as u8));
        self.queue.push((x as u8, y as u8));
    }

    /// Sets `x → y` and propagates. Returns false on contradiction; the caller
    /// undoes to its mark either way.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.out[y] >> x & 1 == 1 {
            return false;
        }
        if self.out[x] >> y & 1 == 1 {
            return true;
        }
        self.push(x, y);
        self.propagate()
    }

    fn propagate(&mut self) -> bool {
        while let Some((x, y)) = self.queue.pop() {
            let (x, y) = (x as usize, y as usize);
            // y → w → x would close a directed triangle with x → y.
            if self.out[y] & self.inn[x] != 0 {
                self.queue.clear();
                return false;
            }
            // x → y → w forces x → w.
            for w in Bits(self.out[y] & self.adj[x] & !self.out[x]) {
                self.push(x, w);
            }
            // w → x → y forces w → y.
            for w in Bits(self.inn[x] & self.adj[y] & !self.inn[y]) {
                self.push(w, y);
            }
        }
        true
    }

    fn seed<I: IntoIterator<Item = (usize, usize)>>(&mut self, arcs: I) -> bool {
        arcs.into_iter().all(|(x, y)| self.assign(x, y))
    }

    fn undo(&mut self, mark: usize) {
        for (x, y) in self.trail.drain(mark..) {
            self.out[x as usize] &= !(1 << y);
            self.inn[y as usize] &= !(1 << x);
        }
        self.queue.clear();
    }
}

/// Leaf accumulator for the counting search.
trait Tally {
    /// Adds `2^k`; `Err` means the fixed-width accumulator would overflow.
    fn add_pow2(&mut self, k: u32) -> Result<(), Overflow>;
}

#[derive(Debug)]
struct Overflow;

impl Tally for u128 {
    #[inline]
    fn add_pow2(&mut self, k: u32) -> Result<(), Overflow> {
        let term = 1u128.checked_shl(k).ok_or(Overflow)?;
        *self = self.checked_add(term).ok_or(Overflow)?;
        Ok(())
    }
}

impl Tally for BigUint {
    fn add_pow2(&mut self, k: u32) -> Result<(), Overflow> {
        *self += BigUint::one() << k;
        Ok(())
    }
}

/// Greedy static edge order: each next edge closes as many triangles as
/// possible with the edges already placed, then touches as many as possible.
fn triangle_closing_order(g: &Graph) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let m = edges.len();
    let adj = g.adjacency();
    let mut placed = vec![false; m];
    let mut closes = vec![0u32; m];
    let mut touches = vec![0u32; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let next = (0..m)
            .filter(|&i| !placed[i])
            .max_by(|&a, &b| {
                (closes[a], touches[a])
                    .cmp(&(closes[b], touches[b]))
                    .then(b.cmp(&a))
            })
            .expect("unplaced edge remains");
        placed[next] = true;
        let (u, v) = edges[next];
        order.push((u, v));
        for w in Bits(adj[u] & adj[v]) {
            let uw = g.edge_index(u, w).expect("edge");
            let vw = g.edge_index(v, w).expect("edge");
            match (placed[uw], placed[vw]) {
                (false, false) => {
                    touches[uw] += 1;
                    touches[vw] += 1;
                }
                (true, false) => closes[vw] += 1,
                (false, true) => closes[uw] += 1,
                (true, true) => {}
            }
        }
    }
    order
}

/// Reusable counter of completions of partial orientations of one graph.
#[derive(Debug, Clone)]
pub struct Completer {
    order: Vec<(usize, usize)>,
    arcs: Arcs,
}

impl Completer {
    pub fn new(g: &Graph) -> Self {
        Completer {
            order: triangle_closing_order(g),
            arcs: Arcs::new(g),
        }
    }

    /// Number of cyclic-triangle-free orientations extending the given arcs.
    pub fn count_with_arcs(&mut self, seeds: &[(usize, usize)]) -> Count {
        if !self.arcs.seed(seeds.iter().copied()) {
            self.arcs.undo(0);
            return Count::zero();
        }
        let mut fast = 0u128;
        let result = match self.dfs(0, 0, &mut fast) {
            Ok(()) => Count::from(fast),
            Err(Overflow) => {
                let mut big = BigUint::default();
                self.arcs.undo(0);
                self.arcs.seed(seeds.iter().copied());
                self.dfs(0, 0, &mut big).expect("unbounded tally");
                Count(big)
            }
        };
        self.arcs.undo(0);
        result
    }

    fn dfs<T: Tally>(&mut self, mut pos: usize, mut free: u32, tally: &mut T) -> Result<(), Overflow> {
        let m = self.order.len();
        let (u, v) = loop {
            if pos == m {
                return tally.add_pow2(free);
            }
            let (u, v) = self.order[pos];
            pos += 1;
            if self.arcs.is_set(u, v) {
                continue;
            }
            let a = &self.arcs;
            let settled = (a.out[u] | a.inn[u]) & (a.out[v] | a.inn[v]);
            if a.adj[u] & a.adj[v] & !settled == 0 {
                // Every triangle on uv is already fixed and leaves uv open.
                free += 1;
                continue;
            }
            break (u, v);
        };
        for (x, y) in [(u, v), (v, u)] {
            let mark = self.arcs.trail.len();
            if self.arcs.assign(x, y) {
                self.dfs(pos, free, tally)?;
            }
            self.arcs.undo(mark);
        }
        Ok(())
    }
}

/// Exact number of orientations of `g` with no cyclic triangle.
pub fn count_orientations(g: &Graph) -> Count {
    Completer::new(g).count_with_arcs(&[])
}

/// Exact number of completions of `p` with no cyclic triangle.
pub fn count_completions(g: &Graph, p: &PartialOrientation) -> Count {
    let seeds: Vec<_> = p.arcs(g).collect();
    Completer::new(g).count_with_arcs(&seeds)
}

/// Brute force over all `2^m` direction vectors, checking every triangle.
pub fn oracle_count(g: &Graph) -> Result<Count> {
    let m = g.edge_count();
    if m > ORACLE_EDGE_LIMIT {
        return Err(Error::Guard {
            what: "edge count for the brute-force oracle",
            value: m,
            limit: ORACLE_EDGE_LIMIT,
        });
    }
    let triangles: Vec<(usize, usize, usize)> = g
        .triangles_of()
        .into_iter()
        .map(|(a, b, c)| {
            let e = |x, y| g.edge_index(x, y).expect("triangle edge");
            (e(a, b), e(b, c), e(a, c))
        })
        .collect();
    let mut total = 0u64;
    for mask in 0u64..1 << m {
        let ok = triangles.iter().all(|&(ab, bc, ac)| {
            let (ab, bc, ac) = (mask >> ab & 1, mask >> bc & 1, mask >> ac & 1);
            !(ab == bc && ac != ab)
        });
        total += ok as u64;
    }
    Ok(Count::from(total))
}

/// Calls `visitor` on every cyclic-triangle-free orientation, in
/// lexicographic order of direction vectors. Returns the number of visits.
pub fn enumerate_orientations<F>(g: &Graph, visitor: F) -> u64
where
    F: FnMut(&Orientation),
{
    enumerate_completions(g, &PartialOrientation::new(g), visitor)
}

/// Like [`enumerate_orientations`], restricted to completions of `p`.
pub fn enumerate_completions<F>(g: &Graph, p: &PartialOrientation, mut visitor: F) -> u64
where
    F: FnMut(&Orientation),
{
    let mut arcs = Arcs::new(g);
    if !arcs.seed(p.arcs(g)) {
        return 0;
    }
    let mut current = Orientation {
        dir: vec![false; g.edge_count()],
    };
    let mut visits = 0;
    enumerate_rec(g, &mut arcs, 0, &mut current, &mut visits, &mut visitor);
    visits
}

fn enumerate_rec<F: FnMut(&Orientation)>(
    g: &Graph,
    arcs: &mut Arcs,
    mut pos: usize,
    current: &mut Orientation,
    visits: &mut u64,
    visitor: &mut F,
) {
    let edges = g.edges();
    while pos < edges.len() && arcs.is_set(edges[pos].0, edges[pos].1) {
        pos += 1;
    }
    if pos == edges.len() {
        for (d, &(u, v)) in current.dir.iter_mut().zip(edges) {
            *d = arcs.out[v] >> u & 1 == 1;
        }
        *visits += 1;
        visitor(current);
        return;
    }
    let (u, v) = edges[pos];
    for (x, y) in [(u, v), (v, u)] {
        let mark = arcs.trail.len();
        if arcs.assign(x, y) {
            enumerate_rec(g, arcs, pos + 1, current, visits, visitor);
        }
        arcs.undo(mark);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_arcs(arcs: &[(usize, usize)]) -> (Graph, Orientation) {
        let g = Graph::complete(3).unwrap();
        let mut p = PartialOrientation::new(&g);
        for &(x, y) in arcs {
            p.set_arc(&g, x, y).unwrap();
        }
        let o = p.to_orientation().unwrap();
        (g, o)
    }

    fn k4_minus() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn detects_cyclic_triangle() {
        let (g, o) = k3_arcs(&[(0, 1), (1, 2), (2, 0)]);
        assert!(!is_cyclic_triangle_free(&g, &o));
        assert_eq!(o.cyclic_triangle(&g), Some((0, 1, 2)));
        let (g, o) = k3_arcs(&[(0, 1), (0, 2), (1, 2)]);
        assert!(is_cyclic_triangle_free(&g, &o));
    }

    #[test]
    fn bipartite_orientations_are_all_free() {
        let g = Graph::complete_multipartite(&[4, 4]).unwrap();
        for mask in [0u64, 0xffff, 0xa5a5, 0x1234] {
            assert!(Orientation::from_mask(&g, mask).unwrap().is_cyclic_triangle_free(&g));
        }
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(oracle_count(&Graph::complete(3).unwrap()).unwrap(), 6);
        assert_eq!(oracle_count(&Graph::path(3).unwrap()).unwrap(), 4);
        assert_eq!(oracle_count(&k4_minus()).unwrap(), 18);
    }

    #[test]
    fn oracle_guard() {
        let g = Graph::complete(9).unwrap();
        assert!(matches!(oracle_count(&g), Err(Error::Guard { value: 36, .. })));
    }

    #[test]
    fn engine_named_values() {
        assert_eq!(count_orientations(&Graph::complete(7).unwrap()), 5040);
        assert_eq!(
            count_orientations(&Graph::complete_multipartite(&[4, 4]).unwrap()),
            65536
        );
        assert_eq!(
            count_orientations(&Graph::complete_multipartite(&[1, 3, 3]).unwrap()),
            2754
        );
        assert_eq!(
            count_orientations(&Graph::complete_multipartite(&[1, 4, 4]).unwrap()),
            271618
        );
        assert_eq!(count_orientations(&k4_minus()), 18);
        assert_eq!(count_orientations(&Graph::empty(0).unwrap()), 1);
        assert_eq!(count_orientations(&Graph::empty(5).unwrap()), 1);
    }

    #[test]
    fn big_counts_fall_back_to_bigint() {
        // 2^(32*32) overflows every fixed-width accumulator.
        let g = Graph::complete_multipartite(&[32, 32]).unwrap();
        assert_eq!(count_orientations(&g), Count::pow2(1024));
        // Overflow only after branching has started.
        let h = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete_multipartite(&[12, 12]).unwrap())
            .unwrap();
        assert_eq!(count_orientations(&h), &Count::from(6u64) * &Count::pow2(144));
    }

    #[test]
    fn enumeration_visits() {
        let mut seen = Vec::new();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(enumerate_orientations(&k3, |o| seen.push(o.clone())), 6);
        assert!(seen.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
        assert!(seen.iter().all(|o| o.is_cyclic_triangle_free(&k3)));
        assert_eq!(enumerate_orientations(&Graph::complete(2).unwrap(), |_| {}), 2);
        assert_eq!(enumerate_orientations(&Graph::complete(4).unwrap(), |_| {}), 24);
    }

    #[test]
    fn propagation_forces_transitive_closure() {
        let g = Graph::complete(3).unwrap();
        let mut p = PartialOrientation::new(&g);
        p.set_arc(&g, 0, 1).unwrap();
        p.set_arc(&g, 1, 2).unwrap();
        match propagate(&g, &p) {
            Propagation::Consistent { result, forced } => {
                assert_eq!(forced, vec![g.edge_index(0, 2).unwrap()]);
                assert_eq!(result.state(1), EdgeState::Forward);
            }
            Propagation::Contradiction => panic!("consistent input"),
        }
    }

    #[test]
    fn propagation_leaves_both_into_one_vertex() {
        let g = Graph::complete(3).unwrap();
        let mut p = PartialOrientation::new(&g);
        p.set_arc(&g, 0, 1).unwrap();
        p.set_arc(&g, 2, 1).unwrap();
        assert_eq!(
            propagate(&g, &p),
            Propagation::Consistent {
                result: p.clone(),
                forced: vec![]
            }
        );
    }

    #[test]
    fn propagation_contradiction_matches_zero_completions() {
        // Triangle 0,1,2 ordered 0<1<2; vertex 3 with 0→3 and 3→2 forces
        // nothing wrong, but 2→3 together with 3→0 closes 0→2→3→0.
        let g = Graph::complete(4).unwrap();
        let mut p = PartialOrientation::new(&g);
        p.set_arc(&g, 0, 1).unwrap();
        p.set_arc(&g, 1, 2).unwrap();
        p.set_arc(&g, 3, 0).unwrap();
        p.set_arc(&g, 2, 3).unwrap();
        assert_eq!(propagate(&g, &p), Propagation::Contradiction);
        // Independent check: no completion survives the brute force.
        let fixed: Vec<(usize, EdgeState)> = p
            .states()
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, s)| s != EdgeState::Unset)
            .collect();
        let survivors = (0u64..1 << 6)
            .filter(|&mask| {
                fixed.iter().all(|&(i, s)| (mask >> i & 1 == 1) == (s == EdgeState::Backward))
                    && Orientation::from_mask(&g, mask).unwrap().is_cyclic_triangle_free(&g)
            })
            .count();
        assert_eq!(survivors, 0);
        assert_eq!(count_completions(&g, &p), 0);
    }

    #[test]
    fn completions_of_a_fixed_path() {
        let g = Graph::complete(3).unwrap();
        let mut p = PartialOrientation::new(&g);
        p.set_arc(&g, 0, 1).unwrap();
        assert_eq!(count_completions(&g, &p), 3);
        let mut seen = 0;
        enumerate_completions(&g, &p, |o| {
            assert_eq!(o.arc(&g, 0), (0, 1));
            seen += 1;
        });
        assert_eq!(seen, 3);
    }

    #[test]
    fn ordering_roundtrip() {
        let g = Graph::complete(4).unwrap();
        let o = Orientation::from_ordering(&g, &[3, 1, 0, 2]).unwrap();
        assert!(o.is_cyclic_triangle_free(&g));
        assert_eq!(o.arc(&g, g.edge_index(0, 3).unwrap()), (3, 0));
        assert!(Orientation::from_ordering(&g, &[0, 0, 1, 2]).is_err());
        assert!(Orientation::new(&g, vec![false; 5]).is_err());
    }
}
