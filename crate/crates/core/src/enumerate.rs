//! Isomorph-free generation of small graphs and the search for graphs with
//! the most cyclic-triangle-free orientations.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::closed_forms::{bipartite_max, factorial};
use crate::count::Count;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::count_orientations;

/// Largest order for exhaustive generation.
pub const GENERATE_MAX_VERTICES: usize = 8;

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > GENERATE_MAX_VERTICES {
        return Err(Error::Guard {
            what: "vertices for exhaustive generation (must be 1..=8)",
            value: n,
            limit: GENERATE_MAX_VERTICES,
        });
    }
    Ok(())
}

static CLASSES: [OnceLock<Vec<CanonicalForm>>; GENERATE_MAX_VERTICES + 1] =
    [const { OnceLock::new() }; GENERATE_MAX_VERTICES + 1];

/// Canonical forms of all graphs on `n` vertices, in increasing order.
pub fn class_forms(n: usize) -> Result<&'static [CanonicalForm]> {
    check_order(n)?;
    Ok(CLASSES[n].get_or_init(|| {
        if n == 1 {
            return vec![canonical_form(&Graph::empty(1).expect("one vertex")).expect("small")];
        }
        let parents = class_forms(n - 1).expect("smaller order is valid");
        let children: Vec<Vec<CanonicalForm>> = parents
            .par_iter()
            .map(|p| augmentations(&p.to_graph()))
            .collect();
        let set: BTreeSet<CanonicalForm> = children.into_iter().flatten().collect();
        set.into_iter().collect()
    }))
}

/// Canonical forms of every one-vertex extension of `g`.
fn augmentations(g: &Graph) -> Vec<CanonicalForm> {
    let n = g.n();
    let mut base = g.adjacency().to_vec();
    base.push(0);
    let mut out: Vec<CanonicalForm> = (0u64..1 << n)
        .map(|nbhd| {
            let mut adj = base.clone();
            adj[n] = nbhd;
            for (v, row) in adj[..n].iter_mut().enumerate() {
                *row |= (nbhd >> v & 1) << n;
            }
            let h = Graph::from_adjacency(adj).expect("symmetric by construction");
            canonical_form(&h).expect("within canonical guard")
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// One canonically labelled representative per isomorphism class on `n`
/// vertices, in canonical-form order.
pub fn generate_all(n: usize) -> Result<Vec<Graph>> {
    Ok(class_forms(n)?.iter().map(CanonicalForm::to_graph).collect())
}

/// Representatives satisfying `predicate`.
pub fn filtered_classes<P>(n: usize, predicate: P) -> Result<Vec<Graph>>
where
    P: Fn(&Graph) -> bool,
{
    Ok(generate_all(n)?.into_iter().filter(|g| predicate(g)).collect())
}

/// Options for [`find_maximizers`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Skip graphs with `2^m` below a known lower bound on the maximum.
    pub prune: bool,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            prune: true,
            workers: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphTiming {
    pub graph: CanonicalForm,
    /// `None` when the graph was skipped by pruning.
    pub count: Option<Count>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct MaximizerReport {
    pub n: usize,
    pub max_count: Count,
    pub maximizers: Vec<CanonicalForm>,
    pub classes: usize,
    pub counted: usize,
    pub pruned: bool,
    /// Per-graph results in class order. Durations are not serialised so that
    /// reports are reproducible byte for byte.
    #[serde(skip)]
    pub timings: Vec<GraphTiming>,
}

fn run_in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::Invalid("worker count must be at least 1".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Invalid(e.to_string())),
    }
}

/// Counts orientations over every class on `n` vertices and returns the
/// maximum with all graphs attaining it.
pub fn find_maximizers(n: usize, opts: SweepOptions) -> Result<MaximizerReport> {
    let forms = class_forms(n)?;
    // Both candidate extremal graphs give a lower bound on the maximum; any
    // graph with 2^m below it cannot reach the maximum.
    let seed = if opts.prune {
        let clique = count_orientations(&Graph::complete(n)?);
        let bip = Graph::complete_multipartite(&[n / 2, n.div_ceil(2)])
            .map(|g| count_orientations(&g))
            .unwrap_or_else(|_| Count::one());
        clique.max(bip)
    } else {
        Count::zero()
    };
    let timings: Vec<GraphTiming> = run_in_pool(opts.workers, || {
        forms
            .par_iter()
            .map(|f| {
                let start = Instant::now();
                let g = f.to_graph();
                let count = (Count::pow2(g.edge_count() as u64) >= seed)
                    .then(|| count_orientations(&g));
                GraphTiming {
                    graph: *f,
                    count,
                    elapsed: start.elapsed(),
                }
            })
            .collect()
    })?;
    let max_count = timings
        .iter()
        .filter_map(|t| t.count.clone())
        .max()
        .expect("the complete graph is always counted");
    let maximizers = timings
        .iter()
        .filter(|t| t.count.as_ref() == Some(&max_count))
        .map(|t| t.graph)
        .collect();
    Ok(MaximizerReport {
        n,
        max_count,
        maximizers,
        classes: forms.len(),
        counted: timings.iter().filter(|t| t.count.is_some()).count(),
        pruned: opts.prune,
        timings,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub max_count: Count,
    /// `max(2^⌊n²/4⌋, n!)`.
    pub expected: Count,
    pub maximizers: Vec<CanonicalForm>,
    /// For `n = 8`: whether `K_{4,4}` is the only maximizer.
    pub unique_k44: Option<bool>,
    pub classes: usize,
    pub counted: usize,
    pub pass: bool,
}

impl TheoremReport {
    pub fn summary(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        match self.unique_k44 {
            Some(true) => format!("n={}: max={}, unique maximizer K_{{4,4}}: {verdict}", self.n, self.max_count),
            Some(false) => format!(
                "n={}: max={}, maximizers {}: {verdict}",
                self.n,
                self.max_count,
                self.maximizers.iter().map(|f| f.graph6()).collect::<Vec<_>>().join(",")
            ),
            None => format!("n={}: max={}={}!: {verdict}", self.n, self.max_count, self.n),
        }
    }
}

/// Checks that the maximum over `n`-vertex graphs is `max(2^⌊n²/4⌋, n!)`,
/// that it equals `n!` for `n ≤ 7`, and that for `n = 8` it is attained
/// only by `K_{4,4}`.
pub fn verify_theorem(n: usize, opts: SweepOptions) -> Result<TheoremReport> {
    let report = find_maximizers(n, opts)?;
    let fact = factorial(n as u64)?;
    let expected = bipartite_max(n as u64).max(fact.clone());
    let mut pass = report.max_count == expected;
    let unique_k44 = if n == 8 {
        let k44 = canonical_form(&Graph::complete_multipartite(&[4, 4])?)?;
        Some(report.maximizers == [k44])
    } else {
        pass &= report.max_count == fact;
        None
    };
    pass &= unique_k44.unwrap_or(true);
    Ok(TheoremReport {
        n,
        max_count: report.max_count,
        expected,
        maximizers: report.maximizers,
        unique_k44,
        classes: report.classes,
        counted: report.counted,
        pass,
    })
}
