//! The refinement procedure over candidate bigraphs, mapping verification,
//! and the top-level isomorphism test.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matcher::{build_bigraph, transversal, Bigraph, Mapping};
use crate::weights::{random_primes, KMatrix};
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
}

/// Iteration order over the snapshot of the initial bigraph edge list in
/// the refinement loop. The verdict is expected to be order-independent;
/// the reverse order exists so tests can check exactly that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SnapshotOrder {
    #[default]
    Forward,
    Reverse,
}

/// How k-values are represented and compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KMode {
    /// Exact rational entries; equality is exact. The default.
    Exact,
    /// Multi-modular residue fingerprints. Faster at large n; a mismatch
    /// is definitive, a match is probable equality. Any "isomorphic"
    /// verdict is still confirmed by exact edge-level verification.
    Fingerprint { prime_count: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct IsoOptions {
    pub mode: KMode,
    pub order: SnapshotOrder,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            mode: KMode::Exact,
            order: SnapshotOrder::Forward,
        }
    }
}

/// Per-phase counters and timings for one isomorphism test.
#[derive(Debug, Clone, Default, Serialize)]
pub struct IsoStats {
    pub kmatrix_millis: f64,
    pub refine_millis: f64,
    pub p1_calls: usize,
    pub verify_rejections: usize,
    pub max_bigraph_edges: usize,
}

/// Outcome of the top-level test. When the verdict is `Isomorphic` the
/// mapping is present and has already been re-checked by [`verify`].
#[derive(Debug, Clone)]
pub struct IsoResult {
    pub verdict: Verdict,
    pub mapping: Option<Mapping>,
    pub tried_pairs: usize,
    pub stats: IsoStats,
}

/// Result of one refinement run: the transversal, if any, plus the final
/// refined bigraph (exposed so callers can check structural claims about
/// it, e.g. per-vertex incidence on success).
#[derive(Debug)]
pub struct RefineOutcome {
    pub mapping: Option<Mapping>,
    pub final_bigraph: Bigraph,
}

/// Refinement anchored at the pair `(i, j)`:
/// 1. build the candidate bigraph U for `(i, j)`;
/// 2. for every edge `(p, q)` of a snapshot of U (skipping `(i, j)` and
///    edges already deleted): build the bigraph anchored at `(p, q)`; if
///    the intersection still admits a transversal, replace U by it,
///    otherwise delete `(p, q)` from U;
/// 3. return a transversal of the final U, or `None`.
pub fn p1(k: &KMatrix, kp: &KMatrix, i: usize, j: usize) -> Option<Mapping> {
    p1_with_order(k, kp, i, j, SnapshotOrder::Forward).mapping
}

pub fn p1_with_order(
    k: &KMatrix,
    kp: &KMatrix,
    i: usize,
    j: usize,
    order: SnapshotOrder,
) -> RefineOutcome {
    let mut u = build_bigraph(k, kp, i, j);
    let mut snapshot: Vec<(usize, usize)> = u.edges().collect();
    if order == SnapshotOrder::Reverse {
        snapshot.reverse();
    }
    for (p, q) in snapshot {
        if (p, q) == (i, j) || !u.contains(p, q) {
            continue;
        }
        let h = build_bigraph(k, kp, p, q);
        let refined = u.intersect(&h);
        if transversal(&refined).is_some() {
            u = refined;
        } else {
            u.remove(p, q);
        }
    }
    RefineOutcome {
        mapping: transversal(&u),
        final_bigraph: u,
    }
}

/// Exact edge-level isomorphism check of a candidate mapping: edge
/// `(u, v)` in `g` iff edge `(r(u), r(v))` in `gp`.
///
/// Since `r` is a bijection, mapping every edge of `g` onto an edge of
/// `gp` while the edge counts agree already forces the biconditional.
pub fn verify(g: &Graph, gp: &Graph, r: &Mapping) -> bool {
    assert_eq!(g.n(), gp.n(), "vertex count mismatch");
    assert_eq!(r.len(), g.n(), "mapping size mismatch");
    g.m() == gp.m()
        && g.edges()
            .iter()
            .all(|&(u, v)| gp.has_edge(r.image(u), r.image(v)))
}

/// Top-level isomorphism test with default (exact) options.
pub fn algorithm1(g: &Graph, gp: &Graph) -> Result<IsoResult> {
    algorithm1_with(g, gp, &IsoOptions::default())
}

/// Top-level test: early exit on vertex or edge count mismatch, otherwise
/// compute both k-matrices once and try anchor pairs `(0, j)` for every j
/// of matching degree; the first transversal that passes [`verify`] is
/// reported.
pub fn algorithm1_with(g: &Graph, gp: &Graph, options: &IsoOptions) -> Result<IsoResult> {
    for graph in [g, gp] {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
    }
    let mut stats = IsoStats::default();
    if g.n() != gp.n() || g.m() != gp.m() {
        return Ok(IsoResult {
            verdict: Verdict::NotIsomorphic,
            mapping: None,
            tried_pairs: 0,
            stats,
        });
    }
    let n = g.n();

    let started = Instant::now();
    let (k, kprime) = build_k_matrices(g, gp, options.mode);
    stats.kmatrix_millis = started.elapsed().as_secs_f64() * 1e3;

    let started = Instant::now();
    let mut tried_pairs = 0;
    let anchor_degree = g.degree(0);
    for j in 0..n {
        if gp.degree(j) != anchor_degree {
            continue; // anchor pair cannot be similar
        }
        tried_pairs += 1;
        stats.p1_calls += 1;
        let outcome = p1_with_order(&k, &kprime, 0, j, options.order);
        stats.max_bigraph_edges = stats
            .max_bigraph_edges
            .max(outcome.final_bigraph.edge_count());
        if let Some(mapping) = outcome.mapping {
            if verify(g, gp, &mapping) {
                stats.refine_millis = started.elapsed().as_secs_f64() * 1e3;
                return Ok(IsoResult {
                    verdict: Verdict::Isomorphic,
                    mapping: Some(mapping),
                    tried_pairs,
                    stats,
                });
            }
            stats.verify_rejections += 1;
        }
    }
    stats.refine_millis = started.elapsed().as_secs_f64() * 1e3;
    Ok(IsoResult {
        verdict: Verdict::NotIsomorphic,
        mapping: None,
        tried_pairs,
        stats,
    })
}

fn build_k_matrices(g: &Graph, gp: &Graph, mode: KMode) -> (KMatrix, KMatrix) {
    match mode {
        KMode::Exact => (KMatrix::exact(g), KMatrix::exact(gp)),
        KMode::Fingerprint { prime_count, seed } => {
            // retry with a fresh prime set if one is singular for a graph
            for attempt in 0..64 {
                let primes = random_primes(prime_count, seed.wrapping_add(attempt));
                if let (Some(k), Some(kp)) =
                    (KMatrix::fingerprint(g, &primes), KMatrix::fingerprint(gp, &primes))
                {
                    return (k, kp);
                }
            }
            unreachable!("no usable prime set found after 64 attempts");
        }
    }
}
