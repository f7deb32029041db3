//! Independent brute-force isomorphism testing and the harness that
//! compares the main algorithm against ground truth, recording every
//! disagreement as a reproducible counterexample.

use crate::error::{Error, Result};
use crate::graph::{named, random_connected, write_edge_list, Graph, GraphKind, Permutation};
use crate::isotest::{algorithm1, verify, Verdict};
use crate::matcher::Mapping;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Default cap for exhaustive search; 10! assignments is the practical
/// ceiling for a test-suite oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

/// Exhaustive backtracking isomorphism search with degree and
/// partial-adjacency pruning. `None` means no isomorphism exists.
pub fn brute_force_iso(g: &Graph, gp: &Graph) -> Result<Option<Mapping>> {
    brute_force_iso_with_limit(g, gp, DEFAULT_ORACLE_LIMIT)
}

pub fn brute_force_iso_with_limit(
    g: &Graph,
    gp: &Graph,
    limit: usize,
) -> Result<Option<Mapping>> {
    if g.n() > limit || gp.n() > limit {
        return Err(Error::OracleLimitExceeded {
            n: g.n().max(gp.n()),
            limit,
        });
    }
    if g.n() != gp.n() || g.m() != gp.m() || g.degree_multiset() != gp.degree_multiset() {
        return Ok(None);
    }
    let n = g.n();
    // assign high-degree vertices first; their candidate lists are shortest
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = assign(g, gp, &order, 0, &mut image, &mut used);
    if !found {
        return Ok(None);
    }
    let mapping = Mapping::new(image);
    debug_assert!(verify(g, gp, &mapping));
    Ok(Some(mapping))
}

fn assign(
    g: &Graph,
    gp: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    'candidate: for q in 0..gp.n() {
        if used[q] || g.degree(u) != gp.degree(q) {
            continue;
        }
        for &prev in &order[..depth] {
            if g.has_edge(u, prev) != gp.has_edge(q, image[prev]) {
                continue 'candidate;
            }
        }
        image[u] = q;
        used[q] = true;
        if assign(g, gp, order, depth + 1, image, used) {
            return true;
        }
        image[u] = usize::MAX;
        used[q] = false;
    }
    false
}

/// Pair-generation strategy for the hunt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairStrategy {
    /// Isomorphic by construction: a random connected graph and a random
    /// relabeling of it.
    Iso,
    /// A graph against a one-rewire perturbation of itself, preferring
    /// degree-preserving double edge swaps.
    Near,
    /// The named non-isomorphic same-parameter pairs.
    Hard,
}

#[derive(Debug, Clone)]
pub struct HuntConfig {
    pub strategy: PairStrategy,
    pub n_min: usize,
    pub n_max: usize,
    pub instance_count: usize,
    pub seed: u64,
    /// Cross-check against the brute-force oracle whenever n permits.
    pub exhaustive_oracle: bool,
    pub oracle_limit: usize,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            strategy: PairStrategy::Iso,
            n_min: 4,
            n_max: 8,
            instance_count: 100,
            seed: 0,
            exhaustive_oracle: false,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

/// A recorded disagreement, reproducible from the embedded edge lists.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph_a: String,
    pub graph_b: String,
    pub algorithm_verdict: String,
    /// Ground-truth verdict, when one was available.
    pub oracle_verdict: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub instances_tested: usize,
    pub agreements: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
    pub counterexamples: Vec<Counterexample>,
    pub seed: u64,
    pub wall_time_seconds: f64,
}

enum InstanceOutcome {
    Agreement,
    FalsePositive(Counterexample),
    FalseNegative(Counterexample),
}

/// Runs the configured sweep, comparing the algorithm's verdict against
/// whatever ground truth is available: construction (iso pairs), the
/// brute-force oracle (small n), or named-pair certificates (hard pairs).
/// Instances run in parallel; outcomes merge deterministically by index.
pub fn hunt(config: &HuntConfig) -> Result<HuntReport> {
    if config.n_min < 2 || config.n_min > config.n_max {
        return Err(Error::InfeasibleGenerator(format!(
            "bad n range [{}, {}]",
            config.n_min, config.n_max
        )));
    }
    let started = Instant::now();
    let outcomes: Vec<InstanceOutcome> = match config.strategy {
        PairStrategy::Hard => hard_pairs()?
            .into_iter()
            .map(|(g, gp)| run_instance(&g, &gp, Some(false)))
            .collect::<Result<_>>()?,
        _ => (0..config.instance_count)
            .into_par_iter()
            .map(|index| {
                let (g, gp, truth) = generate_pair(config, index)?;
                run_instance(&g, &gp, truth)
            })
            .collect::<Result<_>>()?,
    };

    let mut report = HuntReport {
        instances_tested: outcomes.len(),
        agreements: 0,
        false_positives: 0,
        false_negatives: 0,
        counterexamples: Vec::new(),
        seed: config.seed,
        wall_time_seconds: 0.0,
    };
    for outcome in outcomes {
        match outcome {
            InstanceOutcome::Agreement => report.agreements += 1,
            InstanceOutcome::FalsePositive(ce) => {
                report.false_positives += 1;
                report.counterexamples.push(ce);
            }
            InstanceOutcome::FalseNegative(ce) => {
                report.false_negatives += 1;
                report.counterexamples.push(ce);
            }
        }
    }
    report.wall_time_seconds = started.elapsed().as_secs_f64();
    Ok(report)
}

fn hard_pairs() -> Result<Vec<(Graph, Graph)>> {
    Ok(vec![
        (named(&GraphKind::K33)?, named(&GraphKind::Prism)?),
        (named(&GraphKind::Shrikhande)?, named(&GraphKind::Rook44)?),
    ])
}

fn generate_pair(config: &HuntConfig, index: usize) -> Result<(Graph, Graph, Option<bool>)> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(config.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n = rng.gen_range(config.n_min..=config.n_max);
    let edge_prob = rng.gen_range(0.25..0.6);
    let g = random_connected(n, edge_prob, rng.gen())?;
    match config.strategy {
        PairStrategy::Iso => {
            let p = Permutation::random(n, &mut rng);
            let gp = g.permute(&p)?;
            Ok((g, gp, Some(true)))
        }
        PairStrategy::Near => {
            let gp = rewire(&g, &mut rng)?;
            let truth = if config.exhaustive_oracle && n <= config.oracle_limit {
                Some(brute_force_iso_with_limit(&g, &gp, config.oracle_limit)?.is_some())
            } else {
                None
            };
            Ok((g, gp, truth))
        }
        PairStrategy::Hard => unreachable!("hard pairs are fixed"),
    }
}

/// One-rewire perturbation, preferring a degree-preserving double edge
/// swap; falls back to moving a single edge. Keeps the result connected.
fn rewire(g: &Graph, rng: &mut impl Rng) -> Result<Graph> {
    let edges = g.edges();
    for _ in 0..200 {
        let &(a, b) = &edges[rng.gen_range(0..edges.len())];
        let &(c, d) = &edges[rng.gen_range(0..edges.len())];
        let distinct = [a, b, c, d];
        let all_distinct = (1..4).all(|i| !distinct[..i].contains(&distinct[i]));
        if !all_distinct || g.has_edge(a, c) || g.has_edge(b, d) {
            continue;
        }
        let new_edges: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&e| e != (a.min(b), a.max(b)) && e != (c.min(d), c.max(d)))
            .chain([(a.min(c), a.max(c)), (b.min(d), b.max(d))])
            .collect();
        let candidate = Graph::new(g.n(), new_edges)?;
        if candidate.is_connected() {
            return Ok(candidate);
        }
    }
    // fallback: move one edge anywhere feasible
    for _ in 0..200 {
        let &(a, b) = &edges[rng.gen_range(0..edges.len())];
        let u = rng.gen_range(0..g.n());
        let v = rng.gen_range(0..g.n());
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let new_edges: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&e| e != (a.min(b), a.max(b)))
            .chain([(u.min(v), u.max(v))])
            .collect();
        let candidate = Graph::new(g.n(), new_edges)?;
        if candidate.is_connected() {
            return Ok(candidate);
        }
    }
    Err(Error::InfeasibleGenerator(
        "could not rewire graph while keeping it connected".into(),
    ))
}

fn run_instance(g: &Graph, gp: &Graph, truth: Option<bool>) -> Result<InstanceOutcome> {
    let result = algorithm1(g, gp)?;
    let claims_iso = result.verdict == Verdict::Isomorphic;
    if claims_iso {
        // structural guarantee: a reported mapping always verifies
        assert!(verify(g, gp, result.mapping.as_ref().expect("mapping present")));
    }
    let ce = |oracle: Option<&str>| Counterexample {
        graph_a: write_edge_list(g),
        graph_b: write_edge_list(gp),
        algorithm_verdict: if claims_iso {
            "isomorphic".into()
        } else {
            "not_isomorphic".into()
        },
        oracle_verdict: oracle.map(str::to_owned),
    };
    Ok(match truth {
        Some(true) if !claims_iso => InstanceOutcome::FalseNegative(ce(Some("isomorphic"))),
        Some(false) if claims_iso => InstanceOutcome::FalsePositive(ce(Some("not_isomorphic"))),
        // unverifiable instances cannot expose a discrepancy
        _ => InstanceOutcome::Agreement,
    })
}
