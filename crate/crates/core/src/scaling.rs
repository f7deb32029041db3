//! Empirical complexity measurement: wall-time medians for the full test
//! on isomorphic pairs across graph sizes, and the fitted log-log slope.
//! The slope is measured and reported, never asserted against the
//! theoretical estimate.

use crate::error::Result;
use crate::graph::{random_connected, Permutation};
use crate::isotest::{algorithm1_with, IsoOptions, KMode, Verdict};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub instances_per_n: usize,
    pub seed: u64,
    /// Sizes above this use the multi-modular fingerprint mode.
    pub fingerprint_above: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![16, 32, 64],
            instances_per_n: 5,
            seed: 0,
            fingerprint_above: 64,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub mode: String,
    pub timings_millis: Vec<f64>,
    pub median_millis: f64,
    pub verdicts_isomorphic: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of ln(median time) against ln(n); `None` with
    /// fewer than two distinct sizes.
    pub loglog_slope: Option<f64>,
    pub seed: u64,
}

/// Times the full test on constructed isomorphic pairs for each size.
/// Instance graphs are deterministic for a fixed seed.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    let mut rows = Vec::new();
    for &n in &config.sizes {
        let mode = if n > config.fingerprint_above {
            KMode::Fingerprint {
                prime_count: 3,
                seed: config.seed,
            }
        } else {
            KMode::Exact
        };
        let options = IsoOptions {
            mode,
            ..Default::default()
        };
        let mut timings = Vec::with_capacity(config.instances_per_n);
        let mut iso_count = 0;
        for instance in 0..config.instances_per_n {
            let instance_seed = config
                .seed
                .wrapping_add((n as u64) << 20)
                .wrapping_add(instance as u64);
            let g = random_connected(n, 0.3, instance_seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed ^ 0xABCD);
            let p = Permutation::random(n, &mut rng);
            let gp = g.permute(&p)?;
            let started = Instant::now();
            let result = algorithm1_with(&g, &gp, &options)?;
            timings.push(started.elapsed().as_secs_f64() * 1e3);
            if result.verdict == Verdict::Isomorphic {
                iso_count += 1;
            }
        }
        rows.push(BenchRow {
            n,
            mode: match mode {
                KMode::Exact => "exact".into(),
                KMode::Fingerprint { .. } => "fingerprint".into(),
            },
            median_millis: median(&timings),
            timings_millis: timings,
            verdicts_isomorphic: iso_count,
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.n as f64, r.median_millis.max(1e-6)))
        .collect();
    Ok(BenchReport {
        loglog_slope: fit_loglog_slope(&points),
        rows,
        seed: config.seed,
    })
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 0 {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    } else {
        sorted[mid]
    }
}

/// Least-squares slope of ln(y) on ln(x). `None` if fewer than two
/// distinct x values.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    Some(sxy / sxx)
}
