mod report;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use iso_core::graph::{
    encode_graph6, named, parse_edge_list, parse_graph6, random_connected, random_regular,
    write_edge_list, Graph, GraphKind,
};
use iso_core::oracle::DEFAULT_ORACLE_LIMIT;
use iso_core::{
    algorithm1_with, rational_string, topo_index, BenchConfig, HuntConfig, IsoOptions, KMode,
    PairStrategy, Verdict,
};
use report::{RunReport, Timings};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_NOT_ISOMORPHIC: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_STRICT_DISCREPANCY: u8 = 3;

/// Graph isomorphism testing via exact vertex-weight linear systems.
///
/// JSON reports go to stdout; human-readable summaries go to stderr.
#[derive(Parser)]
#[command(name = "iso", version)]
struct Cli {
    /// Worker threads for hunt/bench (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Iso,
    Near,
    Hard,
}

#[derive(Subcommand)]
enum Command {
    /// Test two graph files for isomorphism (exit 0 isomorphic, 1 not).
    Test {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Input format; auto-detected from the extension by default
        /// (.g6 -> graph6, anything else -> edge list).
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Compare k-values by multi-modular fingerprints (faster at
        /// large n); the final mapping is still verified exactly.
        #[arg(long)]
        fingerprint: bool,
        /// Seed for the fingerprint prime draw.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the exact sorted-weight topological index of a graph.
    Index {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Time the full test on constructed isomorphic pairs across sizes
    /// and report the fitted log-log slope.
    Bench {
        /// Comma-separated list of sizes, e.g. 16,32,64.
        #[arg(long = "n", value_delimiter = ',', default_values_t = vec![16usize, 32, 64])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sizes above this threshold use fingerprint mode.
        #[arg(long, default_value_t = 64)]
        fingerprint_above: usize,
    },
    /// Sweep generated graph pairs against available ground truth and
    /// record every disagreement.
    Hunt {
        #[arg(long, value_enum)]
        strategy: Strategy,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        nmin: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cross-check against the brute-force oracle where feasible.
        #[arg(long)]
        exhaustive_oracle: bool,
        /// Exit 3 if any false negative is found.
        #[arg(long)]
        strict: bool,
    },
    /// Generate a graph and write it to a file or stdout.
    Gen {
        /// Named graph: k2, path(n), cycle(n), petersen, k33, prism,
        /// rook44, shrikhande.
        #[arg(long, conflicts_with_all = ["random_connected", "random_regular"])]
        named: Option<String>,
        /// Random connected graph: N EDGE_PROB.
        #[arg(long, num_args = 2, value_names = ["N", "P"])]
        random_connected: Option<Vec<String>>,
        /// Random d-regular graph: N D.
        #[arg(long, num_args = 2, value_names = ["N", "D"])]
        random_regular: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: Format,
        /// Output file; stdout if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn detect_format(path: &Path, explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    })
}

fn load_graph(path: &Path, format: Option<Format>) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let graph = match detect_format(path, format) {
        Format::EdgeList => parse_edge_list(&text),
        Format::Graph6 => parse_graph6(&text),
    }
    .with_context(|| format!("parsing {}", path.display()))?;
    Ok(graph)
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Test {
            file_a,
            file_b,
            format,
            fingerprint,
            seed,
        } => cmd_test(&file_a, &file_b, format, fingerprint, seed),
        Command::Index { file, format } => cmd_index(&file, format),
        Command::Bench {
            sizes,
            instances,
            seed,
            fingerprint_above,
        } => cmd_bench(sizes, instances, seed, fingerprint_above),
        Command::Hunt {
            strategy,
            count,
            nmin,
            nmax,
            seed,
            exhaustive_oracle,
            strict,
        } => cmd_hunt(strategy, count, nmin, nmax, seed, exhaustive_oracle, strict),
        Command::Gen {
            named,
            random_connected,
            random_regular,
            seed,
            format,
            output,
        } => cmd_gen(named, random_connected, random_regular, seed, format, output),
    }
}

fn cmd_test(
    file_a: &Path,
    file_b: &Path,
    format: Option<Format>,
    fingerprint: bool,
    seed: u64,
) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let g = load_graph(file_a, format)?;
    let gp = load_graph(file_b, format)?;
    let options = IsoOptions {
        mode: if fingerprint {
            KMode::Fingerprint {
                prime_count: 3,
                seed,
            }
        } else {
            KMode::Exact
        },
        ..Default::default()
    };
    let result = algorithm1_with(&g, &gp, &options)?;

    let mut report = RunReport::new(
        "test",
        vec![file_a.display().to_string(), file_b.display().to_string()],
    );
    report.timings_ms = Timings {
        total: started.elapsed().as_secs_f64() * 1e3,
        kmatrix: Some(result.stats.kmatrix_millis),
        refine: Some(result.stats.refine_millis),
    };
    report.result = json!({
        "verdict": result.verdict,
        "mapping": result.mapping.as_ref().map(|m| m.as_slice().to_vec()),
        "tried_pairs": result.tried_pairs,
        "stats": result.stats,
        "mode": if fingerprint { "fingerprint" } else { "exact" },
    });
    report.emit();

    match result.verdict {
        Verdict::Isomorphic => {
            eprintln!("G \u{2245} G'");
            Ok(ExitCode::SUCCESS)
        }
        Verdict::NotIsomorphic => {
            eprintln!("G \u{2247} G'");
            Ok(ExitCode::from(EXIT_NOT_ISOMORPHIC))
        }
    }
}

fn cmd_index(file: &Path, format: Option<Format>) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let g = load_graph(file, format)?;
    if !g.is_connected() {
        anyhow::bail!(iso_core::Error::Disconnected);
    }
    let index = topo_index(&g)?;
    let strings: Vec<String> = index.iter().map(rational_string).collect();

    let mut report = RunReport::new("index", vec![file.display().to_string()]);
    report.timings_ms.total = started.elapsed().as_secs_f64() * 1e3;
    report.result = json!({ "topological_index": strings });
    report.emit();
    eprintln!("index computed for n = {} vertices", g.n());
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    sizes: Vec<usize>,
    instances: usize,
    seed: u64,
    fingerprint_above: usize,
) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let bench = iso_core::run_bench(&BenchConfig {
        sizes,
        instances_per_n: instances,
        seed,
        fingerprint_above,
    })?;

    let mut report = RunReport::new("bench", vec![]);
    report.seed = Some(seed);
    report.timings_ms.total = started.elapsed().as_secs_f64() * 1e3;
    report.result = serde_json::to_value(&bench)?;
    report.emit();
    for row in &bench.rows {
        eprintln!(
            "n = {:>4} [{}]: median {:.2} ms",
            row.n, row.mode, row.median_millis
        );
    }
    match bench.loglog_slope {
        Some(slope) => eprintln!("fitted log-log slope: {slope:.2}"),
        None => eprintln!("not enough sizes to fit a slope"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hunt(
    strategy: Strategy,
    count: usize,
    nmin: usize,
    nmax: usize,
    seed: u64,
    exhaustive_oracle: bool,
    strict: bool,
) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let hunt_report = iso_core::hunt(&HuntConfig {
        strategy: match strategy {
            Strategy::Iso => PairStrategy::Iso,
            Strategy::Near => PairStrategy::Near,
            Strategy::Hard => PairStrategy::Hard,
        },
        n_min: nmin,
        n_max: nmax,
        instance_count: count,
        seed,
        exhaustive_oracle,
        oracle_limit: DEFAULT_ORACLE_LIMIT,
    })?;

    let mut report = RunReport::new("hunt", vec![]);
    report.seed = Some(seed);
    report.timings_ms.total = started.elapsed().as_secs_f64() * 1e3;
    report.result = serde_json::to_value(&hunt_report)?;
    report.emit();
    eprintln!(
        "{} instances: {} agree, {} false positives, {} false negatives",
        hunt_report.instances_tested,
        hunt_report.agreements,
        hunt_report.false_positives,
        hunt_report.false_negatives
    );
    if hunt_report.false_positives > 0 {
        // structurally impossible unless the implementation is broken
        anyhow::bail!("false positives recorded; this is an implementation bug");
    }
    if strict && hunt_report.false_negatives > 0 {
        eprintln!("strict mode: failing on false negatives");
        return Ok(ExitCode::from(EXIT_STRICT_DISCREPANCY));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(
    named_spec: Option<String>,
    random_connected_spec: Option<Vec<String>>,
    random_regular_spec: Option<Vec<String>>,
    seed: u64,
    format: Format,
    output: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    let (g, spec) = if let Some(name) = named_spec {
        let kind = GraphKind::parse_named(&name)?;
        (named(&kind)?, format!("named({name})"))
    } else if let Some(args) = random_connected_spec {
        let n: usize = args[0].parse().context("N must be an integer")?;
        let p: f64 = args[1].parse().context("P must be a number")?;
        (random_connected(n, p, seed)?, format!("random_connected({n}, {p})"))
    } else if let Some(args) = random_regular_spec {
        let n: usize = args[0].parse().context("N must be an integer")?;
        let d: usize = args[1].parse().context("D must be an integer")?;
        (random_regular(n, d, seed)?, format!("random_regular({n}, {d})"))
    } else {
        anyhow::bail!("one of --named, --random-connected, --random-regular is required");
    };

    let text = match format {
        Format::EdgeList => write_edge_list(&g),
        Format::Graph6 => format!("{}\n", encode_graph6(&g)),
    };
    match &output {
        Some(path) => std::fs::write(path, &text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    eprintln!("generated {spec}: n = {}, m = {}", g.n(), g.m());
    Ok(ExitCode::SUCCESS)
}
