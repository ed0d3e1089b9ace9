//! Command-line front end: classical and quantum walk series, Trotterized
//! walks, Feynman kernel grids, spatial search and state-transfer reports,
//! emitted as CSV or JSON with a reproducibility manifest.
//!
//! Exit codes: 0 success, 2 usage, 3 input validation, 4 numerical failure.

mod manifest;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphwalk::classical::classical_walk_series;
use graphwalk::ctqw::{detect_state_transfer, quantum_walk_series, WalkConfig};
use graphwalk::graphs::{Family, Graph};
use graphwalk::kernel::{
    formula_diagnostic, interval_eigs, interval_hamiltonian, numeric_eigs, ring_eigs, spectral_kernel,
    EigenKind, KernelGrid,
};
use graphwalk::search::{search_series, SearchConfig};
use graphwalk::trotter::{trotter_walk_series, TrotterConfig};
use graphwalk::{TimeSeries, WalkError};
use manifest::RunManifest;
use output::{fmt_sig, OutputSink};

#[derive(Parser)]
#[command(name = "graphwalk", version, about = "Graph walks, kernels and spatial search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical path-counting walk probabilities per integer step
    Cwalk(CwalkArgs),
    /// Continuous-time quantum walk (exact or Trotterized)
    Qwalk(QwalkArgs),
    /// Feynman propagator grid (|K|^2, optionally raw complex K)
    Kernel(KernelArgs),
    /// Continuous-time spatial search for a target vertex
    Search(SearchArgs),
    /// State-transfer peak detection
    Transfer(TransferArgs),
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// Graph family as kind:n, e.g. cycle:8, path:2, complete:4, star:5
    #[arg(long, value_name = "KIND:N", conflicts_with = "graph_file")]
    family: Option<String>,
    /// Adjacency matrix text file (rows of 0/1, '#' comments)
    #[arg(long, value_name = "PATH")]
    graph_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output file; stdout when omitted. Relative paths resolve against
    /// $GRAPHWALK_OUT_DIR when that is set.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct CwalkArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Starting vertex (0-based)
    #[arg(long)]
    start: usize,
    /// Number of integer time steps
    #[arg(long, default_value_t = 10)]
    t_max: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Trotter,
}

#[derive(Args)]
struct QwalkArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Starting vertex (0-based)
    #[arg(long, default_value_t = 0)]
    start: usize,
    #[arg(long, default_value_t = 10.0)]
    t_max: f64,
    /// Number of grid intervals (exact mode; rows = steps + 1 incl. t = 0)
    #[arg(long, default_value_t = 200)]
    steps: usize,
    /// Measurements per time sample; 0 = exact probabilities
    #[arg(long, default_value_t = 1000)]
    shots: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    method: Method,
    /// Trotter expansion order (3 maps to the Suzuki order-4 recursion)
    #[arg(long, default_value_t = 3)]
    order: u32,
    /// Trotter time slices per unit time
    #[arg(long, default_value_t = 10)]
    slices: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Ring,
    Interval,
    Numeric,
}

#[derive(Args)]
struct KernelArgs {
    /// Eigen-system source: the printed ring/interval closed forms, or the
    /// numerically diagonalized interval operator
    #[arg(long, value_enum)]
    kind: Kind,
    /// Number of lattice sites
    #[arg(long)]
    n: usize,
    /// Source site x0 (0-based)
    #[arg(long, default_value_t = 0)]
    source: usize,
    #[arg(long, default_value_t = 25.0)]
    t_max: f64,
    #[arg(long, default_value_t = 250)]
    steps: usize,
    /// Explicit comma-separated times overriding --t-max/--steps
    #[arg(long)]
    times: Option<String>,
    /// Also dump raw complex K as Re/Im column pairs
    #[arg(long)]
    complex: bool,
    /// Use the plain path adjacency instead of the Neumann interval
    /// Laplacian for --kind numeric
    #[arg(long)]
    adjacency: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Target vertex (0-based)
    #[arg(long)]
    target: usize,
    /// Hopping rate; defaults to 1/n (the tuned value for complete graphs)
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, default_value_t = 10.0)]
    t_max: f64,
    #[arg(long, default_value_t = 200)]
    steps: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TransferArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Starting vertex (0-based)
    #[arg(long, default_value_t = 0)]
    start: usize,
    #[arg(long, default_value_t = 0.999)]
    threshold: f64,
    #[arg(long, default_value_t = 25.0)]
    t_max: f64,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Walk(WalkError::Singular(_)) | CliError::Walk(WalkError::Degenerate(_)) => 4,
        CliError::Walk(_) => 3,
        CliError::Io(_) => 3,
    }
}

/// Resolves --family / --graph-file into a graph plus the manifest's
/// input description and digest.
fn load_graph(args: &GraphArgs) -> Result<(Graph, String, Option<String>), CliError> {
    if let Some(spec) = &args.family {
        let (kind, n) = spec.split_once(':').ok_or_else(|| {
            WalkError::Validation(format!("family `{spec}` must look like cycle:8"))
        })?;
        let kind: Family = kind.parse()?;
        let n: usize = n
            .parse()
            .map_err(|_| WalkError::Validation(format!("bad vertex count `{n}`")))?;
        Ok((Graph::family(kind, n)?, spec.clone(), None))
    } else if let Some(path) = &args.graph_file {
        let bytes = std::fs::read(path)?;
        let text = String::from_utf8_lossy(&bytes);
        let g = Graph::parse_adjacency(&text)?;
        Ok((
            g,
            path.display().to_string(),
            Some(manifest::sha256_hex(&bytes)),
        ))
    } else {
        Err(WalkError::Validation("one of --family or --graph-file is required".into()).into())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Cwalk(a) => {
            let (g, input, digest) = load_graph(&a.graph)?;
            let series = classical_walk_series(&g, a.start, a.t_max)?;
            let m = RunManifest::new("cwalk", None, digest)
                .param("graph", &input)
                .param("start", a.start)
                .param("t_max", a.t_max);
            emit_series(&a.out, &series, &m, &[])
        }
        Command::Qwalk(a) => {
            let (g, input, digest) = load_graph(&a.graph)?;
            let series = match a.method {
                Method::Exact => {
                    let cfg = WalkConfig {
                        start: a.start,
                        t_max: a.t_max,
                        steps: a.steps,
                        shots: a.shots,
                        seed: a.seed,
                    };
                    quantum_walk_series(&g, &cfg)?
                }
                Method::Trotter => {
                    let cfg = TrotterConfig {
                        order: a.order,
                        slices_per_unit_time: a.slices,
                        total_time: a.t_max,
                    };
                    trotter_walk_series(&g, &cfg, a.start)?
                }
            };
            let m = RunManifest::new("qwalk", Some(a.seed), digest)
                .param("graph", &input)
                .param("start", a.start)
                .param("t_max", a.t_max)
                .param("steps", a.steps)
                .param("shots", a.shots)
                .param(
                    "method",
                    match a.method {
                        Method::Exact => "exact",
                        Method::Trotter => "trotter",
                    },
                )
                .param("order", a.order)
                .param("slices", a.slices);
            emit_series(&a.out, &series, &m, &[])
        }
        Command::Kernel(a) => run_kernel(a),
        Command::Search(a) => {
            let (g, input, digest) = load_graph(&a.graph)?;
            let gamma = a.gamma.unwrap_or_else(|| SearchConfig::default_gamma(g.n()));
            let cfg = SearchConfig { target: a.target, gamma, t_max: a.t_max, steps: a.steps };
            let (series, summary) = search_series(&g, &cfg)?;
            let m = RunManifest::new("search", None, digest)
                .param("graph", &input)
                .param("target", a.target)
                .param("gamma", gamma)
                .param("t_max", a.t_max)
                .param("steps", a.steps);
            let summary_line = format!(
                "# t_star,p_star = {},{}",
                fmt_sig(summary.t_star),
                fmt_sig(summary.p_star)
            );
            eprintln!("t_star,p_star = {},{}", fmt_sig(summary.t_star), fmt_sig(summary.p_star));
            emit_series(&a.out, &series, &m, &[summary_line])
        }
        Command::Transfer(a) => {
            let (g, input, digest) = load_graph(&a.graph)?;
            let events = detect_state_transfer(&g, a.start, a.t_max, a.threshold)?;
            let m = RunManifest::new("transfer", None, digest)
                .param("graph", &input)
                .param("start", a.start)
                .param("threshold", a.threshold)
                .param("t_max", a.t_max);
            let mut sink = OutputSink::open(&a.out.output)?;
            match a.out.format {
                Format::Csv => {
                    sink.line(&format!("# manifest: {}", m.to_json()))?;
                    sink.line("vertex,time,peak")?;
                    for e in &events {
                        // 1-based labels to match the plot legends
                        sink.line(&format!(
                            "{},{},{}",
                            e.vertex + 1,
                            fmt_sig(e.time),
                            fmt_sig(e.peak)
                        ))?;
                    }
                }
                Format::Json => {
                    let rows: Vec<serde_json::Value> = events
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "vertex": e.vertex + 1,
                                "time": e.time,
                                "peak": e.peak,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({ "manifest": m, "events": rows });
                    sink.line(&serde_json::to_string_pretty(&doc).expect("json"))?;
                }
            }
            sink.finish(&m)
        }
    }
}

fn run_kernel(a: KernelArgs) -> Result<(), CliError> {
    let times: Vec<f64> = match &a.times {
        Some(list) => list
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| WalkError::Validation(format!("bad time `{s}`")))
            })
            .collect::<Result<_, _>>()?,
        None => graphwalk::series::linspace(a.t_max, a.steps),
    };
    let spec = match a.kind {
        Kind::Ring => ring_eigs(a.n)?,
        Kind::Interval => interval_eigs(a.n)?,
        Kind::Numeric => {
            if a.adjacency {
                numeric_eigs(&Graph::family(Family::Path, a.n)?.adjacency_matrix())?
            } else {
                numeric_eigs(&interval_hamiltonian(a.n))?
            }
        }
    };
    // the printed-formula diagnostic accompanies every closed-form run
    match a.kind {
        Kind::Ring => eprintln!("{}", formula_diagnostic(EigenKind::Ring, a.n)?),
        Kind::Interval => eprintln!("{}", formula_diagnostic(EigenKind::Interval, a.n)?),
        Kind::Numeric => {}
    }
    let grid = spectral_kernel(&spec, a.source, &times)?;
    let kind_name = match a.kind {
        Kind::Ring => "ring",
        Kind::Interval => "interval",
        Kind::Numeric => "numeric",
    };
    let m = RunManifest::new("kernel", None, None)
        .param("kind", kind_name)
        .param("n", a.n)
        .param("source", a.source)
        .param("times", times.len())
        .param("complex", a.complex)
        .param("adjacency", a.adjacency);
    emit_kernel(&a.out, &grid, a.complex, &m)
}

fn emit_series(
    out: &OutputArgs,
    series: &TimeSeries,
    m: &RunManifest,
    trailer: &[String],
) -> Result<(), CliError> {
    let mut sink = OutputSink::open(&out.output)?;
    match out.format {
        Format::Csv => {
            sink.line(&format!("# manifest: {}", m.to_json()))?;
            sink.line(&format!("t,{}", series.labels.join(",")))?;
            for (t, row) in series.times.iter().zip(&series.values) {
                let cells: Vec<String> = row.iter().map(|&v| fmt_sig(v)).collect();
                sink.line(&format!("{},{}", fmt_sig(*t), cells.join(",")))?;
            }
            for line in trailer {
                sink.line(line)?;
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "manifest": m,
                "times": series.times,
                "labels": series.labels,
                "values": series.values,
            });
            sink.line(&serde_json::to_string_pretty(&doc).expect("json"))?;
        }
    }
    sink.finish(m)
}

fn emit_kernel(
    out: &OutputArgs,
    grid: &KernelGrid,
    complex: bool,
    m: &RunManifest,
) -> Result<(), CliError> {
    let probs = grid.probabilities();
    let mut sink = OutputSink::open(&out.output)?;
    match out.format {
        Format::Csv => {
            sink.line(&format!("# manifest: {}", m.to_json()))?;
            let mut header: Vec<String> = vec!["t".into()];
            header.extend(probs.labels.iter().cloned());
            if complex {
                for l in &probs.labels {
                    header.push(format!("{l}_re"));
                    header.push(format!("{l}_im"));
                }
            }
            sink.line(&header.join(","))?;
            for (i, t) in grid.times.iter().enumerate() {
                let mut cells = vec![fmt_sig(*t)];
                cells.extend(probs.values[i].iter().map(|&v| fmt_sig(v)));
                if complex {
                    for k in &grid.values[i] {
                        cells.push(fmt_sig(k.re));
                        cells.push(fmt_sig(k.im));
                    }
                }
                sink.line(&cells.join(","))?;
            }
        }
        Format::Json => {
            let complex_rows: Option<Vec<Vec<[f64; 2]>>> = complex.then(|| {
                grid.values
                    .iter()
                    .map(|row| row.iter().map(|k| [k.re, k.im]).collect())
                    .collect()
            });
            let doc = serde_json::json!({
                "manifest": m,
                "times": grid.times,
                "labels": probs.labels,
                "values": probs.values,
                "kernel": complex_rows,
            });
            sink.line(&serde_json::to_string_pretty(&doc).expect("json"))?;
        }
    }
    sink.finish(m)
}
