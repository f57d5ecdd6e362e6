//! Command-line front end. Exit codes: 0 success, 2 usage error,
//! 3 invalid input graph, 4 sampling or generation failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result, ValidationError, ValidationKind};
use crate::graph::{self, Graph};
use crate::rng::RandomSource;
use crate::sampler::{sample, Method, SamplerSpec, TargetSize, DEFAULT_SEED};
use crate::stats::{self, Statistic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_SAMPLING: i32 = 4;

const ALL_STATS: &str = "transitivity,avgdeg,degcorr";

#[derive(Debug, Parser)]
#[command(
    name = "graphsample",
    version,
    about = "Seeded sampling of undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a synthetic graph as an edge list.
    Generate(GenerateArgs),
    /// Sample a graph and write the sample as an edge list.
    Sample(SampleArgs),
    /// Print descriptive statistics of an edge list.
    Stats(StatsArgs),
    /// Estimate statistics from repeated seeded samples.
    Estimate(EstimateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Model {
    WattsStrogatz,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum, default_value = "watts-strogatz")]
    model: Model,
    #[arg(long)]
    nodes: usize,
    /// Ring neighbors per node (even).
    #[arg(long)]
    k: usize,
    /// Rewiring probability.
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
#[group(id = "size", required = true, multiple = false, args = ["fraction", "nodes", "edges"])]
struct SizeArgs {
    /// Share of nodes (of edges for re, rne, hrne) to keep.
    #[arg(long)]
    fraction: Option<f64>,
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    edges: Option<usize>,
}

impl SizeArgs {
    fn target(&self) -> TargetSize {
        match (self.fraction, self.nodes, self.edges) {
            (Some(f), _, _) => TargetSize::Fraction(f),
            (_, Some(n), _) => TargetSize::Nodes(n),
            (_, _, Some(e)) => TargetSize::Edges(e),
            _ => unreachable!("clap enforces exactly one size flag"),
        }
    }
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long)]
    method: String,
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    size: SizeArgs,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Hyperparameter override, `key=value`; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated subset of transitivity, avgdeg, degcorr.
    #[arg(long, default_value = ALL_STATS)]
    stats: String,
}

#[derive(Debug, Args)]
struct EstimateArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    method: String,
    #[arg(long, default_value_t = 0.5)]
    fraction: f64,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    runs: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value = ALL_STATS)]
    stats: String,
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Validation(_) | Error::Parse { .. } => EXIT_VALIDATION,
        Error::Argument(_) | Error::Io(_) => EXIT_USAGE,
        Error::Sampling { .. }
        | Error::Generation(_)
        | Error::Harness(_)
        | Error::DegenerateStatistic(_) => EXIT_SAMPLING,
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => generate(a, out),
        Command::Sample(a) => sample_cmd(a, out),
        Command::Stats(a) => stats_cmd(a, out),
        Command::Estimate(a) => estimate_cmd(a, out),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn generate(args: GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let Model::WattsStrogatz = args.model;
    let mut rng = RandomSource::new(args.seed);
    let g = graph::watts_strogatz(args.nodes, args.k, args.p, &mut rng)?;
    let mut file = BufWriter::new(File::create(&args.output)?);
    graph::write_edge_list(&mut file, g.edges())?;
    file.flush()?;
    writeln!(
        out,
        "{}",
        serde_json::json!({
            "model": "watts-strogatz",
            "nodes": g.node_count(),
            "edges": g.edge_count(),
            "seed": args.seed,
        })
    )?;
    Ok(())
}

fn build_spec(method: &str, seed: u64, params: &[String]) -> Result<SamplerSpec> {
    let method: Method = method.parse()?;
    let mut spec = SamplerSpec::new(method).with_seed(seed);
    for kv in params {
        let (key, value) = kv
            .split_once('=')
            .ok_or_else(|| Error::argument(format!("--param expects key=value, got {kv:?}")))?;
        spec = spec.with_param_str(key.trim(), value.trim())?;
    }
    Ok(spec)
}

fn parse_stats(list: &str) -> Result<Vec<Statistic>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(Error::argument("no statistics requested"))
            } else {
                Ok(v)
            }
        })
}

fn sample_cmd(args: SampleArgs, out: &mut dyn Write) -> Result<()> {
    let spec = build_spec(&args.method, args.seed, &args.params)?;
    let g = graph::load_edge_list(&args.input)?;
    let result = sample(&spec, &g, args.size.target())?;
    let mut file = BufWriter::new(File::create(&args.output)?);
    result.subgraph.write_edge_list(&mut file)?;
    file.flush()?;
    writeln!(out, "{}", result.metadata_json())?;
    Ok(())
}

/// Graph spanned by the listed edges. Sampled edge lists keep original ids,
/// so ids may have gaps; nodes with no listed edge are not part of the graph.
fn load_for_stats(path: &PathBuf) -> Result<Graph> {
    let pairs = graph::read_edge_pairs(File::open(path)?)?;
    if pairs.is_empty() {
        return Err(ValidationError::new(ValidationKind::Empty, "edge list has no edges").into());
    }
    // reject self-loops and duplicates exactly as a normal load would
    Graph::from_edge_list(&pairs)?;
    Ok(graph::graph_from_edges(&pairs)?.graph)
}

fn stats_cmd(args: StatsArgs, out: &mut dyn Write) -> Result<()> {
    let wanted = parse_stats(&args.stats)?;
    let g = load_for_stats(&args.input)?;
    for st in wanted {
        match st.compute(&g) {
            Ok(x) => writeln!(out, "{} {x:.6}", st.short_name())?,
            Err(Error::DegenerateStatistic(_)) => writeln!(out, "{} degenerate", st.short_name())?,
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn estimate_cmd(args: EstimateArgs, out: &mut dyn Write) -> Result<()> {
    let spec = build_spec(&args.method, args.seed, &args.params)?;
    let wanted = parse_stats(&args.stats)?;
    let g = graph::load_edge_list(&args.input)?;
    let runs = usize::try_from(args.runs).map_err(|_| Error::argument("too many runs"))?;
    let reports = stats::estimate(
        &g,
        &spec,
        TargetSize::Fraction(args.fraction),
        runs,
        &wanted,
    )?;
    for r in &reports {
        writeln!(out, "{}", r.to_record(spec.method().as_str()))?;
    }
    Ok(())
}
