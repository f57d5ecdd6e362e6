//! The uniform `sample` entry point shared by every method.

mod spec;

pub use spec::{Budget, Family, Method, ParamDef, ParamValue, Range, SamplerSpec, DEFAULT_SEED};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exploration;
use crate::graph::{validate, Graph, Subgraph};
use crate::rng::RandomSource;
use crate::{edge, node};

/// Requested sample size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetSize {
    Nodes(usize),
    Edges(usize),
    /// Share of nodes (or of edges, for edge-budget methods), in `(0, 1]`.
    Fraction(f64),
}

impl TargetSize {
    /// Count this target asks of `method` on `graph`. Fractions round to the
    /// nearest count, minimum 1.
    pub fn resolve(self, method: Method, graph: &Graph) -> Result<usize> {
        let (available, unit) = match method.budget() {
            Budget::Nodes => (graph.node_count(), "nodes"),
            Budget::Edges => (graph.edge_count(), "edges"),
        };
        let count = match (self, method.budget()) {
            (TargetSize::Fraction(f), _) => {
                if !(f > 0.0 && f <= 1.0) {
                    return Err(Error::argument(format!("fraction {f} is outside (0, 1]")));
                }
                ((f * available as f64).round() as usize).max(1)
            }
            (TargetSize::Nodes(t), Budget::Nodes) | (TargetSize::Edges(t), Budget::Edges) => t,
            (TargetSize::Nodes(_), Budget::Edges) => {
                return Err(Error::argument(format!(
                    "{method} takes an edge target, not a node target"
                )))
            }
            (TargetSize::Edges(_), Budget::Nodes) => {
                return Err(Error::argument(format!(
                    "{method} takes a node target, not an edge target"
                )))
            }
        };
        if count == 0 {
            return Err(Error::argument("target size must be at least 1"));
        }
        if count > available {
            return Err(Error::argument(format!(
                "target of {count} {unit} exceeds the {available} available"
            )));
        }
        Ok(count)
    }
}

/// A sampled graph plus what produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleResult {
    pub subgraph: Subgraph,
    pub method: Method,
    pub seed: u64,
    pub params: BTreeMap<String, ParamValue>,
    /// Resolved budget (nodes or edges, per the method).
    pub target: usize,
    pub warnings: Vec<String>,
}

/// Self-describing summary written next to sampled edge lists.
#[derive(Debug, Clone, Serialize)]
pub struct SampleMetadata<'a> {
    pub method: Method,
    pub seed: u64,
    pub params: &'a BTreeMap<String, ParamValue>,
    pub target: usize,
    pub nodes: usize,
    pub edges: usize,
    pub isolated_nodes: Vec<usize>,
    pub warnings: &'a [String],
    pub generator: &'static str,
}

impl SampleResult {
    pub fn nodes_sampled(&self) -> usize {
        self.subgraph.node_count()
    }

    pub fn edges_sampled(&self) -> usize {
        self.subgraph.edge_count()
    }

    pub fn metadata(&self) -> SampleMetadata<'_> {
        SampleMetadata {
            method: self.method,
            seed: self.seed,
            params: &self.params,
            target: self.target,
            nodes: self.nodes_sampled(),
            edges: self.edges_sampled(),
            isolated_nodes: self.subgraph.isolated_nodes(),
            warnings: &self.warnings,
            generator: crate::rng::GENERATOR,
        }
    }

    /// One-line JSON form of [`metadata`](Self::metadata).
    pub fn metadata_json(&self) -> String {
        serde_json::to_string(&self.metadata()).expect("metadata serializes")
    }
}

/// Validates `graph`, resolves `target`, and runs the method with a fresh
/// random source seeded from the spec.
pub fn sample(spec: &SamplerSpec, graph: &Graph, target: TargetSize) -> Result<SampleResult> {
    validate(graph)?;
    let count = target.resolve(spec.method(), graph)?;
    let mut rng = RandomSource::new(spec.seed());
    let mut warnings = Vec::new();
    let subgraph = run(spec, graph, count, &mut rng, &mut warnings)?;
    Ok(SampleResult {
        subgraph,
        method: spec.method(),
        seed: spec.seed(),
        params: spec.describe(),
        target: count,
        warnings,
    })
}

fn run(
    spec: &SamplerSpec,
    graph: &Graph,
    count: usize,
    rng: &mut RandomSource,
    warnings: &mut Vec<String>,
) -> Result<Subgraph> {
    use exploration::{search, walk};
    let guard = || walk::StuckGuard::new(spec.method().as_str(), spec.count("stuck_factor"), graph);
    match spec.method() {
        Method::Rn => node::uniform(graph, count, rng),
        Method::Rdn => node::degree_weighted(graph, count, rng),
        Method::Prn => {
            let (sub, warning) = node::pagerank_weighted(graph, count, rng)?;
            warnings.extend(warning);
            Ok(sub)
        }
        Method::Re => edge::uniform(graph, count, rng),
        Method::Rne => edge::node_edge(graph, count, guard(), rng),
        Method::Hrne => edge::hybrid_node_edge(graph, count, spec.real("q"), guard(), rng),
        Method::Ties => edge::total_induction(graph, count, rng),
        Method::Pies => edge::partial_induction(graph, count, rng),
        Method::Bfs => search::breadth_first(graph, count, rng),
        Method::Dfs => search::depth_first(graph, count, rng),
        Method::Sb => search::snowball(
            graph,
            count,
            spec.count("k"),
            spec.count("max_rekindles"),
            rng,
        ),
        Method::Ff => search::forest_fire(
            graph,
            count,
            spec.real("p"),
            spec.count("max_rekindles"),
            rng,
        ),
        Method::Cse => search::community_expansion(graph, count, rng),
        Method::Rnn => search::node_neighbor(graph, count, rng),
        Method::Sp => search::shortest_paths(graph, count, guard(), rng),
        Method::Rw => walk::walk_sample(graph, count, walk::Simple, guard(), rng),
        Method::Mhrw => walk::walk_sample(
            graph,
            count,
            walk::Metropolis::new(spec.real("alpha")),
            guard(),
            rng,
        ),
        Method::Rcmhrw => walk::walk_sample(
            graph,
            count,
            walk::RejectionConstrained::new(spec.real("alpha")),
            guard(),
            rng,
        ),
        Method::Nbtrw => walk::walk_sample(graph, count, walk::NonBacktracking, guard(), rng),
        Method::Cnrw => walk::walk_sample(graph, count, walk::Circulated::default(), guard(), rng),
        Method::Rwj => walk::walk_sample(
            graph,
            count,
            walk::Jump::new(spec.real("p_jump")),
            guard(),
            rng,
        ),
        Method::Cnarw => walk::walk_sample(
            graph,
            count,
            walk::CommonNeighborAware::default(),
            guard(),
            rng,
        ),
        Method::Rwr => walk::walk_sample(
            graph,
            count,
            walk::Restart::new(spec.real("p_restart")),
            guard(),
            rng,
        ),
        Method::Frw => exploration::frontier(graph, count, spec.count("walkers"), guard(), rng),
        Method::Lerw => exploration::loop_erased(graph, count, guard(), rng),
    }
}
