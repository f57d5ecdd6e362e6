//! Node samplers: choose a vertex set, return its induced subgraph.

use crate::error::Result;
use crate::graph::{induced_subgraph, pagerank, Graph, NodeId, PageRankConfig, Subgraph};
use crate::rng::RandomSource;

/// `target` nodes uniformly without replacement.
pub fn uniform(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let mut nodes: Vec<NodeId> = graph.nodes().collect();
    let chosen = rng.partial_shuffle(&mut nodes, target);
    induced_subgraph(graph, chosen)
}

/// Sequential draws without replacement, each proportional to degree among
/// the nodes not yet drawn.
pub fn degree_weighted(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let weights: Vec<f64> = graph.nodes().map(|v| graph.degree(v) as f64).collect();
    let chosen = successive_draws(weights, target, rng);
    induced_subgraph(graph, &chosen)
}

/// As [`degree_weighted`] with PageRank scores (default settings) as weights.
/// The second value carries the PageRank non-convergence warning, if any.
pub fn pagerank_weighted(
    graph: &Graph,
    target: usize,
    rng: &mut RandomSource,
) -> Result<(Subgraph, Option<String>)> {
    let pr = pagerank(graph, PageRankConfig::default());
    let warning = pr.warning();
    let chosen = successive_draws(pr.scores, target, rng);
    Ok((induced_subgraph(graph, &chosen)?, warning))
}

/// Draws `count` distinct indices; each draw is proportional to the weight
/// among those remaining. If every remaining weight is zero the rest are
/// drawn uniformly.
pub(crate) fn successive_draws(
    mut weights: Vec<f64>,
    count: usize,
    rng: &mut RandomSource,
) -> Vec<usize> {
    let mut taken = vec![false; weights.len()];
    let mut chosen = Vec::with_capacity(count);
    while chosen.len() < count {
        let pick = match rng.weighted_index(&weights) {
            Some(i) => i,
            None => {
                let rest: Vec<usize> = (0..weights.len()).filter(|&i| !taken[i]).collect();
                rest[rng.below(rest.len())]
            }
        };
        taken[pick] = true;
        weights[pick] = 0.0;
        chosen.push(pick);
    }
    chosen
}
