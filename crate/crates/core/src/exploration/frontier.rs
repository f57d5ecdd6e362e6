use super::walk::StuckGuard;
use crate::error::{Error, Result};
use crate::graph::{graph_from_edges, random_neighbor, Graph, NodeId, Subgraph};
use crate::rng::RandomSource;

/// Index of the walker to move next, proportional to the degree of its
/// position. A single walker is chosen without consuming randomness.
pub fn pick_walker(graph: &Graph, positions: &[NodeId], rng: &mut RandomSource) -> usize {
    if positions.len() == 1 {
        return 0;
    }
    let weights: Vec<f64> = positions.iter().map(|&v| graph.degree(v) as f64).collect();
    rng.weighted_index(&weights)
        .expect("walkers sit on non-isolated nodes")
}

/// Traversed edges, in traversal order with repeats, until their endpoints
/// cover at least `target` nodes.
pub fn frontier_edges(
    graph: &Graph,
    target: usize,
    walkers: usize,
    mut guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Vec<(NodeId, NodeId)>> {
    let n = graph.node_count();
    if walkers == 0 || walkers > n {
        return Err(Error::argument(format!(
            "frw needs between 1 and {n} walkers, got {walkers}"
        )));
    }
    let mut all: Vec<NodeId> = graph.nodes().collect();
    let mut positions = rng.partial_shuffle(&mut all, walkers).to_vec();
    let mut touched = vec![false; n];
    let mut touched_count = 0;
    let mut traversed = Vec::new();
    while touched_count < target {
        let i = pick_walker(graph, &positions, rng);
        let from = positions[i];
        let to = random_neighbor(graph, from, rng);
        positions[i] = to;
        traversed.push((from, to));
        let before = touched_count;
        for v in [from, to] {
            if !touched[v] {
                touched[v] = true;
                touched_count += 1;
            }
        }
        guard.tick(touched_count > before, || {
            format!("{touched_count} of {target} nodes touched")
        })?;
    }
    Ok(traversed)
}

/// Frontier of `walkers` random walkers started at distinct uniform nodes;
/// returns the graph spanned by the traversed edges. The final edge can
/// overshoot `target` by one node.
pub fn frontier(
    graph: &Graph,
    target: usize,
    walkers: usize,
    guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    let traversed = frontier_edges(graph, target, walkers, guard, rng)?;
    graph_from_edges(&traversed)
}
