//! Edge samplers. RE, RNE and HRNE budget edges and return the graph spanned
//! by the chosen edges; TIES and PIES budget nodes and add an induction step.

use std::collections::HashSet;

use crate::error::Result;
use crate::exploration::walk::StuckGuard;
use crate::graph::{graph_from_edges, induced_subgraph, random_neighbor, Graph, NodeId, Subgraph};
use crate::rng::RandomSource;

type Edge = (NodeId, NodeId);

fn canonical(u: NodeId, v: NodeId) -> Edge {
    (u.min(v), u.max(v))
}

/// `target` edges uniformly without replacement (partial shuffle).
pub fn uniform(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let mut edges = graph.edge_vec();
    let chosen = rng.partial_shuffle(&mut edges, target);
    graph_from_edges(chosen)
}

/// One node-edge draw: a uniform node, then a uniform edge incident to it.
pub fn node_edge_draw(graph: &Graph, rng: &mut RandomSource) -> Edge {
    let u = rng.below(graph.node_count());
    canonical(u, random_neighbor(graph, u, rng))
}

/// One uniform edge draw, with replacement across calls.
pub fn uniform_edge_draw(graph: &Graph, edges: &[Edge], rng: &mut RandomSource) -> Edge {
    debug_assert_eq!(edges.len(), graph.edge_count());
    edges[rng.below(edges.len())]
}

/// Repeats `draw` until `target` distinct edges are collected.
fn collect_distinct(
    target: usize,
    mut guard: StuckGuard,
    mut draw: impl FnMut() -> Edge,
) -> Result<Subgraph> {
    let mut seen = HashSet::with_capacity(target);
    let mut kept = Vec::with_capacity(target);
    while kept.len() < target {
        let e = draw();
        let fresh = seen.insert(e);
        if fresh {
            kept.push(e);
        }
        guard.tick(fresh, || {
            format!("{} of {target} distinct edges collected", kept.len())
        })?;
    }
    graph_from_edges(&kept)
}

/// Random node-edge sampling until `target` distinct edges.
pub fn node_edge(
    graph: &Graph,
    target: usize,
    guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    collect_distinct(target, guard.scaled_to_edges(graph), || {
        node_edge_draw(graph, rng)
    })
}

/// Each draw is a node-edge draw with probability `q`, otherwise a uniform
/// edge draw.
pub fn hybrid_node_edge(
    graph: &Graph,
    target: usize,
    q: f64,
    guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    let edges = graph.edge_vec();
    collect_distinct(target, guard.scaled_to_edges(graph), || {
        hybrid_draw(graph, &edges, q, rng)
    })
}

pub fn hybrid_draw(graph: &Graph, edges: &[Edge], q: f64, rng: &mut RandomSource) -> Edge {
    if rng.chance(q) {
        node_edge_draw(graph, rng)
    } else {
        uniform_edge_draw(graph, edges, rng)
    }
}

/// TIES: uniform edge draws (with replacement) add their endpoints until at
/// least `target` nodes are held; then every edge among them is added. The
/// last draw may overshoot the budget by one node.
pub fn total_induction(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let edges = graph.edge_vec();
    let mut held = vec![false; graph.node_count()];
    let mut nodes = Vec::with_capacity(target + 1);
    while nodes.len() < target {
        let (u, v) = uniform_edge_draw(graph, &edges, rng);
        for w in [u, v] {
            if !held[w] {
                held[w] = true;
                nodes.push(w);
            }
        }
    }
    induced_subgraph(graph, &nodes)
}

/// Which phase admitted an edge during partial induction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admission {
    /// Arrived while the node budget was open; its endpoints were added.
    Growth,
    /// Arrived after the budget closed; both endpoints were already held.
    Induced,
}

/// Record of one partial-induction pass.
#[derive(Debug, Clone)]
pub struct PartialInductionTrace {
    /// Edge stream order.
    pub stream: Vec<Edge>,
    pub admitted: Vec<(Edge, Admission)>,
}

/// Runs partial induction and returns the full trace.
pub fn partial_induction_trace(
    graph: &Graph,
    target: usize,
    rng: &mut RandomSource,
) -> PartialInductionTrace {
    let mut stream = graph.edge_vec();
    rng.shuffle(&mut stream);
    let mut held = vec![false; graph.node_count()];
    let mut held_count = 0;
    let mut admitted = Vec::new();
    for &(u, v) in &stream {
        if held_count < target {
            for w in [u, v] {
                if !held[w] {
                    held[w] = true;
                    held_count += 1;
                }
            }
            admitted.push(((u, v), Admission::Growth));
        } else if held[u] && held[v] {
            admitted.push(((u, v), Admission::Induced));
        }
    }
    PartialInductionTrace { stream, admitted }
}

/// PIES: edges arrive in a seeded uniform order. While fewer than `target`
/// nodes are held each arriving edge is kept with its endpoints; afterwards
/// an edge is kept only if both endpoints are already held.
pub fn partial_induction(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let trace = partial_induction_trace(graph, target, rng);
    let kept: Vec<Edge> = trace.admitted.iter().map(|&(e, _)| e).collect();
    graph_from_edges(&kept)
}
