use std::collections::VecDeque;

use super::{Graph, NodeId};
use crate::rng::RandomSource;

const UNSEEN: usize = usize::MAX;

/// Uniform neighbor of `v`.
///
/// Panics if `v` is isolated; validated graphs have no such nodes.
#[inline]
pub fn random_neighbor(graph: &Graph, v: NodeId, rng: &mut RandomSource) -> NodeId {
    let nbrs = graph.neighbors(v);
    assert!(!nbrs.is_empty(), "node {v} has no neighbors");
    nbrs[rng.below(nbrs.len())]
}

/// One geodesic from `source` to `target`, inclusive of both ends.
///
/// Breadth-first distances are computed from `source`; the path is then
/// traced back from `target`, picking uniformly among the neighbors one
/// step closer at every hop. Returns `None` when `target` is unreachable.
pub fn shortest_path(
    graph: &Graph,
    source: NodeId,
    target: NodeId,
    rng: &mut RandomSource,
) -> Option<Vec<NodeId>> {
    if source == target {
        return Some(vec![source]);
    }
    let mut dist = vec![UNSEEN; graph.node_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    'search: while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if dist[w] == UNSEEN {
                dist[w] = dist[u] + 1;
                if w == target {
                    break 'search;
                }
                queue.push_back(w);
            }
        }
    }
    if dist[target] == UNSEEN {
        return None;
    }

    // every node at distance < dist[target] is labelled once target is found
    let mut path = vec![target];
    let mut current = target;
    let mut closer = Vec::new();
    while current != source {
        closer.clear();
        closer.extend(
            graph
                .neighbors(current)
                .iter()
                .copied()
                .filter(|&w| dist[w] != UNSEEN && dist[w] + 1 == dist[current]),
        );
        current = closer[rng.below(closer.len())];
        path.push(current);
    }
    path.reverse();
    Some(path)
}

fn reach_marks(graph: &Graph, start: NodeId) -> Vec<bool> {
    let mut seen = vec![false; graph.node_count()];
    if start >= graph.node_count() {
        return seen;
    }
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

pub(crate) fn reachable_count(graph: &Graph, start: NodeId) -> usize {
    reach_marks(graph, start).iter().filter(|&&s| s).count()
}

pub(crate) fn first_unreachable(graph: &Graph, start: NodeId) -> Option<NodeId> {
    reach_marks(graph, start).iter().position(|&s| !s)
}

/// True for graphs where every node is reachable from node 0 (and for the
/// empty graph).
pub fn is_connected(graph: &Graph) -> bool {
    graph.node_count() == 0 || reachable_count(graph, 0) == graph.node_count()
}
