//! Search-style exploration: traversals, snowball, forest fire, community
//! expansion, node-neighbor and shortest-path sampling.

use std::collections::VecDeque;

use super::walk::StuckGuard;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, shortest_path, Graph, NodeId, Subgraph};
use crate::rng::RandomSource;

/// Membership flags plus insertion order.
struct Sampled {
    flags: Vec<bool>,
    order: Vec<NodeId>,
}

impl Sampled {
    fn new(n: usize) -> Self {
        Sampled {
            flags: vec![false; n],
            order: Vec::new(),
        }
    }

    fn insert(&mut self, v: NodeId) -> bool {
        if self.flags[v] {
            return false;
        }
        self.flags[v] = true;
        self.order.push(v);
        true
    }

    fn contains(&self, v: NodeId) -> bool {
        self.flags[v]
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    fn unsampled(&self) -> Vec<NodeId> {
        (0..self.flags.len()).filter(|&v| !self.flags[v]).collect()
    }
}

fn unvisited_neighbors(graph: &Graph, u: NodeId, seen: &Sampled) -> Vec<NodeId> {
    graph
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&w| !seen.contains(w))
        .collect()
}

/// Breadth-first discovery tree from a uniform start. Each expansion visits
/// the unvisited neighbors in uniform random order.
pub fn breadth_first(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let mut seen = Sampled::new(graph.node_count());
    let start = rng.below(graph.node_count());
    seen.insert(start);
    let mut tree = Vec::with_capacity(target.saturating_sub(1));
    let mut queue = VecDeque::from([start]);
    'outer: while seen.len() < target {
        let Some(u) = queue.pop_front() else { break };
        let mut fresh = unvisited_neighbors(graph, u, &seen);
        rng.shuffle(&mut fresh);
        for w in fresh {
            seen.insert(w);
            tree.push((u, w));
            queue.push_back(w);
            if seen.len() == target {
                break 'outer;
            }
        }
    }
    Subgraph::from_parts(graph, seen.order, &tree)
}

/// Depth-first discovery tree from a uniform start; each node's neighbors
/// are tried in a uniform random order.
pub fn depth_first(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let mut seen = Sampled::new(graph.node_count());
    let start = rng.below(graph.node_count());
    seen.insert(start);
    let mut tree = Vec::with_capacity(target.saturating_sub(1));

    let shuffled = |v: NodeId, rng: &mut RandomSource| {
        let mut order = graph.neighbors(v).to_vec();
        rng.shuffle(&mut order);
        order
    };
    let mut stack = vec![(start, shuffled(start, rng), 0usize)];
    while seen.len() < target {
        let Some((u, order, cursor)) = stack.last_mut() else {
            break;
        };
        match order[*cursor..].iter().position(|&w| !seen.contains(w)) {
            Some(offset) => {
                let w = order[*cursor + offset];
                *cursor += offset + 1;
                let u = *u;
                seen.insert(w);
                tree.push((u, w));
                let next = shuffled(w, rng);
                stack.push((w, next, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    Subgraph::from_parts(graph, seen.order, &tree)
}

/// Number of neighbors a burning node ignites: geometric with success
/// probability `1 - p` (mean `p / (1 - p)`), truncated at `available`.
pub fn burn_count(p: f64, available: usize, rng: &mut RandomSource) -> usize {
    let mut count = 0;
    while count < available && rng.chance(p) {
        count += 1;
    }
    count
}

/// Shared queue-driven spreading for snowball and forest fire. `spread`
/// says how many of a node's unvisited neighbors to take. When the queue
/// empties early a new fire starts at a uniform unvisited node; more than
/// `max_rekindles` consecutive fires that reach nothing beyond their own
/// seed abort the run.
fn spread_sample(
    method: &str,
    graph: &Graph,
    target: usize,
    max_rekindles: usize,
    rng: &mut RandomSource,
    mut spread: impl FnMut(usize, &mut RandomSource) -> usize,
) -> Result<Subgraph> {
    let mut seen = Sampled::new(graph.node_count());
    let mut queue = VecDeque::new();
    let mut barren = 0;
    let mut fire_start = 0;
    while seen.len() < target {
        let Some(u) = queue.pop_front() else {
            if seen.len() > 0 && seen.len() == fire_start + 1 {
                barren += 1;
                if barren > max_rekindles {
                    return Err(Error::Sampling {
                        method: method.to_string(),
                        guard: "rekindle limit",
                        detail: format!(
                            "{barren} consecutive fires died at their seed; {} of {target} nodes sampled",
                            seen.len()
                        ),
                    });
                }
            } else {
                barren = 0;
            }
            let candidates = seen.unsampled();
            let seed = candidates[rng.below(candidates.len())];
            fire_start = seen.len();
            seen.insert(seed);
            queue.push_back(seed);
            continue;
        };
        let mut fresh = unvisited_neighbors(graph, u, &seen);
        let take = spread(fresh.len(), rng);
        for &w in rng.partial_shuffle(&mut fresh, take).iter() {
            seen.insert(w);
            queue.push_back(w);
            if seen.len() == target {
                break;
            }
        }
    }
    induced_subgraph(graph, &seen.order)
}

/// Snowball: BFS that enqueues at most `k` uniformly chosen unvisited
/// neighbors per node.
pub fn snowball(
    graph: &Graph,
    target: usize,
    k: usize,
    max_rekindles: usize,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    spread_sample("sb", graph, target, max_rekindles, rng, |available, _| {
        available.min(k)
    })
}

/// Forest fire with burn probability `p`.
pub fn forest_fire(
    graph: &Graph,
    target: usize,
    p: f64,
    max_rekindles: usize,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    spread_sample("ff", graph, target, max_rekindles, rng, |available, rng| {
        burn_count(p, available, rng)
    })
}

/// Community structure expansion: greedily add the frontier node with the
/// most neighbors outside the known set (sampled nodes and their
/// neighbors); ties broken uniformly.
pub fn community_expansion(
    graph: &Graph,
    target: usize,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    let order = expansion_order(graph, target, rng)?;
    induced_subgraph(graph, &order)
}

/// Sampled nodes of [`community_expansion`] in the order they were added.
pub fn expansion_order(
    graph: &Graph,
    target: usize,
    rng: &mut RandomSource,
) -> Result<Vec<NodeId>> {
    let n = graph.node_count();
    let start = rng.below(n);
    expansion_order_from(graph, start, target, rng)
}

pub(crate) fn expansion_order_from(
    graph: &Graph,
    start: NodeId,
    target: usize,
    rng: &mut RandomSource,
) -> Result<Vec<NodeId>> {
    let mut sampled = Sampled::new(graph.node_count());
    let mut known = vec![false; graph.node_count()];
    let mut frontier = Vec::new();
    let admit =
        |v: NodeId, sampled: &mut Sampled, known: &mut Vec<bool>, frontier: &mut Vec<NodeId>| {
            sampled.insert(v);
            known[v] = true;
            for &w in graph.neighbors(v) {
                if !known[w] {
                    known[w] = true;
                    frontier.push(w);
                }
            }
        };
    admit(start, &mut sampled, &mut known, &mut frontier);
    let mut best = Vec::new();
    while sampled.len() < target {
        if frontier.is_empty() {
            return Err(Error::Sampling {
                method: "cse".into(),
                guard: "stuck guard",
                detail: format!("frontier exhausted at {} of {target} nodes", sampled.len()),
            });
        }
        best.clear();
        let mut best_score = 0;
        for (i, &c) in frontier.iter().enumerate() {
            let score = graph.neighbors(c).iter().filter(|&&w| !known[w]).count();
            if best.is_empty() || score > best_score {
                best.clear();
                best_score = score;
            }
            if score == best_score {
                best.push(i);
            }
        }
        let pick = best[rng.below(best.len())];
        let v = frontier.remove(pick);
        admit(v, &mut sampled, &mut known, &mut frontier);
    }
    Ok(sampled.order)
}

/// Random node-neighbor: add a uniform unsampled node and all its
/// neighbors, until at least `target` nodes are held.
pub fn node_neighbor(graph: &Graph, target: usize, rng: &mut RandomSource) -> Result<Subgraph> {
    let mut seen = Sampled::new(graph.node_count());
    while seen.len() < target {
        let candidates = seen.unsampled();
        let u = candidates[rng.below(candidates.len())];
        seen.insert(u);
        for &w in graph.neighbors(u) {
            seen.insert(w);
        }
    }
    induced_subgraph(graph, &seen.order)
}

/// Adds every node of a random geodesic between uniform distinct pairs
/// until at least `target` nodes are held.
pub fn shortest_paths(
    graph: &Graph,
    target: usize,
    mut guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    let n = graph.node_count();
    let mut seen = Sampled::new(n);
    while seen.len() < target {
        let u = rng.below(n);
        let mut v = rng.below(n - 1);
        if v >= u {
            v += 1;
        }
        let path = shortest_path(graph, u, v, rng).ok_or_else(|| Error::Sampling {
            method: "sp".into(),
            guard: "stuck guard",
            detail: format!("no path between {u} and {v}"),
        })?;
        let before = seen.len();
        for w in path {
            seen.insert(w);
        }
        guard.tick(seen.len() > before, || {
            format!("{} of {target} nodes", seen.len())
        })?;
    }
    induced_subgraph(graph, &seen.order)
}
