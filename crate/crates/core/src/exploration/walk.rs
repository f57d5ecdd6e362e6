//! Single-walker random walks. Each variant is a [`WalkKernel`]; the shared
//! driver collects distinct visited nodes and returns their induced subgraph.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{
    induced_subgraph, random_neighbor, sorted_intersection_count, Graph, NodeId, Subgraph,
};
use crate::rng::RandomSource;

/// Aborts a sampler after too many consecutive steps without progress.
#[derive(Debug, Clone)]
pub struct StuckGuard {
    method: String,
    factor: usize,
    limit: usize,
    idle: usize,
}

impl StuckGuard {
    /// Allows `factor * n` idle steps on an `n`-node graph.
    pub fn new(method: &str, factor: usize, graph: &Graph) -> Self {
        StuckGuard {
            method: method.to_string(),
            factor,
            limit: factor.saturating_mul(graph.node_count()),
            idle: 0,
        }
    }

    /// Edge collectors progress per edge, so scale by `max(n, m)` instead.
    pub fn scaled_to_edges(mut self, graph: &Graph) -> Self {
        self.limit = self
            .factor
            .saturating_mul(graph.node_count().max(graph.edge_count()));
        self
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Records one step; errors once `limit` consecutive steps made no progress.
    pub fn tick(&mut self, progress: bool, detail: impl FnOnce() -> String) -> Result<()> {
        if progress {
            self.idle = 0;
            return Ok(());
        }
        self.idle += 1;
        if self.idle >= self.limit {
            return Err(Error::Sampling {
                method: self.method.clone(),
                guard: "stuck guard",
                detail: format!(
                    "{} consecutive steps without progress; {}",
                    self.idle,
                    detail()
                ),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkState {
    /// Node the walk started from.
    pub start: NodeId,
    pub current: NodeId,
    /// Node occupied before the last move (self-transitions leave it alone).
    pub previous: Option<NodeId>,
    pub step_count: usize,
}

impl WalkState {
    pub fn new(start: NodeId) -> Self {
        WalkState {
            start,
            current: start,
            previous: None,
            step_count: 0,
        }
    }

    fn advance(&mut self, next: NodeId) {
        if next != self.current {
            self.previous = Some(self.current);
            self.current = next;
        }
        self.step_count += 1;
    }
}

/// One transition rule.
pub trait WalkKernel {
    /// Chooses the next position (possibly the current one).
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId;
}

impl<K: WalkKernel + ?Sized> WalkKernel for &mut K {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        (**self).next(graph, state, rng)
    }
}

/// Uniform neighbor.
#[derive(Debug, Clone, Copy, Default)]
pub struct Simple;

impl WalkKernel for Simple {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        random_neighbor(graph, state.current, rng)
    }
}

/// Returns to the start node with probability `p` instead of stepping.
#[derive(Debug, Clone, Copy)]
pub struct Restart {
    p: f64,
}

impl Restart {
    pub fn new(p: f64) -> Self {
        Restart { p }
    }
}

impl WalkKernel for Restart {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        if rng.chance(self.p) {
            state.start
        } else {
            random_neighbor(graph, state.current, rng)
        }
    }
}

/// Teleports to a uniform node with probability `p` instead of stepping.
#[derive(Debug, Clone, Copy)]
pub struct Jump {
    p: f64,
}

impl Jump {
    pub fn new(p: f64) -> Self {
        Jump { p }
    }
}

impl WalkKernel for Jump {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        if rng.chance(self.p) {
            rng.below(graph.node_count())
        } else {
            random_neighbor(graph, state.current, rng)
        }
    }
}

/// Probability of accepting a move from a node of degree `from` to one of
/// degree `to`: `min(1, (from / to)^alpha)`.
pub fn acceptance(from: usize, to: usize, alpha: f64) -> f64 {
    (from as f64 / to as f64).powf(alpha).min(1.0)
}

fn accepts(p: f64, rng: &mut RandomSource) -> bool {
    p >= 1.0 || rng.chance(p)
}

/// Metropolis-Hastings: propose a uniform neighbor, accept with
/// [`acceptance`], otherwise stay put.
#[derive(Debug, Clone, Copy)]
pub struct Metropolis {
    alpha: f64,
}

impl Metropolis {
    pub fn new(alpha: f64) -> Self {
        Metropolis { alpha }
    }
}

impl WalkKernel for Metropolis {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        let u = state.current;
        let v = random_neighbor(graph, u, rng);
        if accepts(
            acceptance(graph.degree(u), graph.degree(v), self.alpha),
            rng,
        ) {
            v
        } else {
            u
        }
    }
}

/// Metropolis-Hastings where a rejected proposal is followed, within the
/// same step, by a fresh proposal among neighbors not yet proposed. Stays
/// only when every neighbor has been rejected.
#[derive(Debug, Clone)]
pub struct RejectionConstrained {
    alpha: f64,
    candidates: Vec<NodeId>,
    /// Proposals made during the most recent step.
    pub last_proposals: usize,
}

impl RejectionConstrained {
    pub fn new(alpha: f64) -> Self {
        RejectionConstrained {
            alpha,
            candidates: Vec::new(),
            last_proposals: 0,
        }
    }
}

impl WalkKernel for RejectionConstrained {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        let u = state.current;
        self.candidates.clear();
        self.candidates.extend_from_slice(graph.neighbors(u));
        self.last_proposals = 0;
        while !self.candidates.is_empty() {
            let v = self
                .candidates
                .swap_remove(rng.below(self.candidates.len()));
            self.last_proposals += 1;
            if accepts(
                acceptance(graph.degree(u), graph.degree(v), self.alpha),
                rng,
            ) {
                return v;
            }
        }
        u
    }
}

/// Uniform neighbor other than the one just left; degree-one nodes backtrack.
#[derive(Debug, Clone, Copy, Default)]
pub struct NonBacktracking;

impl WalkKernel for NonBacktracking {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        let nbrs = graph.neighbors(state.current);
        let back = state.previous.and_then(|p| nbrs.binary_search(&p).ok());
        match back {
            Some(skip) if nbrs.len() > 1 => {
                let i = rng.below(nbrs.len() - 1);
                nbrs[if i >= skip { i + 1 } else { i }]
            }
            _ => nbrs[rng.below(nbrs.len())],
        }
    }
}

/// Each node hands out its neighbors from a private shuffled queue, and
/// reshuffles once the queue is used up.
#[derive(Debug, Clone, Default)]
pub struct Circulated {
    queues: HashMap<NodeId, NeighborQueue>,
}

#[derive(Debug, Clone)]
pub struct NeighborQueue {
    order: Vec<NodeId>,
    cursor: usize,
}

impl NeighborQueue {
    fn pop(&mut self, rng: &mut RandomSource) -> NodeId {
        if self.cursor == self.order.len() {
            rng.shuffle(&mut self.order);
            self.cursor = 0;
        }
        self.cursor += 1;
        self.order[self.cursor - 1]
    }
}

impl WalkKernel for Circulated {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        let u = state.current;
        self.queues
            .entry(u)
            .or_insert_with(|| NeighborQueue {
                order: graph.neighbors(u).to_vec(),
                cursor: graph.degree(u), // exhausted, so the first pop shuffles
            })
            .pop(rng)
    }
}

/// Steps to neighbor `w` of `u` with weight
/// `1 - |N(u) ∩ N(w)| / min(deg u, deg w)`; uniform if all weights vanish.
#[derive(Debug, Clone, Default)]
pub struct CommonNeighborAware {
    weights: HashMap<NodeId, Vec<f64>>,
}

/// Transition weights out of `u`, aligned with `graph.neighbors(u)`.
pub fn overlap_weights(graph: &Graph, u: NodeId) -> Vec<f64> {
    let nu = graph.neighbors(u);
    nu.iter()
        .map(|&w| {
            let nw = graph.neighbors(w);
            let shared = sorted_intersection_count(nu, nw);
            1.0 - shared as f64 / nu.len().min(nw.len()) as f64
        })
        .collect()
}

impl WalkKernel for CommonNeighborAware {
    fn next(&mut self, graph: &Graph, state: &WalkState, rng: &mut RandomSource) -> NodeId {
        let u = state.current;
        let weights = self
            .weights
            .entry(u)
            .or_insert_with(|| overlap_weights(graph, u));
        let nbrs = graph.neighbors(u);
        match rng.weighted_index(weights) {
            Some(i) => nbrs[i],
            None => nbrs[rng.below(nbrs.len())],
        }
    }
}

/// Runs `kernel` from `start` for `steps` steps; returns the positions after
/// each step (the start is not included).
pub fn trajectory<K: WalkKernel>(
    graph: &Graph,
    start: NodeId,
    mut kernel: K,
    steps: usize,
    rng: &mut RandomSource,
) -> Vec<NodeId> {
    let mut state = WalkState::new(start);
    (0..steps)
        .map(|_| {
            let next = kernel.next(graph, &state, rng);
            state.advance(next);
            state.current
        })
        .collect()
}

/// Distinct nodes in first-visit order, from a uniform start until `target`
/// nodes are seen.
pub fn visit_order<K: WalkKernel>(
    graph: &Graph,
    target: usize,
    mut kernel: K,
    mut guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Vec<NodeId>> {
    let mut seen = vec![false; graph.node_count()];
    let start = rng.below(graph.node_count());
    seen[start] = true;
    let mut order = vec![start];
    let mut state = WalkState::new(start);
    while order.len() < target {
        let next = kernel.next(graph, &state, rng);
        state.advance(next);
        let fresh = !seen[next];
        if fresh {
            seen[next] = true;
            order.push(next);
        }
        guard.tick(fresh, || {
            format!("{} of {target} nodes visited", order.len())
        })?;
    }
    Ok(order)
}

/// Induced subgraph on the nodes visited by `kernel`.
pub fn walk_sample<K: WalkKernel>(
    graph: &Graph,
    target: usize,
    kernel: K,
    guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    let nodes = visit_order(graph, target, kernel, guard, rng)?;
    induced_subgraph(graph, &nodes)
}
