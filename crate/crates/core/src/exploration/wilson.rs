use super::walk::StuckGuard;
use crate::error::Result;
use crate::graph::{random_neighbor, Graph, NodeId, Subgraph};
use crate::rng::RandomSource;

const NONE: usize = usize::MAX;

/// Wilson's algorithm, stopped once `target` nodes are in the tree.
///
/// A uniform root starts the tree. Nodes are taken in uniform random order;
/// from each one not yet in the tree a random walk runs until it hits the
/// tree, remembering only the last exit from every node, which erases loops.
/// The resulting path is attached starting at the tree end, so a partial
/// attachment stays connected. With `target == n` the tree is a uniform
/// spanning tree.
pub fn loop_erased(
    graph: &Graph,
    target: usize,
    mut guard: StuckGuard,
    rng: &mut RandomSource,
) -> Result<Subgraph> {
    let n = graph.node_count();
    let mut in_tree = vec![false; n];
    let mut exit = vec![NONE; n];
    let root = rng.below(n);
    in_tree[root] = true;
    let mut attached = vec![root];
    let mut edges = Vec::with_capacity(target.saturating_sub(1));

    let mut order: Vec<NodeId> = graph.nodes().collect();
    rng.shuffle(&mut order);

    let mut path = Vec::new();
    for &start in &order {
        if attached.len() >= target {
            break;
        }
        let mut u = start;
        while !in_tree[u] {
            let v = random_neighbor(graph, u, rng);
            exit[u] = v;
            u = v;
            guard.tick(false, || {
                format!("{} of {target} nodes attached", attached.len())
            })?;
        }
        path.clear();
        let mut x = start;
        while !in_tree[x] {
            path.push(x);
            x = exit[x];
        }
        for &v in path.iter().rev() {
            in_tree[v] = true;
            edges.push((v, exit[v]));
            attached.push(v);
            guard.tick(true, String::new)?;
            if attached.len() == target {
                break;
            }
        }
    }
    Subgraph::from_parts(graph, attached, &edges)
}
