//! Immutable undirected simple graphs in compressed adjacency form.

mod generate;
mod io;
pub(crate) mod pagerank;
mod subgraph;
mod traverse;
mod validate;

pub use generate::watts_strogatz;
pub use io::{load_edge_list, parse_edge_list, read_edge_pairs, write_edge_list};
pub use pagerank::{pagerank, PageRank, PageRankConfig};
pub use subgraph::{graph_from_edges, induced_subgraph, Subgraph};
pub use traverse::{is_connected, random_neighbor, shortest_path};
pub use validate::validate;

use crate::error::{Error, Result, ValidationError, ValidationKind};

pub type NodeId = usize;

/// Undirected simple graph with node ids `0..node_count` and sorted
/// neighbor lists stored back to back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `node_count` nodes. Every endpoint must be below
    /// `node_count`; self-loops and repeated edges (in either orientation)
    /// are rejected.
    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        let mut degree = vec![0usize; node_count];
        for &(u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::argument(format!(
                    "edge ({u}, {v}) references a node outside 0..{node_count}"
                )));
            }
            if u == v {
                return Err(ValidationError::new(
                    ValidationKind::SelfLoop,
                    format!("self-loop on node {u}"),
                )
                .into());
            }
            degree[u] += 1;
            degree[v] += 1;
        }

        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..node_count].to_vec();
        let mut neighbors = vec![0; offsets[node_count]];
        for &(u, v) in edges {
            neighbors[cursor[u]] = v;
            cursor[u] += 1;
            neighbors[cursor[v]] = u;
            cursor[v] += 1;
        }
        for u in 0..node_count {
            let list = &mut neighbors[offsets[u]..offsets[u + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(ValidationError::new(
                    ValidationKind::DuplicateEdge,
                    format!("edge ({a}, {b}) is listed more than once"),
                )
                .into());
            }
        }

        Ok(Graph {
            offsets,
            neighbors,
            edge_count: edges.len(),
        })
    }

    /// Graph whose node count is one more than the largest endpoint.
    pub fn from_edge_list(edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::from_edges(n, edges)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && v < self.node_count() && {
            // search the shorter list
            let (a, b) = if self.degree(u) <= self.degree(v) {
                (u, v)
            } else {
                (v, u)
            };
            self.neighbors(a).binary_search(&b).is_ok()
        }
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count()
    }

    /// Each edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_vec(&self) -> Vec<(NodeId, NodeId)> {
        self.edges().collect()
    }
}

/// Size of the intersection of two sorted id lists.
pub fn sorted_intersection_count(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
