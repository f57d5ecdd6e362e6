//! Sampled graphs that remember which input node each local node came from.

use std::io::Write;

use super::{io, Graph, NodeId};
use crate::error::{Error, Result, ValidationError, ValidationKind};

/// A graph re-indexed to `0..k` together with the original id of every
/// local node. `original_ids` is strictly increasing, so local order
/// matches original order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub original_ids: Vec<NodeId>,
}

impl Subgraph {
    /// Builds a subgraph from a node set and an edge set, both in original
    /// ids. Edge endpoints are added to the node set; every edge must exist
    /// in `parent`.
    pub(crate) fn from_parts(
        parent: &Graph,
        nodes: impl IntoIterator<Item = NodeId>,
        edges: &[(NodeId, NodeId)],
    ) -> Result<Subgraph> {
        let mut ids: Vec<NodeId> = nodes
            .into_iter()
            .chain(edges.iter().flat_map(|&(u, v)| [u, v]))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&bad) = ids.iter().find(|&&v| v >= parent.node_count()) {
            return Err(Error::argument(format!("node {bad} is not in the graph")));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !parent.has_edge(u, v)) {
            return Err(Error::argument(format!(
                "({u}, {v}) is not an edge of the graph"
            )));
        }
        let mut canonical: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        canonical.sort_unstable();
        canonical.dedup();
        relabel(ids, &canonical)
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Edges in original ids, canonical order.
    pub fn original_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.graph
            .edges()
            .map(|(u, v)| (self.original_ids[u], self.original_ids[v]))
    }

    /// Nodes of the sample with no incident edge, in original ids. These do
    /// not appear in the edge-list serialization.
    pub fn isolated_nodes(&self) -> Vec<NodeId> {
        self.graph
            .nodes()
            .filter(|&v| self.graph.degree(v) == 0)
            .map(|v| self.original_ids[v])
            .collect()
    }

    pub fn write_edge_list<W: Write>(&self, out: W) -> Result<()> {
        io::write_edge_list(out, self.original_edges())
    }

    /// Canonical edge list in original ids.
    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}

/// `ids` sorted and unique; `edges` canonical, sorted, unique, in original ids.
fn relabel(ids: Vec<NodeId>, edges: &[(NodeId, NodeId)]) -> Result<Subgraph> {
    let local = |v: NodeId| ids.binary_search(&v).expect("endpoint in node set");
    let local_edges: Vec<_> = edges.iter().map(|&(u, v)| (local(u), local(v))).collect();
    let graph = Graph::from_edges(ids.len(), &local_edges)?;
    Ok(Subgraph {
        graph,
        original_ids: ids,
    })
}

/// Subgraph on `nodes` containing every edge of `graph` with both endpoints
/// in `nodes`. Duplicate ids in `nodes` are ignored.
pub fn induced_subgraph(graph: &Graph, nodes: &[NodeId]) -> Result<Subgraph> {
    if nodes.is_empty() {
        return Err(Error::argument("induced subgraph needs at least one node"));
    }
    let n = graph.node_count();
    let mut position = vec![usize::MAX; n];
    let mut ids = nodes.to_vec();
    ids.sort_unstable();
    ids.dedup();
    if let Some(&bad) = ids.iter().find(|&&v| v >= n) {
        return Err(Error::argument(format!("node {bad} is not in the graph")));
    }
    for (i, &v) in ids.iter().enumerate() {
        position[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in ids.iter().enumerate() {
        for &w in graph.neighbors(v) {
            if w > v && position[w] != usize::MAX {
                edges.push((i, position[w]));
            }
        }
    }
    let graph = Graph::from_edges(ids.len(), &edges)?;
    Ok(Subgraph {
        graph,
        original_ids: ids,
    })
}

/// Graph spanned by an edge set: its nodes are exactly the endpoints.
/// Repeated edges (either orientation) are collapsed.
pub fn graph_from_edges(edges: &[(NodeId, NodeId)]) -> Result<Subgraph> {
    if edges.is_empty() {
        return Err(Error::argument("edge set is empty"));
    }
    if let Some(&(u, _)) = edges.iter().find(|&&(u, v)| u == v) {
        return Err(ValidationError::new(
            ValidationKind::SelfLoop,
            format!("self-loop on node {u}"),
        )
        .into());
    }
    let mut canonical: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    canonical.sort_unstable();
    canonical.dedup();
    let mut ids: Vec<_> = canonical.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    relabel(ids, &canonical)
}
