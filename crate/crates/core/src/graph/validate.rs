use super::{traverse, Graph};
use crate::error::{ValidationError, ValidationKind};

/// Checks the sampler input assumptions: at least two nodes, every id in
/// `0..n` has an incident edge, and the graph is connected.
///
/// Self-loops and duplicate edges cannot be represented by [`Graph`]; they
/// are reported when the graph is built.
pub fn validate(graph: &Graph) -> Result<(), ValidationError> {
    let n = graph.node_count();
    if n < 2 {
        return Err(ValidationError::new(
            ValidationKind::Empty,
            format!("graph has {n} node(s); at least 2 are required"),
        ));
    }
    if let Some(orphan) = graph.nodes().find(|&v| graph.degree(v) == 0) {
        return Err(ValidationError::new(
            ValidationKind::NonConsecutiveIds,
            format!("node id {orphan} has no incident edge; ids must be consecutive from 0 with no orphans"),
        ));
    }
    let reached = traverse::reachable_count(graph, 0);
    if reached < n {
        let missing = traverse::first_unreachable(graph, 0).unwrap_or(0);
        return Err(ValidationError::new(
            ValidationKind::NotConnected,
            format!("graph is not connected: node {missing} is unreachable from node 0 ({reached} of {n} reachable)"),
        ));
    }
    Ok(())
}
