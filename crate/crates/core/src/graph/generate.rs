use std::collections::BTreeSet;

use super::{traverse, Graph};
use crate::error::{Error, Result};
use crate::rng::RandomSource;

const MAX_ATTEMPTS: usize = 100;

/// Watts-Strogatz small-world graph.
///
/// Starts from a ring where node `i` links to `i ± 1, …, i ± k/2 (mod n)`,
/// then, ring offset by ring offset, rewires the far endpoint of each lattice
/// edge with probability `p` to a uniform target that is neither `i` nor an
/// existing neighbor of `i`. Disconnected draws are discarded and regenerated
/// from the continuing stream, at most 100 times.
pub fn watts_strogatz(n: usize, k: usize, p: f64, rng: &mut RandomSource) -> Result<Graph> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::argument(format!(
            "k must be an even integer >= 2, got {k}"
        )));
    }
    if n <= k {
        return Err(Error::argument(format!(
            "n must exceed k (n = {n}, k = {k})"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::argument(format!(
            "rewiring probability {p} is outside [0, 1]"
        )));
    }

    for _ in 0..MAX_ATTEMPTS {
        let graph = draw(n, k, p, rng)?;
        if traverse::is_connected(&graph) {
            return Ok(graph);
        }
    }
    Err(Error::Generation(format!(
        "no connected Watts-Strogatz graph (n = {n}, k = {k}, p = {p}) in {MAX_ATTEMPTS} attempts"
    )))
}

fn draw(n: usize, k: usize, p: f64, rng: &mut RandomSource) -> Result<Graph> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        for offset in 1..=k / 2 {
            let j = (i + offset) % n;
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    for offset in 1..=k / 2 {
        for i in 0..n {
            let j = (i + offset) % n;
            if !rng.chance(p) || !adj[i].contains(&j) {
                continue;
            }
            if adj[i].len() >= n - 1 {
                continue;
            }
            let target = loop {
                let w = rng.below(n);
                if w != i && !adj[i].contains(&w) {
                    break w;
                }
            };
            adj[i].remove(&j);
            adj[j].remove(&i);
            adj[i].insert(target);
            adj[target].insert(i);
        }
    }
    let edges: Vec<_> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::cycle;

    #[test]
    fn ring_lattice_sizes() {
        let g = watts_strogatz(1000, 10, 0.0, &mut RandomSource::new(1)).unwrap();
        assert_eq!(g.node_count(), 1000);
        assert_eq!(g.edge_count(), 5000);
        assert!(g.nodes().all(|v| g.degree(v) == 10));
    }

    #[test]
    fn small_ring_is_cycle() {
        let g = watts_strogatz(6, 2, 0.0, &mut RandomSource::new(3)).unwrap();
        assert_eq!(g, cycle(6));
    }

    #[test]
    fn zero_rewiring_ignores_seed() {
        let a = watts_strogatz(50, 4, 0.0, &mut RandomSource::new(1)).unwrap();
        let b = watts_strogatz(50, 4, 0.0, &mut RandomSource::new(999)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rewiring_keeps_edge_count_and_changes_structure() {
        let lattice = watts_strogatz(200, 6, 0.0, &mut RandomSource::new(1)).unwrap();
        let g = watts_strogatz(200, 6, 0.3, &mut RandomSource::new(1)).unwrap();
        assert_eq!(g.edge_count(), 600);
        assert_ne!(g, lattice);
        assert!(traverse::is_connected(&g));
    }

    #[test]
    fn bad_parameters() {
        let mut rng = RandomSource::new(0);
        assert!(matches!(
            watts_strogatz(10, 3, 0.0, &mut rng),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            watts_strogatz(4, 4, 0.0, &mut rng),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            watts_strogatz(10, 0, 0.0, &mut rng),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            watts_strogatz(10, 2, 1.5, &mut rng),
            Err(Error::Argument(_))
        ));
    }
}
