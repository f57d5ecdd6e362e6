#![allow(dead_code)]

use std::collections::BTreeMap;

use graphsample::{graph, Graph, RandomSource};
use statrs::distribution::{ChiSquared, ContinuousCDF};

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Center 0, leaves 1..=leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

pub fn ws(n: usize, k: usize, p: f64, seed: u64) -> Graph {
    graph::watts_strogatz(n, k, p, &mut RandomSource::new(seed)).unwrap()
}

/// Erdős–Rényi G(n, p); may be disconnected or have isolated nodes.
pub fn gnp(n: usize, p: f64, rng: &mut RandomSource) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Upper-tail p-value of a goodness-of-fit test against `expected`
/// probabilities.
pub fn chi_square_gof(counts: &[u64], expected: &[f64]) -> f64 {
    let total: u64 = counts.iter().sum();
    let stat: f64 = counts
        .iter()
        .zip(expected)
        .map(|(&c, &p)| {
            let e = p * total as f64;
            (c as f64 - e).powi(2) / e
        })
        .sum();
    ChiSquared::new((counts.len() - 1) as f64).unwrap().sf(stat)
}

/// p-value of a chi-square homogeneity test between two samples of
/// categorical outcomes.
pub fn chi_square_homogeneity<K: Ord + Clone>(a: &BTreeMap<K, u64>, b: &BTreeMap<K, u64>) -> f64 {
    let mut keys: Vec<K> = a.keys().chain(b.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    if keys.len() < 2 {
        return 1.0;
    }
    let na: u64 = a.values().sum();
    let nb: u64 = b.values().sum();
    let n = (na + nb) as f64;
    let mut stat = 0.0;
    for k in &keys {
        let ca = *a.get(k).unwrap_or(&0) as f64;
        let cb = *b.get(k).unwrap_or(&0) as f64;
        let col = ca + cb;
        for (obs, row) in [(ca, na as f64), (cb, nb as f64)] {
            let e = row * col / n;
            stat += (obs - e).powi(2) / e;
        }
    }
    ChiSquared::new((keys.len() - 1) as f64).unwrap().sf(stat)
}

pub fn tally<K: Ord>(items: impl IntoIterator<Item = K>) -> BTreeMap<K, u64> {
    let mut m = BTreeMap::new();
    for k in items {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

/// Transitivity by checking every node triple.
pub fn brute_transitivity(g: &Graph) -> f64 {
    let n = g.node_count();
    let (mut closed, mut triples) = (0u64, 0u64);
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                if a == c || b == c || !g.has_edge(a, c) || !g.has_edge(b, c) {
                    continue;
                }
                triples += 1;
                if g.has_edge(a, b) {
                    closed += 1;
                }
            }
        }
    }
    if triples == 0 {
        0.0
    } else {
        closed as f64 / triples as f64
    }
}

/// Pearson correlation over both orientations of every edge, in floating
/// point; `None` when either side has zero variance.
pub fn naive_degree_pearson(g: &Graph) -> Option<f64> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (u, v) in g.edges() {
        let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
        xs.extend([du, dv]);
        ys.extend([dv, du]);
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if vx < 1e-12 || vy < 1e-12 {
        None
    } else {
        Some(cov / (vx * vy).sqrt())
    }
}

/// Whether an edge set on `n` nodes is a spanning tree (n - 1 edges, no
/// cycle), by union-find.
pub fn is_spanning_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}
