use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankConfig {
    pub damping: f64,
    /// Stop once the L1 change between iterates drops below this.
    pub tolerance: f64,
    pub max_iters: usize,
}

impl Default for PageRankConfig {
    fn default() -> Self {
        PageRankConfig {
            damping: 0.85,
            tolerance: 1e-9,
            max_iters: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PageRank {
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl PageRank {
    /// Present when the iteration budget ran out before the tolerance was met.
    pub fn warning(&self) -> Option<String> {
        (!self.converged).then(|| {
            format!(
                "pagerank did not reach tolerance within {} iterations; using last iterate",
                self.iterations
            )
        })
    }
}

/// Power iteration on the uniform random-walk transition with teleport.
/// Isolated nodes spread their mass uniformly.
pub fn pagerank(graph: &Graph, config: PageRankConfig) -> PageRank {
    let n = graph.node_count();
    if n == 0 {
        return PageRank {
            scores: Vec::new(),
            iterations: 0,
            converged: true,
        };
    }
    let uniform = 1.0 / n as f64;
    let mut scores = vec![uniform; n];
    let mut next = vec![0.0; n];
    let d = config.damping;

    for iter in 1..=config.max_iters {
        let dangling: f64 = graph
            .nodes()
            .filter(|&v| graph.degree(v) == 0)
            .map(|v| scores[v])
            .sum();
        let base = (1.0 - d) * uniform + d * dangling * uniform;
        for v in graph.nodes() {
            let inflow: f64 = graph
                .neighbors(v)
                .iter()
                .map(|&u| scores[u] / graph.degree(u) as f64)
                .sum();
            next[v] = base + d * inflow;
        }
        let total: f64 = next.iter().sum();
        for x in next.iter_mut() {
            *x /= total;
        }
        let change: f64 = scores.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut scores, &mut next);
        if change < config.tolerance {
            return PageRank {
                scores,
                iterations: iter,
                converged: true,
            };
        }
    }
    PageRank {
        scores,
        iterations: config.max_iters,
        converged: false,
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    use crate::graph::Graph;

    /// Solves (I - d M) x = (1 - d)/n by Gaussian elimination, where
    /// M[v][u] = 1/deg(u) for every edge u-v.
    #[allow(clippy::needless_range_loop)]
    pub fn dense_pagerank(graph: &Graph, damping: f64) -> Vec<f64> {
        let n = graph.node_count();
        let mut a = vec![vec![0.0; n + 1]; n];
        for v in 0..n {
            a[v][v] = 1.0;
            for &u in graph.neighbors(v) {
                a[v][u] -= damping / graph.degree(u) as f64;
            }
            a[v][n] = (1.0 - damping) / n as f64;
        }
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap();
            a.swap(col, pivot);
            for row in 0..n {
                if row != col {
                    let f = a[row][col] / a[col][col];
                    for k in col..=n {
                        a[row][k] -= f * a[col][k];
                    }
                }
            }
        }
        (0..n).map(|i| a[i][n] / a[i][i]).collect()
    }
}
