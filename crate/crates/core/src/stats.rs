//! Graph-level descriptive statistics and the repeated-sampling estimator.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{validate, Graph};
use crate::sampler::{sample, SamplerSpec, TargetSize};

/// `3 * triangles / connected triples`; 0 when there are no triples.
pub fn transitivity(graph: &Graph) -> f64 {
    let mut triangles: u64 = 0;
    for u in graph.nodes() {
        let nu = graph.neighbors(u);
        for &v in nu.iter().filter(|&&v| v > u) {
            // count w > v adjacent to both
            let a = &nu[nu.partition_point(|&w| w <= v)..];
            let nv = graph.neighbors(v);
            let b = &nv[nv.partition_point(|&w| w <= v)..];
            triangles += crate::graph::sorted_intersection_count(a, b) as u64;
        }
    }
    let triples: u64 = graph
        .nodes()
        .map(|v| {
            let d = graph.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    if triples == 0 {
        0.0
    } else {
        3.0 * triangles as f64 / triples as f64
    }
}

/// `2m / n`; 0 for the empty graph.
pub fn average_degree(graph: &Graph) -> f64 {
    if graph.node_count() == 0 {
        return 0.0;
    }
    2.0 * graph.edge_count() as f64 / graph.node_count() as f64
}

/// Degree assortativity: Pearson correlation of the degrees at either end of
/// every edge, each edge taken in both orientations. Sums are exact integers.
pub fn degree_correlation(graph: &Graph) -> Result<f64> {
    // over oriented edges (u, v): s1 = Σ deg u, s2 = Σ deg u², sxy = Σ deg u · deg v
    let mut s1: i128 = 0;
    let mut s2: i128 = 0;
    let mut sxy: i128 = 0;
    for u in graph.nodes() {
        let du = graph.degree(u) as i128;
        s1 += du * du;
        s2 += du * du * du;
        for &v in graph.neighbors(u) {
            sxy += du * graph.degree(v) as i128;
        }
    }
    let oriented = 2 * graph.edge_count() as i128;
    let variance = oriented * s2 - s1 * s1;
    if oriented == 0 || variance == 0 {
        return Err(Error::DegenerateStatistic(
            "degree correlation is undefined when every edge endpoint has the same degree".into(),
        ));
    }
    let covariance = oriented * sxy - s1 * s1;
    Ok(covariance as f64 / variance as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistic {
    Transitivity,
    AverageDegree,
    DegreeCorrelation,
}

impl Statistic {
    pub const ALL: [Statistic; 3] = [
        Statistic::Transitivity,
        Statistic::AverageDegree,
        Statistic::DegreeCorrelation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Transitivity => "transitivity",
            Statistic::AverageDegree => "average_degree",
            Statistic::DegreeCorrelation => "degree_correlation",
        }
    }

    /// Command-line short name.
    pub fn short_name(self) -> &'static str {
        match self {
            Statistic::Transitivity => "transitivity",
            Statistic::AverageDegree => "avgdeg",
            Statistic::DegreeCorrelation => "degcorr",
        }
    }

    pub fn compute(self, graph: &Graph) -> Result<f64> {
        match self {
            Statistic::Transitivity => Ok(transitivity(graph)),
            Statistic::AverageDegree => Ok(average_degree(graph)),
            Statistic::DegreeCorrelation => degree_correlation(graph),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statistic> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s || st.short_name() == s)
            .ok_or_else(|| Error::argument(format!("unknown statistic {s:?}")))
    }
}

impl Serialize for Statistic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One statistic estimated over repeated seeded samples.
#[derive(Debug, Clone, PartialEq)]
pub struct StatReport {
    pub statistic: Statistic,
    /// Value on the full graph; `None` if undefined there.
    pub ground_truth: Option<f64>,
    /// One entry per run: `None` if the sample failed or the statistic was
    /// undefined on it.
    pub estimates: Vec<Option<f64>>,
    pub mean: Option<f64>,
    /// Sample standard deviation over `sqrt(runs_used)`; 0 for a single run.
    pub std_error: Option<f64>,
    pub runs_used: usize,
    /// Runs whose sample was fine but the statistic undefined.
    pub runs_degenerate: usize,
    /// Runs whose sampling failed.
    pub runs_failed: usize,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    statistic: Statistic,
    method: &'a str,
    ground_truth: Option<f64>,
    mean: Option<f64>,
    std_error: Option<f64>,
    runs_used: usize,
    runs_degenerate: usize,
    runs_failed: usize,
}

impl StatReport {
    /// Single-line JSON record.
    pub fn to_record(&self, method: &str) -> String {
        serde_json::to_string(&ReportRecord {
            statistic: self.statistic,
            method,
            ground_truth: self.ground_truth,
            mean: self.mean,
            std_error: self.std_error,
            runs_used: self.runs_used,
            runs_degenerate: self.runs_degenerate,
            runs_failed: self.runs_failed,
        })
        .expect("report serializes")
    }
}

/// Mean and standard error of the mean.
pub fn mean_and_std_error(values: &[f64]) -> Option<(f64, f64)> {
    if values.is_empty() {
        return None;
    }
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    if values.len() == 1 {
        return Some((mean, 0.0));
    }
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
    Some((mean, (var / k).sqrt()))
}

/// Specs for `runs` repetitions: seeds `seed, seed + 1, …` (wrapping).
pub fn laddered_specs(spec: &SamplerSpec, runs: usize) -> Vec<SamplerSpec> {
    (0..runs as u64)
        .map(|i| spec.clone().with_seed(spec.seed().wrapping_add(i)))
        .collect()
}

/// Samples `graph` `runs` times with laddered seeds and summarizes each
/// requested statistic against its full-graph value. Failed runs are
/// counted, not fatal, unless every run fails.
pub fn estimate(
    graph: &Graph,
    spec: &SamplerSpec,
    target: TargetSize,
    runs: usize,
    statistics: &[Statistic],
) -> Result<Vec<StatReport>> {
    if runs == 0 {
        return Err(Error::argument("runs must be at least 1"));
    }
    validate(graph)?;

    let mut per_run: Vec<Vec<Option<f64>>> = vec![Vec::with_capacity(runs); statistics.len()];
    let mut degenerate = vec![0usize; statistics.len()];
    let mut failures = Vec::new();
    for run_spec in laddered_specs(spec, runs) {
        match sample(&run_spec, graph, target) {
            Ok(result) => {
                for (i, st) in statistics.iter().enumerate() {
                    match st.compute(&result.subgraph.graph) {
                        Ok(x) => per_run[i].push(Some(x)),
                        Err(Error::DegenerateStatistic(_)) => {
                            degenerate[i] += 1;
                            per_run[i].push(None);
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
            Err(e) => {
                failures.push(format!("seed {}: {e}", run_spec.seed()));
                for col in per_run.iter_mut() {
                    col.push(None);
                }
            }
        }
    }
    if failures.len() == runs {
        return Err(Error::Harness(format!(
            "all {runs} runs failed; first failure: {}",
            failures[0]
        )));
    }

    let mut reports = Vec::with_capacity(statistics.len());
    for (i, &st) in statistics.iter().enumerate() {
        let ground_truth = match st.compute(graph) {
            Ok(x) => Some(x),
            Err(Error::DegenerateStatistic(_)) => None,
            Err(e) => return Err(e),
        };
        let used: Vec<f64> = per_run[i].iter().flatten().copied().collect();
        let summary = mean_and_std_error(&used);
        reports.push(StatReport {
            statistic: st,
            ground_truth,
            estimates: per_run[i].clone(),
            mean: summary.map(|s| s.0),
            std_error: summary.map(|s| s.1),
            runs_used: used.len(),
            runs_degenerate: degenerate[i],
            runs_failed: failures.len(),
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::watts_strogatz;
    use crate::rng::RandomSource;
    use crate::sampler::Method;

    #[test]
    fn transitivity_examples() {
        assert_eq!(transitivity(&complete(3)), 1.0);
        assert_eq!(transitivity(&path(4)), 0.0);
        assert_eq!(transitivity(&path(2)), 0.0);
        let ws = watts_strogatz(1000, 10, 0.0, &mut RandomSource::new(1)).unwrap();
        // ring lattice closed form 3(k - 2) / (4(k - 1))
        assert!((transitivity(&ws) - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn average_degree_examples() {
        assert_eq!(average_degree(&cycle(4)), 2.0);
        assert_eq!(average_degree(&star(4)), 1.6);
    }

    #[test]
    fn degree_correlation_examples() {
        assert!((degree_correlation(&star(4)).unwrap() + 1.0).abs() < 1e-12);
        assert!((degree_correlation(&path(4)).unwrap() + 0.5).abs() < 1e-12);
        assert!(matches!(
            degree_correlation(&cycle(4)),
            Err(Error::DegenerateStatistic(_))
        ));
        assert!(matches!(
            degree_correlation(&Graph::from_edges(3, &[]).unwrap()),
            Err(Error::DegenerateStatistic(_))
        ));
    }

    #[test]
    fn statistic_names() {
        for st in Statistic::ALL {
            assert_eq!(st.name().parse::<Statistic>().unwrap(), st);
            assert_eq!(st.short_name().parse::<Statistic>().unwrap(), st);
        }
        assert!("diameter".parse::<Statistic>().is_err());
    }

    #[test]
    fn summary_helpers() {
        assert_eq!(mean_and_std_error(&[]), None);
        assert_eq!(mean_and_std_error(&[3.0]), Some((3.0, 0.0)));
        let (m, se) = mean_and_std_error(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(m, 2.5);
        // sample sd = sqrt(5/3), se = sd / 2
        assert!((se - (5.0f64 / 3.0).sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn single_run_has_zero_error() {
        let g = watts_strogatz(100, 4, 0.1, &mut RandomSource::new(1)).unwrap();
        let spec = SamplerSpec::new(Method::Rn);
        let reports = estimate(
            &g,
            &spec,
            TargetSize::Fraction(0.5),
            1,
            &[Statistic::AverageDegree],
        )
        .unwrap();
        assert_eq!(reports[0].std_error, Some(0.0));
        assert_eq!(reports[0].runs_used, 1);
    }

    #[test]
    fn ground_truth_and_repeatability() {
        let g = watts_strogatz(1000, 10, 0.0, &mut RandomSource::new(1)).unwrap();
        let spec = SamplerSpec::new(Method::Rn);
        let stats = Statistic::ALL;
        let a = estimate(&g, &spec, TargetSize::Fraction(0.5), 10, &stats).unwrap();
        let b = estimate(&g, &spec, TargetSize::Fraction(0.5), 10, &stats).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[1].ground_truth, Some(10.0));
        assert_eq!(a[1].runs_used, 10);
        // the lattice is regular, so its degree correlation is undefined
        assert_eq!(a[2].ground_truth, None);
        let mean = a[0].estimates.iter().flatten().sum::<f64>() / a[0].runs_used as f64;
        assert!((a[0].mean.unwrap() - mean).abs() < 1e-12);
    }

    #[test]
    fn estimate_argument_errors() {
        let g = cycle(6);
        let spec = SamplerSpec::new(Method::Rn);
        assert!(matches!(
            estimate(&g, &spec, TargetSize::Fraction(0.5), 0, &Statistic::ALL),
            Err(Error::Argument(_))
        ));
        let broken = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            estimate(
                &broken,
                &spec,
                TargetSize::Fraction(0.5),
                3,
                &Statistic::ALL
            ),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn all_runs_failing_is_a_harness_error() {
        let g = path(40);
        let spec = SamplerSpec::new(Method::Rwr)
            .with_param("p_restart", 0.999_999)
            .unwrap()
            .with_param("stuck_factor", 1)
            .unwrap();
        let err = estimate(&g, &spec, TargetSize::Nodes(40), 2, &Statistic::ALL).unwrap_err();
        assert!(matches!(err, Error::Harness(_)), "{err}");
    }
}
