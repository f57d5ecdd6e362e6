mod common;

use std::collections::BTreeSet;

use common::*;
use graphsample::edge::{partial_induction_trace, Admission};
use graphsample::exploration::pick_walker;
use graphsample::graph::induced_subgraph;
use graphsample::stats::{self, Statistic};
use graphsample::{sample, Error, Graph, Method, RandomSource, SamplerSpec, TargetSize};

fn kite() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap()
}

/// Replays a partial-induction stream with plain sets.
fn replay(stream: &[(usize, usize)], target: usize) -> Vec<(usize, usize)> {
    let mut held = BTreeSet::new();
    let mut kept = Vec::new();
    for &(u, v) in stream {
        if held.len() < target {
            held.insert(u);
            held.insert(v);
            kept.push((u, v));
        } else if held.contains(&u) && held.contains(&v) {
            kept.push((u, v));
        }
    }
    kept
}

#[test]
fn partial_induction_matches_replay() {
    let g = ws(100, 4, 0.1, 8);
    for seed in 1..=20 {
        let trace = partial_induction_trace(&g, 50, &mut RandomSource::new(seed));
        let mut stream = trace.stream.clone();
        stream.sort();
        assert_eq!(stream, g.edge_vec(), "stream is a permutation of the edges");

        let admitted: Vec<_> = trace.admitted.iter().map(|&(e, _)| e).collect();
        assert_eq!(admitted, replay(&trace.stream, 50));
        let growth = trace
            .admitted
            .iter()
            .take_while(|(_, a)| *a == Admission::Growth)
            .count();
        assert!(trace.admitted[growth..]
            .iter()
            .all(|(_, a)| *a == Admission::Induced));

        let r = sample(
            &SamplerSpec::new(Method::Pies).with_seed(seed),
            &g,
            TargetSize::Nodes(50),
        )
        .unwrap();
        let mut got: Vec<_> = r.subgraph.original_edges().collect();
        got.sort();
        let mut want = admitted.clone();
        want.sort();
        assert_eq!(got, want);

        // one full pass: growth keeps every early edge, so nothing among the
        // final node set is missed
        let full = induced_subgraph(&g, &r.subgraph.original_ids).unwrap();
        assert_eq!(r.subgraph, full);
    }
}

#[test]
fn total_induction_holds_every_edge_among_its_nodes() {
    let g = ws(120, 6, 0.2, 3);
    for seed in 1..=20 {
        let r = sample(
            &SamplerSpec::new(Method::Ties).with_seed(seed),
            &g,
            TargetSize::Nodes(40),
        )
        .unwrap();
        let full = induced_subgraph(&g, &r.subgraph.original_ids).unwrap();
        assert_eq!(r.subgraph, full);
        assert!(r.nodes_sampled() == 40 || r.nodes_sampled() == 41);
    }
}

#[test]
fn estimate_equals_direct_samples() {
    let g = ws(200, 6, 0.1, 1);
    let spec = SamplerSpec::new(Method::Ff).with_seed(90);
    let wanted = [
        Statistic::Transitivity,
        Statistic::AverageDegree,
        Statistic::DegreeCorrelation,
    ];
    let reports = stats::estimate(&g, &spec, TargetSize::Fraction(0.4), 5, &wanted).unwrap();
    for (i, seed) in (90..95).enumerate() {
        let r = sample(&spec.clone().with_seed(seed), &g, TargetSize::Fraction(0.4)).unwrap();
        assert_eq!(
            reports[0].estimates[i],
            Some(stats::transitivity(&r.subgraph.graph))
        );
        assert_eq!(
            reports[1].estimates[i],
            Some(stats::average_degree(&r.subgraph.graph))
        );
        assert_eq!(
            reports[2].estimates[i],
            stats::degree_correlation(&r.subgraph.graph).ok()
        );
    }
    let xs: Vec<f64> = reports[1].estimates.iter().flatten().copied().collect();
    let mean = xs.iter().sum::<f64>() / 5.0;
    let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / 4.0).sqrt();
    assert!((reports[1].mean.unwrap() - mean).abs() < 1e-12);
    assert!((reports[1].std_error.unwrap() - sd / 5f64.sqrt()).abs() < 1e-12);
    assert_eq!(reports[1].ground_truth, Some(6.0));
}

fn node_sets(
    spec: &SamplerSpec,
    g: &Graph,
    k: usize,
    seeds: std::ops::Range<u64>,
) -> std::collections::BTreeMap<Vec<usize>, u64> {
    tally(seeds.map(|s| {
        sample(&spec.clone().with_seed(s), g, TargetSize::Nodes(k))
            .unwrap()
            .subgraph
            .original_ids
    }))
}

#[test]
fn metropolis_on_a_regular_graph_behaves_like_a_simple_walk() {
    let g = complete(5);
    let mh = node_sets(&SamplerSpec::new(Method::Mhrw), &g, 3, 1..8001);
    let rw = node_sets(&SamplerSpec::new(Method::Rw), &g, 3, 10_001..18_001);
    let p = chi_square_homogeneity(&mh, &rw);
    assert!(p > 0.01, "p = {p}");
}

#[test]
fn single_walker_frontier_covers_like_a_simple_walk() {
    let g = kite();
    let frw = node_sets(
        &SamplerSpec::new(Method::Frw)
            .with_param("walkers", 1)
            .unwrap(),
        &g,
        3,
        1..8001,
    );
    let rw = node_sets(&SamplerSpec::new(Method::Rw), &g, 3, 10_001..18_001);
    let p = chi_square_homogeneity(&frw, &rw);
    assert!(p > 0.01, "p = {p}");
}

#[test]
fn walkers_are_chosen_by_degree() {
    let g = star(4);
    let mut rng = RandomSource::new(5);
    let runs = 50_000;
    let center = (0..runs)
        .filter(|_| pick_walker(&g, &[0, 1], &mut rng) == 0)
        .count();
    let share = center as f64 / runs as f64;
    assert!((share - 0.8).abs() < 0.01, "{share}");
}

#[test]
fn guards_surface_as_sampling_errors() {
    let g = path(200);
    let spec = SamplerSpec::new(Method::Rwr)
        .with_param("p_restart", 0.9)
        .unwrap()
        .with_param("stuck_factor", 1)
        .unwrap();
    match sample(&spec, &g, TargetSize::Nodes(200)) {
        Err(Error::Sampling { method, guard, .. }) => {
            assert_eq!(method, "rwr");
            assert_eq!(guard, "stuck guard");
        }
        other => panic!("expected a stuck guard, got {other:?}"),
    }

    let spec = SamplerSpec::new(Method::Ff)
        .with_param("p", 0.01)
        .unwrap()
        .with_param("max_rekindles", 0)
        .unwrap();
    let mut hits = 0;
    for seed in 1..=20 {
        match sample(&spec.clone().with_seed(seed), &g, TargetSize::Nodes(150)) {
            Err(Error::Sampling { guard, .. }) => {
                assert_eq!(guard, "rekindle limit");
                hits += 1;
            }
            Ok(r) => assert_eq!(r.nodes_sampled(), 150),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(hits > 0);
}

#[test]
fn out_of_range_parameters_are_rejected() {
    assert!(matches!(
        SamplerSpec::new(Method::Rwr).with_param("p_restart", 1.0),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        SamplerSpec::new(Method::Ff).with_param("p", 0.0),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        SamplerSpec::new(Method::Hrne).with_param("q", 1.5),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        SamplerSpec::new(Method::Mhrw).with_param("alpha", 0.0),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        SamplerSpec::new(Method::Rw).with_param("p_jump", 0.5),
        Err(Error::Argument(_))
    ));
    let g = kite();
    let spec = SamplerSpec::new(Method::Frw)
        .with_param("walkers", 7)
        .unwrap();
    assert!(matches!(
        sample(&spec, &g, TargetSize::Nodes(3)),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        sample(&SamplerSpec::new(Method::Rn), &g, TargetSize::Nodes(7)),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        sample(&SamplerSpec::new(Method::Re), &g, TargetSize::Nodes(3)),
        Err(Error::Argument(_))
    ));
}
