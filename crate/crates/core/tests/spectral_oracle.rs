//! The iterative spectral gap against a dense eigensolver.

use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rdsim::graph::Network;
use rdsim::netgen::{
    community_network_from_degrees, configuration_model, sample_degree_sequence, CommunitySpec,
    DegreeDistributionSpec,
};
use rdsim::rng::{substream, StreamTag};
use rdsim::spectral::{walk_laplacian_lambda2, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Second smallest eigenvalue of `I - D^-1/2 A D^-1/2`, from the full spectrum.
fn dense_lambda2(g: &Network) -> f64 {
    let n = g.node_count();
    let d: Vec<f64> = g.degrees().iter().map(|&k| k as f64).collect();
    let mut l = DMatrix::<f64>::identity(n, n);
    for (u, v) in g.edges() {
        let w = 1.0 / (d[u] * d[v]).sqrt();
        l[(u, v)] -= w;
        l[(v, u)] -= w;
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(l).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev[1]
}

fn lambda2(g: &Network) -> f64 {
    walk_laplacian_lambda2(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
        .unwrap()
        .lambda2
}

fn relative_error(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Random spanning tree plus `extra` random chords.
fn random_connected(n: usize, extra: usize, seed: u64) -> Network {
    let mut rng = substream(seed, StreamTag::Network, 0, 0);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v
            && !edges.contains(&(u.min(v), u.max(v)))
            && !edges.contains(&(u.max(v), u.min(v)))
        {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Network::from_dense_edges(n, edges).unwrap()
}

fn largest_component(g: &Network) -> Network {
    let comps = g.connected_components();
    let keep = comps.iter().max_by_key(|c| c.len()).unwrap();
    let mut index = vec![usize::MAX; g.node_count()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let edges = g
        .edges()
        .filter(|&(u, _)| index[u] != usize::MAX)
        .map(|(u, v)| (index[u], index[v]));
    Network::from_dense_edges(keep.len(), edges.collect::<Vec<_>>()).unwrap()
}

fn complete(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Two `m`-cliques on `0..m` and `m..2m` joined by the edge `0 – m`.
fn two_cliques(m: usize) -> Vec<(usize, usize)> {
    let mut e = complete(m);
    e.extend(complete(m).into_iter().map(|(u, v)| (u + m, v + m)));
    e.push((0, m));
    e
}

#[test]
fn matches_dense_solver_on_random_graphs() {
    let mut rng = substream(7, StreamTag::Network, 1, 0);
    for seed in 0..50 {
        let n = rng.random_range(5..=200);
        let extra = rng.random_range(0..=3 * n);
        let g = random_connected(n, extra, seed);
        let (fast, dense) = (lambda2(&g), dense_lambda2(&g));
        assert!(
            relative_error(fast, dense) < 1e-8,
            "graph {seed} (n={n}): iterative {fast} vs dense {dense}"
        );
    }
}

#[test]
fn joined_cliques_have_a_small_gap() {
    let joined = Network::from_dense_edges(10, two_cliques(5)).unwrap();
    let k10 = Network::from_dense_edges(10, complete(10)).unwrap();
    let (a, b) = (lambda2(&joined), lambda2(&k10));
    assert!(relative_error(a, dense_lambda2(&joined)) < 1e-8);
    assert!(relative_error(b, 10.0 / 9.0) < 1e-8);
    assert!(a < 0.1 * b, "joined {a} vs K10 {b}");
}

#[test]
fn extra_bridges_never_close_the_gap() {
    for m in 3..=6 {
        let base = two_cliques(m);
        let before = lambda2(&Network::from_dense_edges(2 * m, base.clone()).unwrap());
        for u in 0..m {
            for v in m..2 * m {
                if (u, v) == (0, m) {
                    continue;
                }
                let mut e = base.clone();
                e.push((u, v));
                let after = lambda2(&Network::from_dense_edges(2 * m, e).unwrap());
                assert!(
                    after >= before - 1e-10,
                    "m={m}, edge {u}-{v}: {after} < {before}"
                );
            }
        }
    }
}

#[test]
fn strong_communities_have_a_smaller_gap_than_matched_random_graphs() {
    let n = 2000;
    let d = DegreeDistributionSpec::default();
    for i in 0..2 {
        let k = sample_degree_sequence(n, &d, &mut substream(3, StreamTag::Network, i, 2)).unwrap();
        let strong = community_network_from_degrees(
            &k,
            &CommunitySpec::strong(),
            &mut substream(3, StreamTag::Network, i, 0),
        )
        .unwrap();
        let weak = community_network_from_degrees(
            &k,
            &CommunitySpec::weak(),
            &mut substream(3, StreamTag::Network, i, 0),
        )
        .unwrap();
        let (ls, lw) = (lambda2(&strong.network), lambda2(&weak.network));
        assert!(ls < lw, "strong {ls} vs weak {lw}");

        let random = configuration_model(
            &strong.network.degrees(),
            &mut substream(3, StreamTag::Network, i, 1),
        )
        .unwrap()
        .network;
        let lcc = largest_component(&random);
        let lr = dense_lambda2(&lcc);
        let report =
            walk_laplacian_lambda2(&strong.network, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert!(
            report.p_min_bound > (1.0 - lr).clamp(0.0, 1.0),
            "strong bound {} vs random {}",
            report.p_min_bound,
            1.0 - lr
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_leaves_the_gap_unchanged(n in 4usize..60, extra in 0usize..120, seed in 0u64..1000) {
        let g = random_connected(n, extra, seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut substream(seed, StreamTag::Network, 2, 0));
        let h = Network::from_dense_edges(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        let (a, b) = (lambda2(&g), lambda2(&h));
        prop_assert!(relative_error(a, b) < 1e-8, "{} vs {}", a, b);
    }
}
