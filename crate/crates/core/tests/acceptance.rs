//! Acceptance suite at N = 10000. Prints one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always shown.
//! Failures are reported, not hidden; set `RDSIM_ACCEPTANCE_STRICT=1` to
//! turn any FAIL into a non-zero exit status.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use rdsim::estimators::{aggregate_theta, average_bias, design_effect, rds2_estimate, SampleView};
use rdsim::graph::Network;
use rdsim::harness::{
    run_experiment, simulate_experiment, CellResult, NetworkModel, ScenarioConfig,
};
use rdsim::infection::{Protocol, ProtocolSpec};
use rdsim::netgen::{
    community_network_from_degrees, sample_degree_sequence, CommunitySpec, DegreeDistributionSpec,
};
use rdsim::rng::{substream, StreamTag};
use rdsim::spectral::{walk_laplacian_lambda2, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Fixed before any acceptance run was made.
const MASTER_SEED: u64 = 1;
const N: usize = 10_000;
const PREVALENCE: f64 = 0.25;

struct Report {
    results: Vec<(u32, bool)>,
}

impl Report {
    fn record(&mut self, id: u32, pass: bool, detail: String) {
        println!(
            "criterion {id:>2}: {} {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
        self.results.push((id, pass));
    }
}

fn scenario(
    name: &str,
    model: NetworkModel,
    protocol: Protocol,
    cap: Option<usize>,
    p_grid: Vec<f64>,
) -> ScenarioConfig {
    let mut cfg = ScenarioConfig::new(name, N, model);
    cfg.infection = ProtocolSpec::new(protocol);
    cfg.rds.sample_cap = cap;
    cfg.p_grid = p_grid;
    cfg.master_seed = MASTER_SEED;
    cfg
}

fn run(cfg: &ScenarioConfig) -> Vec<CellResult> {
    let t = Instant::now();
    let cells = simulate_experiment(cfg).expect("scenario runs");
    println!(
        "    ({}: {} cells in {:.1?})",
        cfg.name,
        cells.len(),
        t.elapsed()
    );
    cells
}

fn at(cells: &[CellResult], p: f64) -> &CellResult {
    cells
        .iter()
        .find(|c| (c.p - p).abs() < 1e-12)
        .expect("p on grid")
}

fn omega_share(c: &CellResult) -> f64 {
    c.mean_omega / N as f64
}

fn strong() -> NetworkModel {
    NetworkModel::Community(CommunitySpec::strong())
}

fn recruitment(report: &mut Report) {
    let grid = vec![0.1, 0.2, 0.3, 0.45, 0.6, 0.7, 1.0];
    let mut cfg = scenario(
        "recruitment",
        NetworkModel::Configuration,
        Protocol::Ri,
        None,
        grid.clone(),
    );
    cfg.networks_per_cell = 10;
    cfg.sims_per_network = 2;
    let cells = run(&cfg);
    let shares: Vec<String> = grid
        .iter()
        .map(|&p| format!("{p}:{:.3}", omega_share(at(&cells, p))))
        .collect();
    println!("    mean Omega/N by p: {}", shares.join(" "));

    let full = omega_share(at(&cells, 1.0));
    report.record(
        1,
        full >= 0.95,
        format!("p=1.0 mean Omega/N = {full:.4} (need >= 0.95, 20 runs)"),
    );

    let partial = omega_share(at(&cells, 0.7));
    report.record(
        2,
        (partial - 0.80).abs() <= 0.07,
        format!("p=0.7 mean Omega/N = {partial:.4} (need 0.80 +/- 0.07)"),
    );

    let low = [0.1, 0.2, 0.3]
        .iter()
        .map(|&p| omega_share(at(&cells, p)))
        .fold(0.0, f64::max);
    let high = [0.45, 0.6, 0.7, 1.0]
        .iter()
        .map(|&p| omega_share(at(&cells, p)))
        .fold(1.0, f64::min);
    report.record(
        3,
        low < 0.05 && high > 0.30,
        format!(
            "max over p<=0.30 = {low:.4} (need < 0.05), min over p>=0.45 = {high:.4} (need > 0.30)"
        ),
    );
}

fn strong_ceiling(report: &mut Report) {
    let grid = vec![0.2, 0.3, 0.4, 1.0];
    let mut cfg = scenario("ceiling", strong(), Protocol::Ri, None, grid.clone());
    cfg.networks_per_cell = 10;
    cfg.sims_per_network = 2;
    let cells = run(&cfg);
    let full = omega_share(at(&cells, 1.0));
    let low = [0.2, 0.3, 0.4]
        .iter()
        .map(|&p| omega_share(at(&cells, p)))
        .fold(0.0, f64::max);
    report.record(
        4,
        (0.78..=0.92).contains(&full) && low < 0.10,
        format!("p=1.0 mean Omega/N = {full:.4} (need [0.78, 0.92]), max over p<=0.40 = {low:.4} (need < 0.10)"),
    );
}

fn reference_estimate(report: &mut Report) {
    let grid = vec![0.5, 0.7, 1.0];
    let cells = run(&scenario(
        "reference",
        NetworkModel::Configuration,
        Protocol::Ri,
        Some(500),
        grid.clone(),
    ));
    let mut pass = true;
    let mut parts = Vec::new();
    for &p in &grid {
        let c = at(&cells, p);
        pass &= (c.stats.theta - PREVALENCE).abs() <= 0.02 && c.stats.m == 500;
        parts.push(format!("p={p}: theta={:.4} m={}", c.stats.theta, c.stats.m));
    }
    report.record(
        5,
        pass,
        format!("{} (need 0.25 +/- 0.02, m = 500)", parts.join(", ")),
    );
}

fn bias_direction(report: &mut Report) {
    let si = run(&scenario(
        "si_strong",
        strong(),
        Protocol::Si,
        Some(500),
        vec![1.0],
    ));
    let bi = run(&scenario(
        "bi_strong",
        strong(),
        Protocol::Bi,
        Some(500),
        vec![1.0],
    ));
    let weak = NetworkModel::Community(CommunitySpec::weak());
    let grid = rdsim::harness::config::default_p_grid();
    let sri = run(&scenario(
        "sri_weak",
        weak.clone(),
        Protocol::Sri,
        Some(500),
        grid.clone(),
    ));
    let si_weak = run(&scenario("si_weak", weak, Protocol::Si, Some(500), grid));

    let (s, b) = (&si[0].stats, &bi[0].stats);
    let min_delta = |cells: &[CellResult]| {
        cells
            .iter()
            .filter(|c| c.stats.relative_bias.is_finite())
            .min_by(|a, b| a.stats.relative_bias.total_cmp(&b.stats.relative_bias))
            .map(|c| (c.p, c.stats.relative_bias))
            .expect("finite cells")
    };
    let (p_sri, d_sri) = min_delta(&sri);
    let (p_si, d_si) = min_delta(&si_weak);
    println!("    weak SI (for comparison): min Delta = {d_si:.4} at p={p_si}");
    let pass = s.theta < PREVALENCE
        && s.relative_bias >= 0.40
        && b.theta > PREVALENCE
        && (d_sri - 0.15).abs() <= 0.07;
    report.record(
        6,
        pass,
        format!(
            "strong SI theta={:.4} Delta={:.4} (need < 0.25, >= 0.40); strong BI theta={:.4} (need > 0.25); \
             weak SRI min Delta={d_sri:.4} at p={p_sri} (need 0.15 +/- 0.07)",
            s.theta, s.relative_bias, b.theta
        ),
    );
}

fn convergence_direction(report: &mut Report) {
    let sizes = vec![50, 100, 200, 500, 1000, 1500];
    let curve = |protocol| {
        let mut cfg = scenario("convergence", strong(), protocol, None, vec![0.6]);
        cfg.convergence_sizes = sizes.clone();
        run(&cfg).remove(0).convergence
    };
    let (bri, sri) = (curve(Protocol::Bri), curve(Protocol::Sri));
    let show = |pts: &[rdsim::estimators::ConvergencePoint]| {
        pts.iter()
            .map(|p| format!("S{}:{:.4}({})", p.size, p.theta, p.count))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("    BRI theta(S): {}", show(&bri));
    println!("    SRI theta(S): {}", show(&sri));
    let bri_ok = bri
        .iter()
        .filter(|p| p.size > 100)
        .all(|p| p.count > 0 && p.theta > PREVALENCE);
    let sri_ok = sri
        .iter()
        .filter(|p| p.size >= 1000)
        .all(|p| p.count > 0 && p.theta < PREVALENCE);
    report.record(
        7,
        bri_ok && sri_ok,
        format!("p=0.6: BRI theta(S) > 0.25 for S in 200..1500: {bri_ok}; SRI theta(S) < 0.25 for S in 1000..1500: {sri_ok}"),
    );
}

fn estimator_identities(report: &mut Report) {
    let mut rng = substream(MASTER_SEED, StreamTag::Cli, 8, 0);
    let mut failures = Vec::new();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(1.0);
    for trial in 0..1000 {
        let len = rng.random_range(1..60);
        let degrees: Vec<usize> = (0..len).map(|_| rng.random_range(1..200)).collect();
        let infected: Vec<bool> = (0..len).map(|_| rng.random_bool(0.3)).collect();
        let base = rds2_estimate(&SampleView::new(degrees.clone(), infected.clone())).unwrap();

        let c = rng.random_range(2..50);
        let scaled = rds2_estimate(&SampleView::new(
            degrees.iter().map(|k| k * c).collect(),
            infected.clone(),
        ))
        .unwrap();
        if !close(base, scaled) {
            failures.push(format!("scale invariance, trial {trial}"));
        }
        let k = rng.random_range(1..50);
        let uniform = rds2_estimate(&SampleView::new(vec![k; len], infected.clone())).unwrap();
        let raw = infected.iter().filter(|&&a| a).count() as f64 / len as f64;
        if !close(uniform, raw) {
            failures.push(format!("uniform degrees, trial {trial}"));
        }
        if rds2_estimate(&SampleView::new(degrees.clone(), vec![true; len])).unwrap() != 1.0 {
            failures.push(format!("all infected, trial {trial}"));
        }

        // Ensemble statistics against double sums.
        let m = rng.random_range(1..40);
        let xs: Vec<f64> = (0..m).map(|_| rng.random::<f64>()).collect();
        let truth = rng.random_range(0.05..0.95);
        let (theta, sigma) = aggregate_theta(&xs).unwrap();
        let mean = xs.iter().sum::<f64>() / m as f64;
        let pair_var = xs
            .iter()
            .flat_map(|a| xs.iter().map(move |b| (a - b).powi(2)))
            .sum::<f64>()
            / (2 * m * m) as f64;
        let (delta, rel) = average_bias(&xs, truth).unwrap();
        let abs_dev = xs.iter().map(|x| (x - truth).abs()).sum::<f64>() / m as f64;
        if !(close(theta, mean)
            && close(sigma * sigma, pair_var)
            && close(delta, abs_dev)
            && close(rel, abs_dev / truth))
        {
            failures.push(format!("ensemble statistics, trial {trial}"));
        }
        if m >= 2 && pair_var > 0.0 && design_effect(&xs, &xs).unwrap() != 1.0 {
            failures.push(format!(
                "design effect of identical ensembles, trial {trial}"
            ));
        }
    }
    report.record(
        8,
        failures.is_empty(),
        if failures.is_empty() {
            "1000 random lists: scale invariance, uniform reduction, all-infected, theta/sigma/Delta oracles, DE = 1".into()
        } else {
            format!("{} violations, first: {}", failures.len(), failures[0])
        },
    );
}

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

fn spectral_oracle(report: &mut Report) {
    let lambda2 = |g: &Network| {
        walk_laplacian_lambda2(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
            .unwrap()
            .lambda2
    };
    let mut rng = substream(MASTER_SEED, StreamTag::Cli, 9, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let n = rng.random_range(5..=200);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
        for _ in 0..rng.random_range(0..=3 * n) {
            let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
            let e = (u.min(v), u.max(v));
            if u != v && !edges.contains(&e) {
                edges.push(e);
            }
        }
        let g = Network::from_dense_edges(n, edges).unwrap();
        let (fast, dense) = (lambda2(&g), dense_lambda2(&g));
        worst = worst.max((fast - dense).abs() / dense);
    }
    let k4 =
        Network::from_dense_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let k4_err = (lambda2(&k4) - 4.0 / 3.0).abs() / (4.0 / 3.0);

    let d = DegreeDistributionSpec::default();
    let mut pairs = Vec::new();
    for i in 0..3 {
        let k = sample_degree_sequence(
            N,
            &d,
            &mut substream(MASTER_SEED, StreamTag::Network, 900 + i, 0),
        )
        .unwrap();
        let lambda_for = |spec: CommunitySpec| {
            let mut rng = substream(MASTER_SEED, StreamTag::Network, 900 + i, 1);
            lambda2(
                &community_network_from_degrees(&k, &spec, &mut rng)
                    .unwrap()
                    .network,
            )
        };
        pairs.push((
            lambda_for(CommunitySpec::strong()),
            lambda_for(CommunitySpec::weak()),
        ));
    }
    let ordered = pairs.iter().all(|(s, w)| s < w);
    let shown: Vec<String> = pairs
        .iter()
        .map(|(s, w)| format!("{s:.5}<{w:.5}"))
        .collect();
    report.record(
        9,
        worst < 1e-8 && k4_err < 1e-8 && ordered,
        format!(
            "worst relative error {worst:.2e} over 50 graphs, K4 error {k4_err:.2e}, strong<weak on 3 matched pairs: {}",
            shown.join(" ")
        ),
    );
}

fn determinism(report: &mut Report) {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let mut cfg = scenario(
        "determinism",
        strong(),
        Protocol::Sri,
        Some(500),
        vec![0.4, 0.8],
    );
    cfg.networks_per_cell = 3;
    cfg.sims_per_network = 10;
    cfg.convergence_sizes = vec![50, 200];
    cfg.output_dir = a.path().to_path_buf();
    let (_, fa) = run_experiment(&cfg).unwrap();
    cfg.output_dir = b.path().to_path_buf();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let (_, fb) = pool.install(|| run_experiment(&cfg)).unwrap();
    let files = [
        (fa.sims, fb.sims),
        (fa.cells, fb.cells),
        (fa.hist, fb.hist),
        (fa.networks, fb.networks),
        (fa.convergence.unwrap(), fb.convergence.unwrap()),
    ];
    let differing: Vec<String> = files
        .iter()
        .filter(|(x, y)| fs::read(x).unwrap() != fs::read(y).unwrap())
        .map(|(x, _)| x.file_name().unwrap().to_string_lossy().into_owned())
        .collect();
    report.record(
        10,
        differing.is_empty(),
        format!("5 CSVs from two runs (default pool vs one thread), differing: {differing:?}"),
    );
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut report = Report {
        results: Vec::new(),
    };
    println!("acceptance suite, master seed {MASTER_SEED}, N = {N}");
    recruitment(&mut report);
    strong_ceiling(&mut report);
    reference_estimate(&mut report);
    bias_direction(&mut report);
    convergence_direction(&mut report);
    estimator_identities(&mut report);
    spectral_oracle(&mut report);
    determinism(&mut report);

    let failed: Vec<u32> = report
        .results
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(id, _)| *id)
        .collect();
    println!(
        "acceptance: {} of {} criteria passed in {:.0?}; failed: {failed:?}",
        report.results.len() - failed.len(),
        report.results.len(),
        start.elapsed()
    );
    let strict = std::env::var("RDSIM_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    if strict && !failed.is_empty() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
