//! Experiment files, summaries and loaded networks.

use std::fs;

use rdsim::estimators::convergence_curve;
use rdsim::graph::CommunityPartition;
use rdsim::harness::experiment::PreparedNetwork;
use rdsim::harness::{
    prepare_networks, run_experiment, simulate_on, summarize, NetworkModel, ScenarioConfig,
};
use rdsim::infection::{place_infection, Protocol, ProtocolSpec};
use rdsim::io::{
    fmt_num, parse_num, read_communities, read_edge_list, write_communities, write_edge_list,
};
use rdsim::netgen::{community_network, CommunitySpec, DegreeDistributionSpec};
use rdsim::rds::{run_rds, select_seeds};
use rdsim::rng::{substream, StreamTag};

fn small(name: &str, dir: &std::path::Path) -> ScenarioConfig {
    let mut cfg = ScenarioConfig::new(name, 600, NetworkModel::Configuration);
    cfg.networks_per_cell = 2;
    cfg.sims_per_network = 4;
    cfg.p_grid = vec![0.2, 0.6, 1.0];
    cfg.master_seed = 11;
    cfg.convergence_sizes = vec![10, 40, 200];
    cfg.output_dir = dir.to_path_buf();
    cfg
}

fn same(a: f64, b: f64) -> bool {
    a == b || (a.is_nan() && b.is_nan())
}

fn printed(x: f64) -> f64 {
    parse_num(&fmt_num(x)).unwrap()
}

#[test]
fn summary_reads_back_what_the_experiment_wrote() {
    let dir = tempfile::tempdir().unwrap();
    let (ra, _) = run_experiment(&small("alpha", dir.path())).unwrap();
    let mut other = small("beta", dir.path());
    other.infection = ProtocolSpec::new(Protocol::Pri);
    let (rb, _) = run_experiment(&other).unwrap();

    let table = summarize(dir.path()).unwrap();
    assert_eq!(table.rows.len(), ra.len() + rb.len());
    for cell in ra.iter().chain(&rb) {
        let row = table.get(&cell.scenario, printed(cell.p)).unwrap();
        assert_eq!(row.m, cell.stats.m);
        assert!(same(row.theta, printed(cell.stats.theta)));
        assert!(same(row.sigma, printed(cell.stats.sigma)));
        assert!(same(row.relative_bias, printed(cell.stats.relative_bias)));
        assert!(same(row.design_effect, printed(cell.stats.design_effect)));
        assert!(same(row.mean_omega, printed(cell.mean_omega)));
    }
    let names: Vec<&str> = table.rows.iter().map(|r| r.scenario.as_str()).collect();
    assert!(names.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn output_files_do_not_depend_on_thread_count() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let four = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let (_, fa) = one
        .install(|| run_experiment(&small("det", a.path())))
        .unwrap();
    let (_, fb) = four
        .install(|| run_experiment(&small("det", b.path())))
        .unwrap();
    let pairs = [
        (&fa.sims, &fb.sims),
        (&fa.cells, &fb.cells),
        (&fa.hist, &fb.hist),
        (&fa.networks, &fb.networks),
        (
            fa.convergence.as_ref().unwrap(),
            fb.convergence.as_ref().unwrap(),
        ),
    ];
    for (x, y) in pairs {
        assert_eq!(
            fs::read(x).unwrap(),
            fs::read(y).unwrap(),
            "{}",
            x.display()
        );
    }
}

#[test]
fn convergence_matches_the_estimator_module() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = small("conv", dir.path());
    cfg.networks_per_cell = 1;
    cfg.sims_per_network = 6;
    let networks = prepare_networks(&cfg).unwrap();
    let cells = simulate_on(&cfg, &networks).unwrap();
    let net = &networks[0];
    for (p_index, cell) in cells.iter().enumerate() {
        let rds = cfg.rds.clone().with_response_rate(cell.p);
        let outcomes: Vec<_> = (0..cfg.sims_per_network)
            .map(|job| {
                let mut rng = substream(
                    cfg.master_seed,
                    StreamTag::Simulation,
                    p_index as u64,
                    job as u64,
                );
                let seeds = select_seeds(&net.network, None, &rds, &mut rng).unwrap();
                run_rds(&net.network, &rds, &seeds, &mut rng).unwrap()
            })
            .collect();
        for (o, r) in outcomes.iter().zip(&cell.sims) {
            assert_eq!(o.omega(), r.omega);
        }
        let curve = convergence_curve(
            &outcomes,
            &net.network,
            &net.infection,
            &cfg.convergence_sizes,
        )
        .unwrap();
        assert_eq!(curve.len(), cell.convergence.len());
        for (a, b) in curve.iter().zip(&cell.convergence) {
            assert_eq!(a.size, b.size);
            assert_eq!(a.count, b.count);
            assert!(
                same(a.theta, b.theta) && same(a.sigma, b.sigma),
                "{a:?} vs {b:?}"
            );
        }
    }
}

/// Equal up to a renaming of community ids.
fn same_grouping(a: &CommunityPartition, b: &CommunityPartition) -> bool {
    let groups = |p: &CommunityPartition| {
        let mut g = vec![Vec::new(); p.community_count()];
        for v in 0..p.node_count() {
            p.memberships(v).iter().for_each(|&c| g[c].push(v));
        }
        g.sort();
        g
    };
    a.node_count() == b.node_count() && groups(a) == groups(b)
}

#[test]
fn loaded_network_reproduces_the_in_memory_run() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = substream(5, StreamTag::Network, 0, 0);
    let g = community_network(
        2000,
        &DegreeDistributionSpec::default(),
        &CommunitySpec::strong(),
        &mut rng,
    )
    .unwrap();
    let (edges, comms) = (dir.path().join("g.edges"), dir.path().join("g.communities"));
    write_edge_list(&edges, &g.network).unwrap();
    write_communities(&comms, &g.network, &g.partition).unwrap();

    let loaded = read_edge_list(&edges).unwrap();
    assert_eq!(loaded.node_count(), g.network.node_count());
    assert_eq!(
        loaded.edges().collect::<Vec<_>>(),
        g.network.edges().collect::<Vec<_>>()
    );
    let part = read_communities(&loaded, &comms).unwrap();
    assert!(
        same_grouping(&part, &g.partition),
        "community membership changed on reload"
    );

    let text = format!(
        "[scenario]\nname = loaded\nmaster_seed = 9\nnetworks_per_cell = 1\nsims_per_network = 5\n\
         p_grid = 0.5, 1\noutput_dir = {}\n\n[network]\nsource = load\nedges = g.edges\ncommunities = g.communities\n\n\
         [infection]\nprotocol = SI\n\n[rds]\nsample_cap = 500\n",
        dir.path().join("out").display()
    );
    let cfg_path = dir.path().join("loaded.ini");
    fs::write(&cfg_path, text).unwrap();
    let cfg = ScenarioConfig::from_file(&cfg_path).unwrap();
    let (from_files, files) = run_experiment(&cfg).unwrap();
    assert!(files.cells.exists());

    let infection = place_infection(
        &g.network,
        Some(&part),
        &cfg.infection,
        &mut substream(cfg.master_seed, StreamTag::Infection, 0, 0),
    )
    .unwrap();
    let prepared = PreparedNetwork {
        network: g.network.clone(),
        partition: Some(part),
        infection,
        dropped_stubs: 0,
    };
    let in_memory = simulate_on(&cfg, &[prepared]).unwrap();
    assert_eq!(from_files, in_memory);
}
