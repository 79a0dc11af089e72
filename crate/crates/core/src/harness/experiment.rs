use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::Result;
use crate::estimators::{
    aggregate_theta, rds2_estimate, srs_baseline, ConvergencePoint, EnsembleStats, SampleView,
};
use crate::graph::{CommunityPartition, Network};
use crate::harness::config::{NetworkModel, NetworkSource, ScenarioConfig};
use crate::infection::{place_infection, InfectionAssignment};
use crate::io::{fmt_num, read_communities, read_edge_list, write_text};
use crate::netgen::{
    clustered_network, community_network, configuration_model, sample_degree_sequence,
};
use crate::rds::{run_rds, select_seeds, tree_stats, Termination};
use crate::rng::{substream, StreamTag};

/// Tree-size histogram bin width.
pub const TREE_SIZE_BIN: usize = 100;
/// Wave histogram bin width.
pub const WAVE_BIN: usize = 5;

/// One network of the experiment with its infection placement.
#[derive(Debug, Clone)]
pub struct PreparedNetwork {
    pub network: Network,
    pub partition: Option<CommunityPartition>,
    pub infection: InfectionAssignment,
    /// Stubs the generator could not wire (zero for loaded networks).
    pub dropped_stubs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimRecord {
    pub network: usize,
    pub sim: usize,
    pub omega: usize,
    pub trees: usize,
    pub max_wave: usize,
    pub refusals: usize,
    pub termination: Termination,
    /// Participants entering the estimator.
    pub sample_size: usize,
    /// NaN when the sample is empty.
    pub estimate: f64,
    /// Uniform sample of `sample_size` nodes from the same network.
    pub srs_estimate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub scenario: String,
    pub p: f64,
    /// Computed over the finite estimates of `sims`.
    pub stats: EnsembleStats,
    pub true_prevalence: f64,
    pub mean_omega: f64,
    /// `tree_size_hist[i]` counts trees with size in `[100 i, 100 (i+1))`.
    pub tree_size_hist: Vec<usize>,
    /// `wave_hist[i]` counts trees whose deepest wave is in `[5 i, 5 (i+1))`.
    pub wave_hist: Vec<usize>,
    pub sims: Vec<SimRecord>,
    pub convergence: Vec<ConvergencePoint>,
}

/// Builds (or loads) every network of the scenario and places the infection
/// on each. Network `i` uses its own random substreams, so the result does
/// not depend on scheduling.
pub fn prepare_networks(cfg: &ScenarioConfig) -> Result<Vec<PreparedNetwork>> {
    match &cfg.source {
        NetworkSource::Load { edges, communities } => {
            let network = read_edge_list(edges)?;
            let partition = communities
                .as_ref()
                .map(|c| read_communities(&network, c))
                .transpose()?;
            let mut rng = substream(cfg.master_seed, StreamTag::Infection, 0, 0);
            let infection =
                place_infection(&network, partition.as_ref(), &cfg.infection, &mut rng)?;
            Ok(vec![PreparedNetwork {
                network,
                partition,
                infection,
                dropped_stubs: 0,
            }])
        }
        NetworkSource::Generate {
            nodes,
            degrees,
            model,
        } => (0..cfg.networks_per_cell)
            .into_par_iter()
            .map(|i| {
                let mut rng = substream(cfg.master_seed, StreamTag::Network, i as u64, 0);
                let (network, partition, dropped_stubs) = match model {
                    NetworkModel::Configuration => {
                        let k = sample_degree_sequence(*nodes, degrees, &mut rng)?;
                        let w = configuration_model(&k, &mut rng)?;
                        (w.network, None, w.dropped_stubs)
                    }
                    NetworkModel::Clustered(spec) => {
                        let k = sample_degree_sequence(*nodes, degrees, &mut rng)?;
                        let c = clustered_network(&k, spec, &mut rng)?;
                        (c.network, None, c.dropped_stubs)
                    }
                    NetworkModel::Community(spec) => {
                        let c = community_network(*nodes, degrees, spec, &mut rng)?;
                        (c.network, Some(c.partition), c.dropped_stubs)
                    }
                };
                let mut rng = substream(cfg.master_seed, StreamTag::Infection, i as u64, 0);
                let infection =
                    place_infection(&network, partition.as_ref(), &cfg.infection, &mut rng)?;
                Ok(PreparedNetwork {
                    network,
                    partition,
                    infection,
                    dropped_stubs,
                })
            })
            .collect(),
    }
}

struct SimOutput {
    record: SimRecord,
    tree_sizes: Vec<usize>,
    tree_waves: Vec<usize>,
    /// Estimate from the first `S` participants for each convergence size,
    /// `None` when the run did not reach `S`.
    prefix: Vec<Option<f64>>,
}

fn simulate_one(
    cfg: &ScenarioConfig,
    net: &PreparedNetwork,
    p_index: usize,
    p: f64,
    network: usize,
    sim: usize,
) -> Result<SimOutput> {
    let rds = cfg.rds.clone().with_response_rate(p);
    let job = (network * cfg.sims_per_network + sim) as u64;
    let mut rng = substream(cfg.master_seed, StreamTag::Simulation, p_index as u64, job);
    let seeds = select_seeds(&net.network, net.partition.as_ref(), &rds, &mut rng)?;
    let out = run_rds(&net.network, &rds, &seeds, &mut rng)?;

    let view =
        SampleView::from_outcome(&net.network, &net.infection, &out, None, cfg.include_seeds);
    let (estimate, srs_estimate) = if view.is_empty() {
        (f64::NAN, f64::NAN)
    } else {
        let mut rng = substream(cfg.master_seed, StreamTag::Baseline, p_index as u64, job);
        let srs = srs_baseline(&net.network, &net.infection, &[view.len()], &mut rng)?[0];
        (rds2_estimate(&view)?, srs)
    };

    let prefix = cfg
        .convergence_sizes
        .iter()
        .map(|&s| {
            if s == 0 || out.omega() < s {
                return Ok(None);
            }
            let v = SampleView::from_outcome(
                &net.network,
                &net.infection,
                &out,
                Some(s),
                cfg.include_seeds,
            );
            if v.is_empty() {
                Ok(None)
            } else {
                rds2_estimate(&v).map(Some)
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let stats = tree_stats(&out);
    Ok(SimOutput {
        record: SimRecord {
            network,
            sim,
            omega: out.omega(),
            trees: stats.trees.len(),
            max_wave: stats.trees.iter().map(|t| t.waves).max().unwrap_or(0),
            refusals: out.refusal_count,
            termination: out.termination,
            sample_size: view.len(),
            estimate,
            srs_estimate,
        },
        tree_sizes: stats.trees.iter().map(|t| t.size).collect(),
        tree_waves: stats.trees.iter().map(|t| t.waves).collect(),
        prefix,
    })
}

fn bump(hist: &mut Vec<usize>, bin: usize) {
    if hist.len() <= bin {
        hist.resize(bin + 1, 0);
    }
    hist[bin] += 1;
}

/// Runs the whole scenario in memory. Simulations run in parallel and are
/// collected in (network, sim) order.
pub fn simulate_experiment(cfg: &ScenarioConfig) -> Result<Vec<CellResult>> {
    cfg.validate()?;
    let networks = prepare_networks(cfg)?;
    simulate_on(cfg, &networks)
}

/// Same as [`simulate_experiment`] on networks prepared by the caller.
pub fn simulate_on(cfg: &ScenarioConfig, networks: &[PreparedNetwork]) -> Result<Vec<CellResult>> {
    let true_prevalence = networks
        .iter()
        .map(|n| n.infection.true_prevalence())
        .sum::<f64>()
        / networks.len() as f64;
    let jobs: Vec<(usize, usize)> = (0..networks.len())
        .flat_map(|n| (0..cfg.sims_per_network).map(move |s| (n, s)))
        .collect();

    cfg.p_grid
        .iter()
        .enumerate()
        .map(|(p_index, &p)| {
            let outputs = jobs
                .par_iter()
                .map(|&(n, s)| simulate_one(cfg, &networks[n], p_index, p, n, s))
                .collect::<Result<Vec<_>>>()?;

            let mut tree_size_hist = Vec::new();
            let mut wave_hist = Vec::new();
            for o in &outputs {
                o.tree_sizes
                    .iter()
                    .for_each(|&s| bump(&mut tree_size_hist, s / TREE_SIZE_BIN));
                o.tree_waves
                    .iter()
                    .for_each(|&w| bump(&mut wave_hist, w / WAVE_BIN));
            }
            let finite: Vec<&SimRecord> = outputs
                .iter()
                .map(|o| &o.record)
                .filter(|r| r.estimate.is_finite())
                .collect();
            let estimates: Vec<f64> = finite.iter().map(|r| r.estimate).collect();
            let srs: Vec<f64> = finite.iter().map(|r| r.srs_estimate).collect();
            let stats = EnsembleStats::compute(&estimates, &srs, true_prevalence).unwrap_or(
                EnsembleStats {
                    theta: f64::NAN,
                    sigma: f64::NAN,
                    delta: f64::NAN,
                    relative_bias: f64::NAN,
                    design_effect: f64::NAN,
                    m: estimates.len(),
                },
            );
            let convergence = cfg
                .convergence_sizes
                .iter()
                .enumerate()
                .map(|(i, &size)| {
                    let xs: Vec<f64> = outputs.iter().filter_map(|o| o.prefix[i]).collect();
                    let (theta, sigma) = aggregate_theta(&xs).unwrap_or((f64::NAN, f64::NAN));
                    ConvergencePoint {
                        size,
                        theta,
                        sigma,
                        count: xs.len(),
                    }
                })
                .collect();
            let mean_omega =
                outputs.iter().map(|o| o.record.omega as f64).sum::<f64>() / outputs.len() as f64;
            Ok(CellResult {
                scenario: cfg.name.clone(),
                p,
                stats,
                true_prevalence,
                mean_omega,
                tree_size_hist,
                wave_hist,
                sims: outputs.into_iter().map(|o| o.record).collect(),
                convergence,
            })
        })
        .collect()
}

pub const SIMS_HEADER: &str =
    "scenario,p,network,sim,omega,trees,max_wave,refusals,termination,sample_size,estimate,srs_estimate";
pub const CELLS_HEADER: &str =
    "scenario,p,m,true_prevalence,theta,sigma,delta,relative_bias,design_effect,mean_omega";
pub const HIST_HEADER: &str = "scenario,p,kind,bin_start,bin_end,count";
pub const CONVERGENCE_HEADER: &str = "scenario,p,size,theta,sigma,count";
pub const NETWORKS_HEADER: &str =
    "scenario,network,nodes,edges,components,lcc_nodes,transitivity,mean_local_clustering,communities,dropped_stubs,infected";

pub fn format_sims_csv(cells: &[CellResult]) -> String {
    let mut s = format!("{SIMS_HEADER}\n");
    for c in cells {
        for r in &c.sims {
            s += &format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                c.scenario,
                fmt_num(c.p),
                r.network,
                r.sim,
                r.omega,
                r.trees,
                r.max_wave,
                r.refusals,
                r.termination.name(),
                r.sample_size,
                fmt_num(r.estimate),
                fmt_num(r.srs_estimate)
            );
        }
    }
    s
}

pub fn format_cells_csv(cells: &[CellResult]) -> String {
    let mut s = format!("{CELLS_HEADER}\n");
    for c in cells {
        let st = &c.stats;
        s += &format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            c.scenario,
            fmt_num(c.p),
            st.m,
            fmt_num(c.true_prevalence),
            fmt_num(st.theta),
            fmt_num(st.sigma),
            fmt_num(st.delta),
            fmt_num(st.relative_bias),
            fmt_num(st.design_effect),
            fmt_num(c.mean_omega)
        );
    }
    s
}

pub fn format_hist_csv(cells: &[CellResult]) -> String {
    let mut s = format!("{HIST_HEADER}\n");
    for c in cells {
        for (kind, width, hist) in [
            ("tree_size", TREE_SIZE_BIN, &c.tree_size_hist),
            ("waves", WAVE_BIN, &c.wave_hist),
        ] {
            for (i, count) in hist.iter().enumerate() {
                s += &format!(
                    "{},{},{kind},{},{},{count}\n",
                    c.scenario,
                    fmt_num(c.p),
                    i * width,
                    (i + 1) * width
                );
            }
        }
    }
    s
}

pub fn format_convergence_csv(cells: &[CellResult]) -> String {
    let mut s = format!("{CONVERGENCE_HEADER}\n");
    for c in cells {
        for pt in &c.convergence {
            s += &format!(
                "{},{},{},{},{},{}\n",
                c.scenario,
                fmt_num(c.p),
                pt.size,
                fmt_num(pt.theta),
                fmt_num(pt.sigma),
                pt.count
            );
        }
    }
    s
}

pub fn format_networks_csv(scenario: &str, networks: &[PreparedNetwork]) -> String {
    let mut s = format!("{NETWORKS_HEADER}\n");
    for (i, n) in networks.iter().enumerate() {
        let size = n.network.size_summary();
        s += &format!(
            "{scenario},{i},{},{},{},{},{},{},{},{},{}\n",
            size.nodes,
            size.edges,
            size.components,
            size.lcc_nodes,
            fmt_num(n.network.global_clustering()),
            fmt_num(n.network.mean_local_clustering()),
            n.partition.as_ref().map_or(0, |p| p.community_count()),
            n.dropped_stubs,
            n.infection.infected_count()
        );
    }
    s
}

/// Paths written by [`run_experiment`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputFiles {
    pub sims: PathBuf,
    pub cells: PathBuf,
    pub hist: PathBuf,
    pub networks: PathBuf,
    pub convergence: Option<PathBuf>,
}

impl OutputFiles {
    pub fn for_scenario(dir: &Path, name: &str, with_convergence: bool) -> Self {
        Self {
            sims: dir.join(format!("{name}_sims.csv")),
            cells: dir.join(format!("{name}_cells.csv")),
            hist: dir.join(format!("{name}_hist.csv")),
            networks: dir.join(format!("{name}_networks.csv")),
            convergence: with_convergence.then(|| dir.join(format!("{name}_convergence.csv"))),
        }
    }
}

/// Runs the scenario and writes its CSV files into `cfg.output_dir`.
/// All files are produced by this thread after the parallel work is done.
pub fn run_experiment(cfg: &ScenarioConfig) -> Result<(Vec<CellResult>, OutputFiles)> {
    cfg.validate()?;
    let networks = prepare_networks(cfg)?;
    let cells = simulate_on(cfg, &networks)?;
    let files = OutputFiles::for_scenario(
        &cfg.output_dir,
        &cfg.name,
        !cfg.convergence_sizes.is_empty(),
    );
    write_text(&files.networks, &format_networks_csv(&cfg.name, &networks))?;
    write_text(&files.sims, &format_sims_csv(&cells))?;
    write_text(&files.cells, &format_cells_csv(&cells))?;
    write_text(&files.hist, &format_hist_csv(&cells))?;
    if let Some(path) = &files.convergence {
        write_text(path, &format_convergence_csv(&cells))?;
    }
    Ok((cells, files))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infection::{Protocol, ProtocolSpec};
    use crate::netgen::CommunitySpec;

    fn small(name: &str) -> ScenarioConfig {
        let mut cfg = ScenarioConfig::new(name, 400, NetworkModel::Configuration);
        cfg.networks_per_cell = 2;
        cfg.sims_per_network = 3;
        cfg.p_grid = vec![0.0, 1.0];
        cfg.master_seed = 3;
        cfg
    }

    #[test]
    fn replication_accounting() {
        let cells = simulate_experiment(&small("acct")).unwrap();
        assert_eq!(cells.len(), 2);
        for c in &cells {
            assert_eq!(c.sims.len(), 6);
            let pairs: Vec<(usize, usize)> = c.sims.iter().map(|r| (r.network, r.sim)).collect();
            assert_eq!(pairs, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]);
            let trees: usize = c.sims.iter().map(|r| r.trees).sum();
            assert_eq!(c.tree_size_hist.iter().sum::<usize>(), trees);
            assert_eq!(c.wave_hist.iter().sum::<usize>(), trees);
        }
    }

    #[test]
    fn zero_response_rate_samples_only_seeds() {
        let cells = simulate_experiment(&small("p0")).unwrap();
        let c = &cells[0];
        assert_eq!(c.p, 0.0);
        assert_eq!(c.mean_omega, 10.0);
        assert!(c.sims.iter().all(|r| r.omega == 10 && r.sample_size == 10));
        assert_eq!(c.stats.m, 6);
        assert!(c.stats.theta.is_finite());
        assert_eq!(c.tree_size_hist, vec![60]);
        assert_eq!(c.wave_hist, vec![60]);
    }

    #[test]
    fn excluding_seeds_leaves_empty_samples_undefined() {
        let mut cfg = small("noseeds");
        cfg.include_seeds = false;
        cfg.p_grid = vec![0.0];
        let cells = simulate_experiment(&cfg).unwrap();
        assert!(cells[0]
            .sims
            .iter()
            .all(|r| r.estimate.is_nan() && r.sample_size == 0));
        assert_eq!(cells[0].stats.m, 0);
        assert!(cells[0].stats.theta.is_nan());
    }

    #[test]
    fn repeated_runs_match() {
        let mut cfg = ScenarioConfig::new(
            "det",
            400,
            NetworkModel::Community(CommunitySpec {
                size_max: 100,
                n_overlap: 20,
                ..CommunitySpec::weak()
            }),
        );
        cfg.networks_per_cell = 2;
        cfg.sims_per_network = 4;
        cfg.p_grid = vec![0.6, 1.0];
        cfg.infection = ProtocolSpec::new(Protocol::Bri);
        cfg.convergence_sizes = vec![10, 50, 100];
        let a = simulate_experiment(&cfg).unwrap();
        let b = simulate_experiment(&cfg).unwrap();
        assert_eq!(format_sims_csv(&a), format_sims_csv(&b));
        assert_eq!(format_convergence_csv(&a), format_convergence_csv(&b));
        cfg.master_seed += 1;
        let c = simulate_experiment(&cfg).unwrap();
        assert_ne!(format_sims_csv(&a), format_sims_csv(&c));
    }
}
