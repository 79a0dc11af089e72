use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rdsim::estimators::{srs_baseline, EnsembleStats, SampleView};
use rdsim::harness::config::{clustered_spec_by_name, community_spec_by_name, FALLBACK_OUTPUT_DIR};
use rdsim::harness::{run_experiment, summarize, ScenarioConfig, OUTPUT_DIR_ENV};
use rdsim::infection::{place_infection, Protocol, ProtocolSpec};
use rdsim::io::{self, fmt_num};
use rdsim::netgen::{
    clustered_network, community_network, configuration_model, sample_degree_sequence,
    DegreeDistributionSpec,
};
use rdsim::rds::{
    format_outcome_csv, parse_outcome_csv, run_rds, select_seeds, RdsConfig, SeedStrategy,
};
use rdsim::rng::{substream, StreamTag};
use rdsim::spectral::{walk_laplacian_lambda2, DEFAULT_MAX_ITER, DEFAULT_TOL};
use rdsim::{CommunityPartition, Error, Network, Result};

/// Respondent-driven sampling on synthetic and empirical networks.
#[derive(Parser)]
#[command(name = "rdsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a network and write its edge list (and community labels).
    Generate(GenerateArgs),
    /// Place a trait on a network and write the infection labels.
    Infect(InfectArgs),
    /// Run RDS simulations and write one outcome CSV per run.
    Simulate(SimulateArgs),
    /// Compute ensemble statistics from outcome CSVs.
    Estimate(EstimateArgs),
    /// Spectral gap of the random-walk Laplacian.
    Spectral(SpectralArgs),
    /// Run a scenario file over its response-rate grid.
    Experiment(ExperimentArgs),
    /// Merge every `*_cells.csv` of a directory into one table.
    Summarize(SummarizeArgs),
}

#[derive(Args)]
struct OutDir {
    /// Output directory.
    #[arg(long, env = OUTPUT_DIR_ENV, default_value = FALLBACK_OUTPUT_DIR)]
    output_dir: PathBuf,
}

#[derive(Args)]
struct GraphInput {
    /// Edge list: two node tokens per line.
    #[arg(long)]
    edges: PathBuf,
    /// Community labels: node token followed by community ids.
    #[arg(long)]
    communities: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<(Network, Option<CommunityPartition>)> {
        let net = io::read_edge_list(&self.edges)?;
        let part = self
            .communities
            .as_ref()
            .map(|p| io::read_communities(&net, p))
            .transpose()?;
        Ok((net, part))
    }
}

#[derive(Args)]
struct GenerateArgs {
    /// configuration, clustered or community.
    #[arg(long, default_value = "configuration")]
    model: String,
    #[arg(long, default_value_t = 10_000)]
    nodes: usize,
    #[arg(long, default_value_t = 2.5)]
    degree_exponent: f64,
    #[arg(long, default_value_t = 1e-4)]
    cutoff_rate: f64,
    #[arg(long, default_value_t = 3)]
    k_min: usize,
    /// Defaults to nodes - 1.
    #[arg(long)]
    k_max: Option<usize>,
    /// Clustered preset: many or few.
    #[arg(long, default_value = "many")]
    triangles: String,
    #[arg(long)]
    c0: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Community preset: strong, strong-moderate, moderate-weak or weak.
    #[arg(long, default_value = "strong")]
    structure: String,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    n_overlap: Option<usize>,
    #[arg(long)]
    memberships_per_overlap: Option<usize>,
    #[arg(long)]
    size_exponent: Option<f64>,
    #[arg(long)]
    size_min: Option<usize>,
    #[arg(long)]
    size_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// File name stem for the outputs.
    #[arg(long, default_value = "network")]
    name: String,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct InfectArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// RI, PI, PRI, SI, BI, SRI or BRI.
    #[arg(long, default_value = "RI")]
    protocol: Protocol,
    #[arg(long, default_value_t = 0.25)]
    prevalence: f64,
    /// Redistributed fraction; defaults to the protocol's own value.
    #[arg(long)]
    noise: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "infection")]
    name: String,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct RdsArgs {
    #[arg(long, default_value_t = 1.0)]
    response_rate: f64,
    #[arg(long, default_value_t = 10)]
    n_seeds: usize,
    #[arg(long, default_value_t = 3)]
    coupons: usize,
    #[arg(long, default_value_t = 5.0)]
    mean_wait: f64,
    /// Stop after this many participants (unlimited when absent).
    #[arg(long)]
    sample_cap: Option<usize>,
    /// uniform, small-community, large-community or sequential-restart.
    #[arg(long, default_value = "uniform")]
    seed_strategy: SeedStrategy,
    #[arg(long, default_value_t = 50)]
    per_seed_cap: usize,
    #[arg(long, default_value_t = 200)]
    small_threshold: usize,
    #[arg(long, default_value_t = 500)]
    large_threshold: usize,
}

impl RdsArgs {
    fn config(&self) -> RdsConfig {
        RdsConfig {
            n_seeds: self.n_seeds,
            coupons: self.coupons,
            mean_wait: self.mean_wait,
            response_rate: self.response_rate,
            sample_cap: self.sample_cap,
            seed_strategy: self.seed_strategy,
            per_seed_cap: self.per_seed_cap,
            small_threshold: self.small_threshold,
            large_threshold: self.large_threshold,
        }
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    rds: RdsArgs,
    /// Number of independent runs.
    #[arg(long, default_value_t = 1)]
    sims: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Outputs are named `<name>_<run>.csv`.
    #[arg(long, default_value = "outcome")]
    name: String,
    #[command(flatten)]
    out: OutDir,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    edges: PathBuf,
    /// Infection labels: node token followed by 0 or 1.
    #[arg(long)]
    infection: PathBuf,
    /// Outcome CSV files, one per simulation.
    #[arg(required = true)]
    outcomes: Vec<PathBuf>,
    /// Leave the seeds out of the estimator.
    #[arg(long)]
    exclude_seeds: bool,
    /// Seed for the matched uniform samples.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the row here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectralArgs {
    #[arg(long)]
    edges: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Scenario file.
    #[arg(long)]
    config: PathBuf,
    /// Overrides `output_dir` of the scenario file. Without either, the
    /// directory comes from the environment.
    #[arg(long)]
    output_dir: Option<PathBuf>,
    #[arg(long)]
    master_seed: Option<u64>,
    #[arg(long)]
    networks_per_cell: Option<usize>,
    #[arg(long)]
    sims_per_network: Option<usize>,
    /// Comma-separated response rates.
    #[arg(long, value_delimiter = ',')]
    p_grid: Option<Vec<f64>>,
}

#[derive(Args)]
struct SummarizeArgs {
    /// Directory holding `*_cells.csv` files.
    #[arg(env = OUTPUT_DIR_ENV, default_value = FALLBACK_OUTPUT_DIR)]
    dir: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => io::write_text(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn unknown(flag: &str, value: &str) -> Error {
    Error::Config(format!("--{flag}: unknown value {value:?}"))
}

fn generate(a: GenerateArgs) -> Result<()> {
    let degrees = DegreeDistributionSpec {
        exponent: a.degree_exponent,
        cutoff_rate: a.cutoff_rate,
        k_min: a.k_min,
        k_max: a.k_max,
    };
    let mut rng = substream(a.seed, StreamTag::Cli, 0, 0);
    let (net, part, dropped) = match a.model.as_str() {
        "configuration" => {
            let k = sample_degree_sequence(a.nodes, &degrees, &mut rng)?;
            let w = configuration_model(&k, &mut rng)?;
            (w.network, None, w.dropped_stubs)
        }
        "clustered" => {
            let mut spec = clustered_spec_by_name(&a.triangles)
                .ok_or_else(|| unknown("triangles", &a.triangles))?;
            spec.c0 = a.c0.unwrap_or(spec.c0);
            spec.alpha = a.alpha.unwrap_or(spec.alpha);
            spec.beta = a.beta.unwrap_or(spec.beta);
            let k = sample_degree_sequence(a.nodes, &degrees, &mut rng)?;
            let c = clustered_network(&k, &spec, &mut rng)?;
            (c.network, None, c.dropped_stubs)
        }
        "community" => {
            let mut spec = community_spec_by_name(&a.structure)
                .ok_or_else(|| unknown("structure", &a.structure))?;
            spec.mu = a.mu.unwrap_or(spec.mu);
            spec.n_overlap = a.n_overlap.unwrap_or(spec.n_overlap);
            spec.memberships_per_overlap = a
                .memberships_per_overlap
                .unwrap_or(spec.memberships_per_overlap);
            spec.size_exponent = a.size_exponent.unwrap_or(spec.size_exponent);
            spec.size_min = a.size_min.unwrap_or(spec.size_min);
            spec.size_max = a.size_max.unwrap_or(spec.size_max);
            let c = community_network(a.nodes, &degrees, &spec, &mut rng)?;
            (c.network, Some(c.partition), c.dropped_stubs)
        }
        other => return Err(unknown("model", other)),
    };
    let edges = a.out.output_dir.join(format!("{}.edges", a.name));
    io::write_edge_list(&edges, &net)?;
    println!("edges\t{}", edges.display());
    if let Some(part) = &part {
        let labels = a.out.output_dir.join(format!("{}.communities", a.name));
        io::write_communities(&labels, &net, part)?;
        println!("communities\t{}", labels.display());
    }
    let s = net.size_summary();
    println!(
        "nodes\t{}\nedges_count\t{}\ncomponents\t{}",
        s.nodes, s.edges, s.components
    );
    println!("transitivity\t{}", fmt_num(net.global_clustering()));
    println!(
        "mean_local_clustering\t{}",
        fmt_num(net.mean_local_clustering())
    );
    println!("dropped_stubs\t{dropped}");
    Ok(())
}

fn infect(a: InfectArgs) -> Result<()> {
    let (net, part) = a.graph.load()?;
    let mut spec = ProtocolSpec::new(a.protocol);
    spec.prevalence = a.prevalence;
    spec.noise = a.noise.unwrap_or(spec.noise);
    let mut rng = substream(a.seed, StreamTag::Cli, 1, 0);
    let inf = place_infection(&net, part.as_ref(), &spec, &mut rng)?;
    let path = a.out.output_dir.join(format!("{}.txt", a.name));
    io::write_infection(&path, &net, &inf)?;
    println!("infection\t{}", path.display());
    println!("true_prevalence\t{}", fmt_num(inf.true_prevalence()));
    Ok(())
}

fn simulate(a: SimulateArgs) -> Result<()> {
    let (net, part) = a.graph.load()?;
    let cfg = a.rds.config();
    for run in 0..a.sims {
        let mut rng = substream(a.seed, StreamTag::Cli, 2, run as u64);
        let seeds = select_seeds(&net, part.as_ref(), &cfg, &mut rng)?;
        let out = run_rds(&net, &cfg, &seeds, &mut rng)?;
        let path = a.out.output_dir.join(format!("{}_{run}.csv", a.name));
        emit(&format_outcome_csv(&net, &out), Some(&path))?;
        println!(
            "{}\tomega={}\ttrees={}\trefusals={}\t{}",
            path.display(),
            out.omega(),
            out.tree_count(),
            out.refusal_count,
            out.termination.name()
        );
    }
    Ok(())
}

fn estimate(a: EstimateArgs) -> Result<()> {
    let net = io::read_edge_list(&a.edges)?;
    let inf = io::read_infection(&net, &a.infection)?;
    let mut rng = substream(a.seed, StreamTag::Cli, 3, 0);
    let mut rds = Vec::new();
    let mut srs = Vec::new();
    for path in &a.outcomes {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })?;
        let out = parse_outcome_csv(&net, &text, &path.display().to_string())?;
        let view = SampleView::from_outcome(&net, &inf, &out, None, !a.exclude_seeds);
        if view.is_empty() {
            continue;
        }
        rds.push(rdsim::estimators::rds2_estimate(&view)?);
        srs.extend(srs_baseline(&net, &inf, &[view.len()], &mut rng)?);
    }
    let s = EnsembleStats::compute(&rds, &srs, inf.true_prevalence())?;
    let text = format!(
        "m,true_prevalence,theta,sigma,delta,relative_bias,design_effect\n{},{},{},{},{},{},{}\n",
        s.m,
        fmt_num(inf.true_prevalence()),
        fmt_num(s.theta),
        fmt_num(s.sigma),
        fmt_num(s.delta),
        fmt_num(s.relative_bias),
        fmt_num(s.design_effect)
    );
    emit(&text, a.out.as_deref())
}

fn spectral(a: SpectralArgs) -> Result<()> {
    let net = io::read_edge_list(&a.edges)?;
    let r = walk_laplacian_lambda2(&net, a.tol, a.max_iter)?;
    let text = format!(
        "lambda2,mixing_time,p_min_bound,iterations,residual\n{},{},{},{},{}\n",
        fmt_num(r.lambda2),
        fmt_num(r.mixing_time),
        fmt_num(r.p_min_bound),
        r.iterations,
        fmt_num(r.residual)
    );
    emit(&text, a.out.as_deref())
}

fn experiment(a: ExperimentArgs) -> Result<()> {
    let mut cfg = ScenarioConfig::from_file(&a.config)?;
    if let Some(d) = a.output_dir {
        cfg.output_dir = d;
    }
    cfg.master_seed = a.master_seed.unwrap_or(cfg.master_seed);
    cfg.networks_per_cell = a.networks_per_cell.unwrap_or(cfg.networks_per_cell);
    cfg.sims_per_network = a.sims_per_network.unwrap_or(cfg.sims_per_network);
    if let Some(g) = a.p_grid {
        cfg.p_grid = g;
    }
    let (cells, files) = run_experiment(&cfg)?;
    for c in &cells {
        println!(
            "p={}\ttheta={}\tsigma={}\trelative_bias={}\tmean_omega={}",
            fmt_num(c.p),
            fmt_num(c.stats.theta),
            fmt_num(c.stats.sigma),
            fmt_num(c.stats.relative_bias),
            fmt_num(c.mean_omega)
        );
    }
    for path in [&files.networks, &files.sims, &files.cells, &files.hist]
        .into_iter()
        .chain(files.convergence.as_ref())
    {
        println!("wrote\t{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Generate(a) => generate(a),
        Command::Infect(a) => infect(a),
        Command::Simulate(a) => simulate(a),
        Command::Estimate(a) => estimate(a),
        Command::Spectral(a) => spectral(a),
        Command::Experiment(a) => experiment(a),
        Command::Summarize(a) => {
            summarize(&a.dir).and_then(|t| emit(&t.to_csv(), a.out.as_deref()))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rdsim: {e}");
            ExitCode::FAILURE
        }
    }
}
