//! One respondent-driven sampling run on a configuration-model network:
//! recruitment trees, waves and the outcome CSV.

use rdsim::harness::default_output_dir;
use rdsim::io::write_text;
use rdsim::netgen::{configuration_model, sample_degree_sequence, DegreeDistributionSpec};
use rdsim::rds::{format_outcome_csv, run_rds, select_seeds, tree_stats, RdsConfig};
use rdsim::rng::{substream, StreamTag};

fn main() -> rdsim::Result<()> {
    let mut rng = substream(5, StreamTag::Network, 0, 0);
    let k = sample_degree_sequence(10_000, &DegreeDistributionSpec::default(), &mut rng)?;
    let net = configuration_model(&k, &mut rng)?.network;

    for p in [0.3, 0.5, 0.8, 1.0] {
        let cfg = RdsConfig::default().with_response_rate(p);
        let mut rng = substream(5, StreamTag::Simulation, 0, (p * 100.0) as u64);
        let seeds = select_seeds(&net, None, &cfg, &mut rng)?;
        let out = run_rds(&net, &cfg, &seeds, &mut rng)?;
        let stats = tree_stats(&out);
        let largest = stats.trees.iter().map(|t| t.size).max().unwrap_or(0);
        let deepest = stats.trees.iter().map(|t| t.waves).max().unwrap_or(0);
        println!(
            "p = {p:.1}: Omega = {:5}, refusals = {:5}, largest tree {largest:5}, deepest wave {deepest:3}",
            out.omega(),
            out.refusal_count
        );
        if p == 0.5 {
            let path = default_output_dir().join("outcome_p050.csv");
            write_text(&path, &format_outcome_csv(&net, &out))?;
            println!("         outcome written to {}", path.display());
        }
    }

    let capped = RdsConfig::default().with_cap(Some(500));
    let mut rng = substream(5, StreamTag::Simulation, 1, 0);
    let seeds = select_seeds(&net, None, &capped, &mut rng)?;
    let out = run_rds(&net, &capped, &seeds, &mut rng)?;
    println!(
        "cap 500: Omega = {}, stopped because {}",
        out.omega(),
        out.termination.name()
    );
    Ok(())
}
