//! Estimate as a function of sample size S, averaged over runs that reached
//! S, for trait placements concentrated on small or large communities.

use rdsim::estimators::convergence_curve;
use rdsim::infection::{place_infection, Protocol, ProtocolSpec};
use rdsim::netgen::{community_network, CommunitySpec, DegreeDistributionSpec};
use rdsim::rds::{run_rds, select_seeds, RdsConfig};
use rdsim::rng::{substream, StreamTag};

fn main() -> rdsim::Result<()> {
    let mut rng = substream(31, StreamTag::Network, 0, 0);
    let g = community_network(
        10_000,
        &DegreeDistributionSpec::default(),
        &CommunitySpec::strong(),
        &mut rng,
    )?;
    let cfg = RdsConfig::default().with_response_rate(0.6);
    let outcomes = (0..100)
        .map(|run| {
            let mut rng = substream(31, StreamTag::Simulation, 0, run);
            let seeds = select_seeds(&g.network, None, &cfg, &mut rng)?;
            run_rds(&g.network, &cfg, &seeds, &mut rng)
        })
        .collect::<rdsim::Result<Vec<_>>>()?;

    let sizes = [25, 50, 100, 200, 500, 1000, 2000];
    for kind in [Protocol::Sri, Protocol::Bri] {
        let mut rng = substream(31, StreamTag::Infection, 0, 0);
        let inf = place_infection(
            &g.network,
            Some(&g.partition),
            &ProtocolSpec::new(kind),
            &mut rng,
        )?;
        println!("{} (P = {:.3})", kind.name(), inf.true_prevalence());
        for pt in convergence_curve(&outcomes, &g.network, &inf, &sizes)? {
            println!(
                "  S = {:5}: theta = {:.4} +/- {:.4} over {} runs",
                pt.size, pt.theta, pt.sigma, pt.count
            );
        }
    }
    Ok(())
}
