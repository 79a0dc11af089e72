//! RDS-II estimates from an ensemble of capped runs, compared with uniform
//! samples of the same size.

use rdsim::estimators::{rds2_estimate, srs_baseline, EnsembleStats, SampleView};
use rdsim::infection::{place_infection, Protocol, ProtocolSpec};
use rdsim::netgen::{community_network, CommunitySpec, DegreeDistributionSpec};
use rdsim::rds::{run_rds, select_seeds, RdsConfig};
use rdsim::rng::{substream, StreamTag};

fn main() -> rdsim::Result<()> {
    let mut rng = substream(21, StreamTag::Network, 0, 0);
    let g = community_network(
        10_000,
        &DegreeDistributionSpec::default(),
        &CommunitySpec::strong(),
        &mut rng,
    )?;
    let cfg = RdsConfig::default().with_cap(Some(500));

    for kind in [Protocol::Ri, Protocol::Si, Protocol::Bi] {
        let mut rng = substream(21, StreamTag::Infection, 0, 0);
        let inf = place_infection(
            &g.network,
            Some(&g.partition),
            &ProtocolSpec::new(kind),
            &mut rng,
        )?;
        let mut rds = Vec::new();
        let mut srs = Vec::new();
        for run in 0..200 {
            let mut rng = substream(21, StreamTag::Simulation, 0, run);
            let seeds = select_seeds(&g.network, None, &cfg, &mut rng)?;
            let out = run_rds(&g.network, &cfg, &seeds, &mut rng)?;
            let view = SampleView::from_outcome(&g.network, &inf, &out, None, true);
            rds.push(rds2_estimate(&view)?);
            let mut rng = substream(21, StreamTag::Baseline, 0, run);
            srs.extend(srs_baseline(&g.network, &inf, &[view.len()], &mut rng)?);
        }
        let s = EnsembleStats::compute(&rds, &srs, inf.true_prevalence())?;
        println!(
            "{:>3}: P = {:.3}, theta = {:.4}, sigma = {:.4}, Delta = {:.3}, design effect = {:.2}",
            kind.name(),
            inf.true_prevalence(),
            s.theta,
            s.sigma,
            s.relative_bias,
            s.design_effect
        );
    }
    Ok(())
}
