//! Places a 25% trait with each protocol on one strong-community network and
//! shows where it lands: mean degree of infected nodes and the share living
//! in communities smaller than 200.

use rdsim::infection::{place_infection, Protocol, ProtocolSpec};
use rdsim::netgen::{community_network, CommunitySpec, DegreeDistributionSpec};
use rdsim::rng::{substream, StreamTag};

fn main() -> rdsim::Result<()> {
    let mut rng = substream(11, StreamTag::Network, 0, 0);
    let g = community_network(
        10_000,
        &DegreeDistributionSpec::default(),
        &CommunitySpec::strong(),
        &mut rng,
    )?;
    let degrees = g.network.degrees();
    let mean_degree = degrees.iter().sum::<usize>() as f64 / degrees.len() as f64;
    println!("network mean degree {mean_degree:.2}");

    for kind in [
        Protocol::Ri,
        Protocol::Pi,
        Protocol::Pri,
        Protocol::Si,
        Protocol::Bi,
        Protocol::Sri,
        Protocol::Bri,
    ] {
        let spec = ProtocolSpec::new(kind);
        let mut rng = substream(11, StreamTag::Infection, 0, kind as u64);
        let inf = place_infection(&g.network, Some(&g.partition), &spec, &mut rng)?;
        let infected = inf.infected_nodes();
        let k = infected.iter().map(|&v| degrees[v]).sum::<usize>() as f64 / infected.len() as f64;
        let small = infected
            .iter()
            .filter(|&&v| g.partition.size(g.partition.smallest_community(v)) < 200)
            .count() as f64
            / infected.len() as f64;
        println!(
            "{:>4} (noise {:.2}): P = {:.4}, mean infected degree {k:6.2}, in small communities {small:.3}",
            kind.name(),
            spec.noise,
            inf.true_prevalence()
        );
    }
    Ok(())
}
