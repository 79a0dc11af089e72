//! Transitivity and mean local clustering side by side. The two disagree a
//! lot on heavy-tailed networks, which is why both are reported.

use rdsim::netgen::{
    clustered_network, configuration_model, sample_degree_sequence, ClusteredSpec,
    DegreeDistributionSpec,
};
use rdsim::rng::{substream, StreamTag};
use rdsim::Network;

fn main() -> rdsim::Result<()> {
    // A triangle with a pendant path: 3 closed out of 6 connected triples.
    let toy = Network::from_dense_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])?;
    println!(
        "toy graph: {} triangle, transitivity {:.3}, mean local {:.3}",
        toy.triangle_count(),
        toy.global_clustering(),
        toy.mean_local_clustering()
    );

    println!(
        "{:>8} {:>14} {:>14} {:>14}",
        "network", "configuration", "few", "many"
    );
    for i in 0..5 {
        let mut rng = substream(3, StreamTag::Network, i, 0);
        let k = sample_degree_sequence(10_000, &DegreeDistributionSpec::default(), &mut rng)?;
        let nets = [
            configuration_model(&k, &mut rng)?.network,
            clustered_network(&k, &ClusteredSpec::few_triangles(), &mut rng)?.network,
            clustered_network(&k, &ClusteredSpec::many_triangles(), &mut rng)?.network,
        ];
        let cells: Vec<String> = nets
            .iter()
            .map(|g| {
                format!(
                    "{:.4}/{:.4}",
                    g.global_clustering(),
                    g.mean_local_clustering()
                )
            })
            .collect();
        println!("{i:>8} {:>14} {:>14} {:>14}", cells[0], cells[1], cells[2]);
    }
    println!("(each cell: transitivity / mean local clustering)");
    Ok(())
}
