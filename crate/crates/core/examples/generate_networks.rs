//! Generates one network of each family at N = 10000 and writes the edge
//! lists (plus community labels) into the output directory.
//!
//!     cargo run --release --example generate_networks

use rdsim::harness::default_output_dir;
use rdsim::io::{write_communities, write_edge_list};
use rdsim::netgen::{
    clustered_network, community_network, configuration_model, sample_degree_sequence,
    ClusteredSpec, CommunitySpec, DegreeDistributionSpec,
};
use rdsim::rng::{substream, StreamTag};

fn main() -> rdsim::Result<()> {
    let n = 10_000;
    let dir = default_output_dir();
    let degrees = DegreeDistributionSpec::default();
    let mut rng = substream(7, StreamTag::Network, 0, 0);

    let k = sample_degree_sequence(n, &degrees, &mut rng)?;
    let mean = k.iter().sum::<usize>() as f64 / n as f64;
    println!(
        "degree sequence: mean {mean:.2}, max {}",
        k.iter().max().unwrap()
    );

    let config = configuration_model(&k, &mut rng)?;
    let many = clustered_network(&k, &ClusteredSpec::many_triangles(), &mut rng)?;
    let strong = community_network(n, &degrees, &CommunitySpec::strong(), &mut rng)?;
    let weak = community_network(n, &degrees, &CommunitySpec::weak(), &mut rng)?;

    for (name, net, dropped) in [
        ("configuration", &config.network, config.dropped_stubs),
        ("many_triangles", &many.network, many.dropped_stubs),
        ("strong", &strong.network, strong.dropped_stubs),
        ("weak", &weak.network, weak.dropped_stubs),
    ] {
        let s = net.size_summary();
        println!(
            "{name:>15}: {} edges, {} components, {dropped} dropped stubs",
            s.edges, s.components
        );
        write_edge_list(dir.join(format!("{name}.edges")), net)?;
    }
    for (name, g) in [("strong", &strong), ("weak", &weak)] {
        println!(
            "{name:>15}: {} communities, {} inter-community edges, {} attempts",
            g.partition.community_count(),
            g.partition.inter_community_edges(&g.network),
            g.attempts
        );
        write_communities(
            dir.join(format!("{name}.communities")),
            &g.network,
            &g.partition,
        )?;
    }
    println!("wrote edge lists to {}", dir.display());
    Ok(())
}
