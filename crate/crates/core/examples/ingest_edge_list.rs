//! Reads an empirical edge list (and optional community labels) and prints
//! the summary statistics used to describe contact networks.
//!
//!     cargo run --example ingest_edge_list -- contacts.edges [contacts.communities]
//!
//! Without arguments a small built-in network is used.

use rdsim::io::{parse_communities, parse_edge_list, read_communities, read_edge_list};

const BUILT_IN: &str = "# two households and a shared workplace
alice bob
bob carol
alice carol
carol dave
dave erin
erin frank
dave frank
";

const BUILT_IN_COMMUNITIES: &str = "alice 0\nbob 0\ncarol 0 1\ndave 1\nerin 1\nfrank 1\n";

fn main() -> rdsim::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (net, part) = match args.as_slice() {
        [] => {
            let net = parse_edge_list(BUILT_IN, "built-in")?;
            let part = parse_communities(&net, BUILT_IN_COMMUNITIES, "built-in")?;
            (net, Some(part))
        }
        [edges] => (read_edge_list(edges)?, None),
        [edges, labels, ..] => {
            let net = read_edge_list(edges)?;
            let part = read_communities(&net, labels)?;
            (net, Some(part))
        }
    };

    let s = net.size_summary();
    println!("N = {}, E = {}", s.nodes, s.edges);
    println!(
        "components = {}, largest holds {} nodes and {} edges",
        s.components, s.lcc_nodes, s.lcc_edges
    );
    println!("transitivity = {:.4}", net.global_clustering());
    println!("mean local clustering = {:.4}", net.mean_local_clustering());
    if let Some(part) = part {
        let sizes = part.sizes();
        println!(
            "C = {}, smallest {} and largest {} members",
            sizes.len(),
            sizes.iter().min().unwrap(),
            sizes.iter().max().unwrap()
        );
    }
    Ok(())
}
