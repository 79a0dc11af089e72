//! Plain-text file formats: edge lists, community labels, infection labels.
//!
//! All readers skip blank lines and lines starting with `#`.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{CommunityPartition, Network};
use crate::infection::InfectionAssignment;

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(text.as_bytes())
        .map_err(|e| Error::io(path, e))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses an edge list: two whitespace-separated node tokens per line.
pub fn parse_edge_list(text: &str, source: &str) -> Result<Network> {
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        match (tokens.next(), tokens.next()) {
            (Some(u), Some(v)) => edges.push((u, v)),
            _ => return Err(Error::parse(source, line, "expected two node tokens")),
        }
    }
    Network::build_from_tokens(&edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Network> {
    let path = path.as_ref();
    parse_edge_list(&read_text(path)?, &path.display().to_string())
}

pub fn format_edge_list(net: &Network) -> String {
    let mut out = String::new();
    for (u, v) in net.edges() {
        out.push_str(net.label(u));
        out.push(' ');
        out.push_str(net.label(v));
        out.push('\n');
    }
    out
}

pub fn write_edge_list(path: impl AsRef<Path>, net: &Network) -> Result<()> {
    write_text(path.as_ref(), &format_edge_list(net))
}

/// Parses a community-label file: node token followed by one or more
/// community tokens.
pub fn parse_communities(net: &Network, text: &str, source: &str) -> Result<CommunityPartition> {
    let mut rows = Vec::new();
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        let node = tokens.next().expect("line is non-empty");
        let comms: Vec<&str> = tokens.collect();
        if comms.is_empty() {
            return Err(Error::parse(
                source,
                line,
                "expected at least one community id",
            ));
        }
        rows.push((node, comms));
    }
    CommunityPartition::from_labels(net, &rows)
}

pub fn read_communities(net: &Network, path: impl AsRef<Path>) -> Result<CommunityPartition> {
    let path = path.as_ref();
    parse_communities(net, &read_text(path)?, &path.display().to_string())
}

pub fn format_communities(net: &Network, part: &CommunityPartition) -> String {
    let mut out = String::new();
    for v in 0..part.node_count() {
        out.push_str(net.label(v));
        for c in part.memberships(v) {
            out.push(' ');
            out.push_str(&c.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn write_communities(
    path: impl AsRef<Path>,
    net: &Network,
    part: &CommunityPartition,
) -> Result<()> {
    write_text(path.as_ref(), &format_communities(net, part))
}

/// Parses an infection-label file: `node-token 0|1` per line. Every node of
/// `net` must appear.
pub fn parse_infection(net: &Network, text: &str, source: &str) -> Result<InfectionAssignment> {
    let lookup = net.node_by_label();
    let mut infected: Vec<Option<bool>> = vec![None; net.node_count()];
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        let node = tokens.next().expect("line is non-empty");
        let flag = match tokens.next() {
            Some("0") => false,
            Some("1") => true,
            _ => return Err(Error::parse(source, line, "expected `node 0|1`")),
        };
        let v = *lookup
            .get(node)
            .ok_or_else(|| Error::parse(source, line, format!("unknown node {node:?}")))?;
        infected[v] = Some(flag);
    }
    let infected = infected
        .into_iter()
        .enumerate()
        .map(|(v, f)| {
            f.ok_or_else(|| {
                Error::parse(source, 0, format!("node {:?} has no label", net.label(v)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InfectionAssignment::from_flags(infected))
}

pub fn read_infection(net: &Network, path: impl AsRef<Path>) -> Result<InfectionAssignment> {
    let path = path.as_ref();
    parse_infection(net, &read_text(path)?, &path.display().to_string())
}

pub fn format_infection(net: &Network, inf: &InfectionAssignment) -> String {
    let mut out = String::new();
    for (v, &flag) in inf.flags().iter().enumerate() {
        out.push_str(net.label(v));
        out.push_str(if flag { " 1\n" } else { " 0\n" });
    }
    out
}

pub fn write_infection(
    path: impl AsRef<Path>,
    net: &Network,
    inf: &InfectionAssignment,
) -> Result<()> {
    write_text(path.as_ref(), &format_infection(net, inf))
}

/// Formats a float with ten significant digits in positional notation.
/// Integral values print without a fractional part.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.');
        trimmed.to_string()
    } else {
        s
    }
}

pub fn parse_num(s: &str) -> Option<f64> {
    match s {
        "nan" => Some(f64::NAN),
        "inf" => Some(f64::INFINITY),
        "-inf" => Some(f64::NEG_INFINITY),
        _ => s.parse().ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_skips_comments_and_keeps_tokens() {
        let text = "# header\nalice bob\n\nbob carol\n# x y\ncarol alice\n";
        let net = parse_edge_list(text, "t").unwrap();
        assert_eq!(net.node_count(), 3);
        assert_eq!(net.edge_count(), 3);
        assert_eq!(
            format_edge_list(&net),
            "alice bob\nalice carol\nbob carol\n"
        );
    }

    #[test]
    fn edge_list_reports_line() {
        let err = parse_edge_list("1 2\n3\n", "f.txt").unwrap_err();
        assert_eq!(err.to_string(), "f.txt:2: expected two node tokens");
        assert!(matches!(
            parse_edge_list("# only\n", "f"),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn communities_round_trip() {
        let net = parse_edge_list("1 2\n2 3\n3 4\n", "t").unwrap();
        let part = parse_communities(&net, "1 a\n2 a b\n3 b\n4 b\n", "c").unwrap();
        assert_eq!(part.sizes(), [2, 3]);
        let text = format_communities(&net, &part);
        assert_eq!(parse_communities(&net, &text, "c").unwrap(), part);
        assert!(parse_communities(&net, "1\n", "c").is_err());
    }

    #[test]
    fn infection_round_trip() {
        let net = parse_edge_list("1 2\n2 3\n", "t").unwrap();
        let inf = parse_infection(&net, "1 1\n2 0\n3 0\n", "i").unwrap();
        assert_eq!(inf.infected_count(), 1);
        assert_eq!(format_infection(&net, &inf), "1 1\n2 0\n3 0\n");
        assert!(parse_infection(&net, "1 1\n2 0\n", "i").is_err());
        assert!(parse_infection(&net, "1 2\n2 0\n3 0\n", "i").is_err());
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.25), "0.25");
        assert_eq!(fmt_num(1.0 / 3.0), "0.3333333333");
        assert_eq!(fmt_num(12345.678912345), "12345.67891");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(500.0), "500");
        assert_eq!(fmt_num(-0.05), "-0.05");
        assert_eq!(fmt_num(1.5e-12), "0.0000000000015");
        assert!(parse_num(&fmt_num(f64::NAN)).unwrap().is_nan());
    }

    proptest::proptest! {
        #[test]
        fn number_format_keeps_ten_digits(x in -1e6f64..1e6) {
            let back = parse_num(&fmt_num(x)).unwrap();
            proptest::prop_assert!((back - x).abs() <= x.abs() * 1e-9 + 1e-300);
            // formatting is idempotent once rounded
            proptest::prop_assert_eq!(fmt_num(back), fmt_num(x));
        }
    }
}
