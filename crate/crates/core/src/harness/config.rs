//! Scenario files: flat `key = value` lines grouped under `[section]`
//! headers. Every key has a matching `--key-name` flag on the command line
//! (underscores become dashes).
//!
//! ```text
//! [scenario]
//! name = strong_si
//! master_seed = 7
//! networks_per_cell = 10
//! sims_per_network = 50
//! p_grid = 0.5, 0.7, 1.0
//!
//! [network]
//! model = community
//! structure = strong
//! nodes = 10000
//!
//! [infection]
//! protocol = SI
//!
//! [rds]
//! sample_cap = 500
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::infection::{Protocol, ProtocolSpec};
use crate::netgen::{ClusteredSpec, CommunitySpec, DegreeDistributionSpec};
use crate::rds::{RdsConfig, SeedStrategy};

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "RDSIM_OUTPUT_DIR";

/// Output directory used when neither the config nor the environment names one.
pub const FALLBACK_OUTPUT_DIR: &str = "rdsim-out";

pub fn default_output_dir() -> PathBuf {
    std::env::var_os(OUTPUT_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(FALLBACK_OUTPUT_DIR))
}

/// Response rates 0.05, 0.10, ..., 1.00.
pub fn default_p_grid() -> Vec<f64> {
    (1..=20).map(|i| i as f64 / 20.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum NetworkModel {
    Configuration,
    Clustered(ClusteredSpec),
    Community(CommunitySpec),
}

impl NetworkModel {
    pub fn name(&self) -> &'static str {
        match self {
            NetworkModel::Configuration => "configuration",
            NetworkModel::Clustered(_) => "clustered",
            NetworkModel::Community(_) => "community",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NetworkSource {
    Generate {
        nodes: usize,
        degrees: DegreeDistributionSpec,
        model: NetworkModel,
    },
    Load {
        edges: PathBuf,
        communities: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub name: String,
    pub source: NetworkSource,
    pub infection: ProtocolSpec,
    /// `response_rate` is overwritten by each entry of `p_grid`.
    pub rds: RdsConfig,
    pub networks_per_cell: usize,
    pub sims_per_network: usize,
    pub p_grid: Vec<f64>,
    pub master_seed: u64,
    pub output_dir: PathBuf,
    /// Count seeds as sample members in the estimator.
    pub include_seeds: bool,
    /// Sample sizes for the prefix-estimate curve; empty disables it.
    pub convergence_sizes: Vec<usize>,
}

impl ScenarioConfig {
    /// Paper-default scenario on generated networks: 10 networks with 50
    /// simulations each, RI at 25%, default RDS settings.
    pub fn new(name: impl Into<String>, nodes: usize, model: NetworkModel) -> Self {
        Self {
            name: name.into(),
            source: NetworkSource::Generate {
                nodes,
                degrees: DegreeDistributionSpec::default(),
                model,
            },
            infection: ProtocolSpec::new(Protocol::Ri),
            rds: RdsConfig::default(),
            networks_per_cell: 10,
            sims_per_network: 50,
            p_grid: default_p_grid(),
            master_seed: 0,
            output_dir: default_output_dir(),
            include_seeds: true,
            convergence_sizes: Vec::new(),
        }
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::parse(&text, &path.display().to_string())?;
        // Relative data paths are taken relative to the config file.
        if let NetworkSource::Load { edges, communities } = &mut cfg.source {
            let base = path.parent().unwrap_or(Path::new(""));
            if edges.is_relative() {
                *edges = base.join(&*edges);
            }
            if let Some(c) = communities.as_mut().filter(|c| c.is_relative()) {
                *c = base.join(&*c);
            }
        }
        Ok(cfg)
    }

    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut doc = Document::parse(text, source)?;
        let cfg = build(&mut doc)?;
        doc.reject_leftovers()?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let cfg_err = |msg: String| Err(Error::Config(msg));
        if self.name.is_empty()
            || !self
                .name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        {
            return cfg_err(format!(
                "[scenario] name: {:?} must be non-empty and use only letters, digits, '_' or '-'",
                self.name
            ));
        }
        if self.networks_per_cell == 0 {
            return cfg_err("[scenario] networks_per_cell: must be at least 1".into());
        }
        if self.sims_per_network == 0 {
            return cfg_err("[scenario] sims_per_network: must be at least 1".into());
        }
        if self.p_grid.is_empty() {
            return cfg_err("[scenario] p_grid: must list at least one response rate".into());
        }
        if let Some(p) = self.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return cfg_err(format!("[scenario] p_grid: {p} not in [0, 1]"));
        }
        if self.convergence_sizes.windows(2).any(|w| w[0] >= w[1]) {
            return cfg_err("[scenario] convergence_sizes: must be strictly ascending".into());
        }
        if let NetworkSource::Load { .. } = self.source {
            if self.networks_per_cell != 1 {
                return cfg_err(format!(
                    "[scenario] networks_per_cell: a loaded network gives exactly 1, got {}",
                    self.networks_per_cell
                ));
            }
        }
        let has_partition = match &self.source {
            NetworkSource::Generate { model, .. } => matches!(model, NetworkModel::Community(_)),
            NetworkSource::Load { communities, .. } => communities.is_some(),
        };
        if self.infection.kind.needs_partition() && !has_partition {
            return cfg_err(format!(
                "[infection] protocol: {} needs community labels",
                self.infection.kind
            ));
        }
        if matches!(
            self.rds.seed_strategy,
            SeedStrategy::SmallCommunity | SeedStrategy::LargeCommunity
        ) && !has_partition
        {
            return cfg_err(format!(
                "[rds] seed_strategy: {} needs community labels",
                self.rds.seed_strategy.name()
            ));
        }
        self.rds
            .validate()
            .map_err(|e| Error::Config(format!("[rds] {e}")))
    }

    /// Renders the config in the file format accepted by [`ScenarioConfig::parse`].
    pub fn to_text(&self) -> String {
        use crate::io::fmt_num;
        let list = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(", ");
        let mut s = String::new();
        s += "[scenario]\n";
        s += &format!("name = {}\n", self.name);
        s += &format!("master_seed = {}\n", self.master_seed);
        s += &format!("networks_per_cell = {}\n", self.networks_per_cell);
        s += &format!("sims_per_network = {}\n", self.sims_per_network);
        s += &format!(
            "p_grid = {}\n",
            list(&mut self.p_grid.iter().map(|&p| fmt_num(p)))
        );
        s += &format!("output_dir = {}\n", self.output_dir.display());
        s += &format!("include_seeds = {}\n", self.include_seeds);
        if !self.convergence_sizes.is_empty() {
            s += &format!(
                "convergence_sizes = {}\n",
                list(&mut self.convergence_sizes.iter().map(|v| v.to_string()))
            );
        }
        s += "\n[network]\n";
        match &self.source {
            NetworkSource::Generate {
                nodes,
                degrees,
                model,
            } => {
                s += "source = generate\n";
                s += &format!("model = {}\n", model.name());
                s += &format!("nodes = {nodes}\n");
                s += &format!("degree_exponent = {}\n", fmt_num(degrees.exponent));
                s += &format!("cutoff_rate = {}\n", fmt_num(degrees.cutoff_rate));
                s += &format!("k_min = {}\n", degrees.k_min);
                if let Some(k) = degrees.k_max {
                    s += &format!("k_max = {k}\n");
                }
                match model {
                    NetworkModel::Configuration => {}
                    NetworkModel::Clustered(c) => {
                        s += &format!("c0 = {}\n", fmt_num(c.c0));
                        s += &format!("alpha = {}\n", fmt_num(c.alpha));
                        s += &format!("beta = {}\n", fmt_num(c.beta));
                    }
                    NetworkModel::Community(c) => {
                        s += &format!("size_exponent = {}\n", fmt_num(c.size_exponent));
                        s += &format!("size_min = {}\n", c.size_min);
                        s += &format!("size_max = {}\n", c.size_max);
                        s += &format!("mu = {}\n", fmt_num(c.mu));
                        s += &format!("n_overlap = {}\n", c.n_overlap);
                        s += &format!("memberships_per_overlap = {}\n", c.memberships_per_overlap);
                    }
                }
            }
            NetworkSource::Load { edges, communities } => {
                s += "source = load\n";
                s += &format!("edges = {}\n", edges.display());
                if let Some(c) = communities {
                    s += &format!("communities = {}\n", c.display());
                }
            }
        }
        s += "\n[infection]\n";
        s += &format!("protocol = {}\n", self.infection.kind);
        s += &format!("prevalence = {}\n", fmt_num(self.infection.prevalence));
        s += &format!("noise = {}\n", fmt_num(self.infection.noise));
        let r = &self.rds;
        s += "\n[rds]\n";
        s += &format!("n_seeds = {}\n", r.n_seeds);
        s += &format!("coupons = {}\n", r.coupons);
        s += &format!("mean_wait = {}\n", fmt_num(r.mean_wait));
        match r.sample_cap {
            Some(c) => s += &format!("sample_cap = {c}\n"),
            None => s += "sample_cap = none\n",
        }
        s += &format!("seed_strategy = {}\n", r.seed_strategy.name());
        s += &format!("per_seed_cap = {}\n", r.per_seed_cap);
        s += &format!("small_threshold = {}\n", r.small_threshold);
        s += &format!("large_threshold = {}\n", r.large_threshold);
        s
    }
}

struct Entry {
    value: String,
    line: usize,
    used: bool,
}

/// Raw `section.key -> value` table with line numbers for diagnostics.
struct Document {
    source: String,
    entries: BTreeMap<(String, String), Entry>,
}

const SECTIONS: [&str; 4] = ["scenario", "network", "infection", "rds"];

impl Document {
    fn parse(text: &str, source: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut section: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::parse(source, line_no, "unterminated section header"))?
                    .trim()
                    .to_ascii_lowercase();
                if !SECTIONS.contains(&name.as_str()) {
                    return Err(Error::parse(
                        source,
                        line_no,
                        format!("unknown section [{name}]; expected one of {SECTIONS:?}"),
                    ));
                }
                section = Some(name);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(source, line_no, "expected `key = value`"))?;
            let key = key.trim().to_ascii_lowercase().replace('-', "_");
            let sec = section.clone().ok_or_else(|| {
                Error::parse(
                    source,
                    line_no,
                    format!("`{key}` appears before any [section]"),
                )
            })?;
            let entry = Entry {
                value: value.trim().to_string(),
                line: line_no,
                used: false,
            };
            if let Some(prev) = entries.insert((sec.clone(), key.clone()), entry) {
                return Err(Error::parse(
                    source,
                    line_no,
                    format!("[{sec}] {key} already set on line {}", prev.line),
                ));
            }
        }
        Ok(Self {
            source: source.to_string(),
            entries,
        })
    }

    fn raw(&mut self, section: &str, key: &str) -> Option<(String, usize)> {
        self.entries
            .get_mut(&(section.to_string(), key.to_string()))
            .map(|e| {
                e.used = true;
                (e.value.clone(), e.line)
            })
    }

    fn get<T: FromStr>(&mut self, section: &str, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        match self.raw(section, key) {
            None => Ok(None),
            Some((v, line)) => v.parse::<T>().map(Some).map_err(|e| {
                Error::parse(
                    &self.source,
                    line,
                    format!("[{section}] {key}: cannot parse {v:?}: {e}"),
                )
            }),
        }
    }

    fn list<T: FromStr>(&mut self, section: &str, key: &str) -> Result<Option<Vec<T>>>
    where
        T::Err: std::fmt::Display,
    {
        let Some((v, line)) = self.raw(section, key) else {
            return Ok(None);
        };
        v.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|item| {
                item.parse::<T>().map_err(|e| {
                    Error::parse(
                        &self.source,
                        line,
                        format!("[{section}] {key}: cannot parse {item:?}: {e}"),
                    )
                })
            })
            .collect::<Result<Vec<T>>>()
            .map(Some)
    }

    fn fail(&self, section: &str, key: &str, message: impl std::fmt::Display) -> Error {
        let key_pair = (section.to_string(), key.to_string());
        match self.entries.get(&key_pair) {
            Some(e) => Error::parse(
                &self.source,
                e.line,
                format!("[{section}] {key}: {message}"),
            ),
            None => Error::Config(format!("{}: [{section}] {key}: {message}", self.source)),
        }
    }

    fn reject_leftovers(&self) -> Result<()> {
        match self.entries.iter().find(|(_, e)| !e.used) {
            Some(((sec, key), e)) => Err(Error::parse(
                &self.source,
                e.line,
                format!("key `{key}` in [{sec}] is unknown or does not apply here"),
            )),
            None => Ok(()),
        }
    }
}

fn community_preset(name: &str) -> Option<CommunitySpec> {
    match name {
        "strong" => Some(CommunitySpec::strong()),
        "strong-moderate" | "strong_moderate" => Some(CommunitySpec::strong_moderate()),
        "moderate-weak" | "moderate_weak" => Some(CommunitySpec::moderate_weak()),
        "weak" => Some(CommunitySpec::weak()),
        _ => None,
    }
}

fn clustered_preset(name: &str) -> Option<ClusteredSpec> {
    match name {
        "many" | "many-triangles" => Some(ClusteredSpec::many_triangles()),
        "few" | "few-triangles" => Some(ClusteredSpec::few_triangles()),
        _ => None,
    }
}

fn build(doc: &mut Document) -> Result<ScenarioConfig> {
    let name: String = doc
        .get("scenario", "name")?
        .ok_or_else(|| Error::Config(format!("{}: [scenario] name: missing", doc.source)))?;

    let source_kind: String = doc
        .get("network", "source")?
        .unwrap_or_else(|| "generate".into());
    let source = match source_kind.as_str() {
        "generate" => build_generated(doc)?,
        "load" => {
            let edges: PathBuf = doc.get("network", "edges")?.ok_or_else(|| {
                doc.fail("network", "edges", "missing (required when source = load)")
            })?;
            NetworkSource::Load {
                edges,
                communities: doc.get("network", "communities")?,
            }
        }
        other => {
            return Err(doc.fail(
                "network",
                "source",
                format!("{other:?} is neither generate nor load"),
            ))
        }
    };
    let loaded = matches!(source, NetworkSource::Load { .. });

    let protocol: Protocol = doc.get("infection", "protocol")?.unwrap_or(Protocol::Ri);
    let mut infection = ProtocolSpec::new(protocol);
    if let Some(p) = doc.get("infection", "prevalence")? {
        infection.prevalence = p;
    }
    if let Some(x) = doc.get("infection", "noise")? {
        infection.noise = x;
    }

    let mut rds = RdsConfig::default();
    if let Some(v) = doc.get("rds", "n_seeds")? {
        rds.n_seeds = v;
    }
    if let Some(v) = doc.get("rds", "coupons")? {
        rds.coupons = v;
    }
    if let Some(v) = doc.get("rds", "mean_wait")? {
        rds.mean_wait = v;
    }
    if let Some(v) = doc.get::<String>("rds", "sample_cap")? {
        rds.sample_cap = match v.to_ascii_lowercase().as_str() {
            "none" | "unlimited" => None,
            n => Some(n.parse().map_err(|_| {
                doc.fail(
                    "rds",
                    "sample_cap",
                    format!("{v:?} is not a count or `none`"),
                )
            })?),
        };
    }
    if let Some(v) = doc.get::<SeedStrategy>("rds", "seed_strategy")? {
        rds.seed_strategy = v;
    }
    if let Some(v) = doc.get("rds", "per_seed_cap")? {
        rds.per_seed_cap = v;
    }
    if let Some(v) = doc.get("rds", "small_threshold")? {
        rds.small_threshold = v;
    }
    if let Some(v) = doc.get("rds", "large_threshold")? {
        rds.large_threshold = v;
    }

    Ok(ScenarioConfig {
        name,
        source,
        infection,
        rds,
        networks_per_cell: doc
            .get("scenario", "networks_per_cell")?
            .unwrap_or(if loaded { 1 } else { 10 }),
        sims_per_network: doc
            .get("scenario", "sims_per_network")?
            .unwrap_or(if loaded { 500 } else { 50 }),
        p_grid: doc
            .list("scenario", "p_grid")?
            .unwrap_or_else(default_p_grid),
        master_seed: doc.get("scenario", "master_seed")?.unwrap_or(0),
        output_dir: doc
            .get("scenario", "output_dir")?
            .unwrap_or_else(default_output_dir),
        include_seeds: doc.get("scenario", "include_seeds")?.unwrap_or(true),
        convergence_sizes: doc
            .list("scenario", "convergence_sizes")?
            .unwrap_or_default(),
    })
}

fn build_generated(doc: &mut Document) -> Result<NetworkSource> {
    let nodes: usize = doc.get("network", "nodes")?.ok_or_else(|| {
        doc.fail(
            "network",
            "nodes",
            "missing (required when source = generate)",
        )
    })?;
    let mut degrees = DegreeDistributionSpec::default();
    if let Some(v) = doc.get("network", "degree_exponent")? {
        degrees.exponent = v;
    }
    if let Some(v) = doc.get("network", "cutoff_rate")? {
        degrees.cutoff_rate = v;
    }
    if let Some(v) = doc.get("network", "k_min")? {
        degrees.k_min = v;
    }
    degrees.k_max = doc.get("network", "k_max")?;

    let model_name: String = doc
        .get("network", "model")?
        .unwrap_or_else(|| "configuration".into());
    let model = match model_name.as_str() {
        "configuration" => NetworkModel::Configuration,
        "clustered" => {
            let preset: String = doc
                .get("network", "triangles")?
                .unwrap_or_else(|| "many".into());
            let mut spec = clustered_preset(&preset).ok_or_else(|| {
                doc.fail("network", "triangles", format!("unknown preset {preset:?}"))
            })?;
            if let Some(v) = doc.get("network", "c0")? {
                spec.c0 = v;
            }
            if let Some(v) = doc.get("network", "alpha")? {
                spec.alpha = v;
            }
            if let Some(v) = doc.get("network", "beta")? {
                spec.beta = v;
            }
            NetworkModel::Clustered(spec)
        }
        "community" => {
            let preset: String = doc
                .get("network", "structure")?
                .unwrap_or_else(|| "strong".into());
            let mut spec = community_preset(&preset).ok_or_else(|| {
                doc.fail("network", "structure", format!("unknown preset {preset:?}"))
            })?;
            if let Some(v) = doc.get("network", "size_exponent")? {
                spec.size_exponent = v;
            }
            if let Some(v) = doc.get("network", "size_min")? {
                spec.size_min = v;
            }
            if let Some(v) = doc.get("network", "size_max")? {
                spec.size_max = v;
            }
            if let Some(v) = doc.get("network", "mu")? {
                spec.mu = v;
            }
            if let Some(v) = doc.get("network", "n_overlap")? {
                spec.n_overlap = v;
            }
            if let Some(v) = doc.get("network", "memberships_per_overlap")? {
                spec.memberships_per_overlap = v;
            }
            NetworkModel::Community(spec)
        }
        other => {
            return Err(doc.fail(
                "network",
                "model",
                format!("{other:?} is not one of configuration, clustered, community"),
            ))
        }
    };
    Ok(NetworkSource::Generate {
        nodes,
        degrees,
        model,
    })
}

/// Preset name lookup shared with the command line.
pub fn community_spec_by_name(name: &str) -> Option<CommunitySpec> {
    community_preset(name)
}

pub fn clustered_spec_by_name(name: &str) -> Option<ClusteredSpec> {
    clustered_preset(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# comment
[scenario]
name = demo
master_seed = 11
networks_per_cell = 2
sims_per_network = 3
p_grid = 0.5, 1.0
output_dir = out

[network]
model = community
structure = weak
nodes = 500
size_max = 100

[infection]
protocol = sri

[rds]
sample_cap = 200
seed_strategy = large-community
";

    #[test]
    fn parses_sample() {
        let cfg = ScenarioConfig::parse(SAMPLE, "demo.ini").unwrap();
        assert_eq!(cfg.name, "demo");
        assert_eq!(cfg.master_seed, 11);
        assert_eq!(cfg.p_grid, vec![0.5, 1.0]);
        assert_eq!(cfg.infection.kind, Protocol::Sri);
        assert_eq!(cfg.infection.noise, 0.4);
        assert_eq!(cfg.rds.sample_cap, Some(200));
        assert_eq!(cfg.rds.seed_strategy, SeedStrategy::LargeCommunity);
        match &cfg.source {
            NetworkSource::Generate {
                nodes,
                model: NetworkModel::Community(c),
                ..
            } => {
                assert_eq!(*nodes, 500);
                assert_eq!(c.mu, 0.3);
                assert_eq!(c.n_overlap, 1000);
                assert_eq!(c.size_max, 100);
            }
            other => panic!("unexpected source {other:?}"),
        }
    }

    #[test]
    fn text_round_trip() {
        let cfg = ScenarioConfig::parse(SAMPLE, "demo.ini").unwrap();
        let again = ScenarioConfig::parse(&cfg.to_text(), "again.ini").unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn diagnostics_carry_line_and_field() {
        let bad = SAMPLE.replace("sims_per_network = 3", "sims_per_network = three");
        let msg = ScenarioConfig::parse(&bad, "demo.ini")
            .unwrap_err()
            .to_string();
        assert!(msg.starts_with("demo.ini:6:"), "{msg}");
        assert!(msg.contains("sims_per_network"), "{msg}");

        let bad = SAMPLE.replace("size_max = 100", "size_maxx = 100");
        let msg = ScenarioConfig::parse(&bad, "demo.ini")
            .unwrap_err()
            .to_string();
        assert!(
            msg.starts_with("demo.ini:14:") && msg.contains("size_maxx"),
            "{msg}"
        );

        let bad = SAMPLE.replace("[rds]", "[rdss]");
        assert!(ScenarioConfig::parse(&bad, "x").is_err());
        let bad = SAMPLE.replace("name = demo", "name = de mo");
        assert!(matches!(
            ScenarioConfig::parse(&bad, "x"),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn partition_requirements_are_checked() {
        let bad = SAMPLE
            .replace("model = community", "model = configuration")
            .replace("structure = weak\n", "")
            .replace("size_max = 100\n", "");
        let err = ScenarioConfig::parse(&bad, "x").unwrap_err().to_string();
        assert!(err.contains("needs community labels"), "{err}");
    }

    #[test]
    fn duplicate_keys_are_rejected() {
        let bad = SAMPLE.replace("master_seed = 11", "master_seed = 11\nmaster_seed = 12");
        let err = ScenarioConfig::parse(&bad, "x").unwrap_err().to_string();
        assert!(err.contains("already set on line 4"), "{err}");
    }

    #[test]
    fn default_grid_has_twenty_points() {
        let g = default_p_grid();
        assert_eq!(g.len(), 20);
        assert_eq!(g[0], 0.05);
        assert_eq!(g[19], 1.0);
    }
}
