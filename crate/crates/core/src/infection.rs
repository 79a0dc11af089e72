//! Placement of the study trait on network nodes.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, IndexedRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{CommunityPartition, Network, NodeId};

/// Which nodes carry the trait.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfectionAssignment {
    infected: Vec<bool>,
}

impl InfectionAssignment {
    pub fn from_flags(infected: Vec<bool>) -> Self {
        Self { infected }
    }

    pub fn is_infected(&self, v: NodeId) -> bool {
        self.infected[v]
    }

    pub fn flags(&self) -> &[bool] {
        &self.infected
    }

    pub fn infected_count(&self) -> usize {
        self.infected.iter().filter(|&&x| x).count()
    }

    pub fn infected_nodes(&self) -> Vec<NodeId> {
        (0..self.infected.len())
            .filter(|&v| self.infected[v])
            .collect()
    }

    /// Fraction of infected nodes, `P_A`.
    pub fn true_prevalence(&self) -> f64 {
        if self.infected.is_empty() {
            0.0
        } else {
            self.infected_count() as f64 / self.infected.len() as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Protocol {
    /// Uniform over all nodes.
    Ri,
    /// Highest degree first.
    Pi,
    /// `Pi` with 20% redistributed.
    Pri,
    /// Smallest communities first.
    Si,
    /// Largest communities first.
    Bi,
    /// `Si` with 40% redistributed.
    Sri,
    /// `Bi` with 40% redistributed.
    Bri,
}

impl Protocol {
    pub const ALL: [Protocol; 7] = [
        Protocol::Ri,
        Protocol::Pi,
        Protocol::Pri,
        Protocol::Si,
        Protocol::Bi,
        Protocol::Sri,
        Protocol::Bri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Protocol::Ri => "RI",
            Protocol::Pi => "PI",
            Protocol::Pri => "PRI",
            Protocol::Si => "SI",
            Protocol::Bi => "BI",
            Protocol::Sri => "SRI",
            Protocol::Bri => "BRI",
        }
    }

    pub fn default_noise(self) -> f64 {
        match self {
            Protocol::Pri => 0.20,
            Protocol::Sri | Protocol::Bri => 0.40,
            _ => 0.0,
        }
    }

    pub fn needs_partition(self) -> bool {
        matches!(
            self,
            Protocol::Si | Protocol::Bi | Protocol::Sri | Protocol::Bri
        )
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Protocol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Protocol::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid("protocol", format!("unknown protocol {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolSpec {
    pub kind: Protocol,
    pub prevalence: f64,
    /// Fraction of the infected set that is cured and re-placed uniformly.
    pub noise: f64,
}

impl ProtocolSpec {
    /// 25% prevalence and the protocol's default noise.
    pub fn new(kind: Protocol) -> Self {
        Self {
            kind,
            prevalence: 0.25,
            noise: kind.default_noise(),
        }
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.prevalence) {
            return Err(Error::invalid(
                "prevalence",
                format!("{} not in [0, 1]", self.prevalence),
            ));
        }
        if !(0.0..=1.0).contains(&self.noise) {
            return Err(Error::invalid(
                "noise",
                format!("{} not in [0, 1]", self.noise),
            ));
        }
        Ok(())
    }
}

/// Number of nodes to infect, rounding half up.
pub fn quota(prevalence: f64, node_count: usize) -> usize {
    (prevalence * node_count as f64 + 0.5).floor() as usize
}

pub fn place_infection<R: Rng + ?Sized>(
    net: &Network,
    part: Option<&CommunityPartition>,
    spec: &ProtocolSpec,
    rng: &mut R,
) -> Result<InfectionAssignment> {
    spec.validate()?;
    let n = net.node_count();
    let q = quota(spec.prevalence, n);
    if q > n {
        return Err(Error::QuotaExceedsNodes {
            quota: q,
            node_count: n,
        });
    }
    let mut infected = vec![false; n];
    match spec.kind {
        Protocol::Ri => {
            for v in index::sample(rng, n, q) {
                infected[v] = true;
            }
        }
        Protocol::Pi | Protocol::Pri => {
            for v in by_degree_descending(net).into_iter().take(q) {
                infected[v] = true;
            }
        }
        kind => {
            let part = part.ok_or(Error::MissingPartition(kind.name()))?;
            if part.node_count() != n {
                return Err(Error::invalid(
                    "partition",
                    format!("covers {} nodes, network has {n}", part.node_count()),
                ));
            }
            let smallest_first = matches!(kind, Protocol::Si | Protocol::Sri);
            infect_by_community(part, smallest_first, q, &mut infected, rng);
        }
    }
    redistribute(&mut infected, spec.noise, rng);
    Ok(InfectionAssignment { infected })
}

/// Nodes by decreasing degree, ties by ascending id.
fn by_degree_descending(net: &Network) -> Vec<NodeId> {
    let degrees = net.degrees();
    let mut order: Vec<NodeId> = (0..net.node_count()).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
    order
}

/// Each node is attributed to its smallest (resp. largest) community;
/// communities are infected whole in size order and the one that crosses
/// the quota is sampled uniformly.
fn infect_by_community<R: Rng + ?Sized>(
    part: &CommunityPartition,
    smallest_first: bool,
    quota: usize,
    infected: &mut [bool],
    rng: &mut R,
) {
    let mut groups: Vec<Vec<NodeId>> = vec![Vec::new(); part.community_count()];
    for v in 0..part.node_count() {
        let c = if smallest_first {
            part.smallest_community(v)
        } else {
            part.largest_community(v)
        };
        groups[c].push(v);
    }
    let mut order: Vec<usize> = (0..groups.len()).collect();
    if smallest_first {
        order.sort_by_key(|&c| (part.size(c), c));
    } else {
        order.sort_by_key(|&c| (std::cmp::Reverse(part.size(c)), c));
    }
    let mut remaining = quota;
    for c in order {
        if remaining == 0 {
            break;
        }
        let group = &groups[c];
        if group.len() <= remaining {
            for &v in group {
                infected[v] = true;
            }
            remaining -= group.len();
        } else {
            for i in index::sample(rng, group.len(), remaining) {
                infected[group[i]] = true;
            }
            remaining = 0;
        }
    }
}

/// Cures `round(noise · infected)` uniformly chosen infected nodes, then
/// infects as many nodes chosen uniformly among all non-infected ones.
fn redistribute<R: Rng + ?Sized>(infected: &mut [bool], noise: f64, rng: &mut R) {
    if noise == 0.0 {
        return;
    }
    let current: Vec<NodeId> = (0..infected.len()).filter(|&v| infected[v]).collect();
    let moved = quota(noise, current.len());
    for &v in current.choose_multiple(rng, moved) {
        infected[v] = false;
    }
    let healthy: Vec<NodeId> = (0..infected.len()).filter(|&v| !infected[v]).collect();
    for &v in healthy.choose_multiple(rng, moved) {
        infected[v] = true;
    }
}
