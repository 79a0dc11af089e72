//! Synthetic network generators.
//!
//! Three structural regimes are provided: a configuration model (random
//! wiring of a fixed degree sequence), a triangle-rich variant that first
//! closes triangles according to a per-degree-class clustering target, and
//! an overlapping-community benchmark in which a set of bridge nodes belong
//! to several communities at once.

use std::collections::HashSet;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::{index, IndexedRandom, SliceRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{CommunityId, CommunityPartition, Network, NodeId};

/// `P(k) ∝ k^-exponent · exp(-cutoff_rate · k)` on `[k_min, k_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistributionSpec {
    pub exponent: f64,
    pub cutoff_rate: f64,
    pub k_min: usize,
    /// Defaults to `n - 1` when absent.
    pub k_max: Option<usize>,
}

impl Default for DegreeDistributionSpec {
    fn default() -> Self {
        Self {
            exponent: 2.5,
            cutoff_rate: 0.0001,
            k_min: 3,
            k_max: None,
        }
    }
}

impl DegreeDistributionSpec {
    /// Normalized probabilities for `k_min..=k_max`, with `k_max` resolved
    /// against the network size.
    pub fn pmf(&self, n: usize) -> Result<(usize, Vec<f64>)> {
        let k_max = self.k_max.unwrap_or(n.saturating_sub(1));
        if self.k_min < 1 {
            return Err(Error::Unnormalizable("k_min must be at least 1".into()));
        }
        if self.k_min > k_max {
            return Err(Error::Unnormalizable(format!(
                "k_min {} exceeds k_max {k_max}",
                self.k_min
            )));
        }
        if !(self.exponent > 1.0) || !(self.cutoff_rate >= 0.0) {
            return Err(Error::Unnormalizable(format!(
                "exponent {} / cutoff {} out of range",
                self.exponent, self.cutoff_rate
            )));
        }
        let weights: Vec<f64> = (self.k_min..=k_max)
            .map(|k| (k as f64).powf(-self.exponent) * (-self.cutoff_rate * k as f64).exp())
            .collect();
        let total: f64 = weights.iter().sum();
        if !(total.is_finite() && total > 0.0) {
            return Err(Error::Unnormalizable(format!("weight sum {total}")));
        }
        Ok((self.k_min, weights.into_iter().map(|w| w / total).collect()))
    }
}

/// Triangle-closing parameters. Degree class `k` targets mean local
/// clustering `min(1, c0 · k^-alpha)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteredSpec {
    pub c0: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl ClusteredSpec {
    pub fn many_triangles() -> Self {
        Self {
            c0: 0.5,
            alpha: 0.3,
            beta: 1.0,
        }
    }

    pub fn few_triangles() -> Self {
        Self {
            c0: 0.5,
            alpha: 1.0,
            beta: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.c0) {
            return Err(Error::invalid("c0", format!("{} not in [0, 1]", self.c0)));
        }
        if !(self.alpha >= 0.0) {
            return Err(Error::invalid(
                "alpha",
                format!("{} is negative", self.alpha),
            ));
        }
        if self.beta != 1.0 {
            return Err(Error::Unsupported(format!(
                "beta = {} (only beta = 1.0, uniform triple selection, is implemented)",
                self.beta
            )));
        }
        Ok(())
    }

    /// Triangles a node of degree `k` should close.
    pub fn triangle_quota(&self, k: usize) -> usize {
        if k < 2 {
            return 0;
        }
        let target = (self.c0 * (k as f64).powf(-self.alpha)).min(1.0);
        (target * (k * (k - 1)) as f64 / 2.0).round() as usize
    }
}

/// Community benchmark parameters. Community sizes follow
/// `P(s) ∝ s^size_exponent` on `[size_min, size_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommunitySpec {
    pub size_exponent: f64,
    pub size_min: usize,
    pub size_max: usize,
    pub mu: f64,
    pub n_overlap: usize,
    pub memberships_per_overlap: usize,
}

impl CommunitySpec {
    fn with(mu: f64, n_overlap: usize) -> Self {
        Self {
            size_exponent: -1.0,
            size_min: 10,
            size_max: 1000,
            mu,
            n_overlap,
            memberships_per_overlap: 5,
        }
    }

    /// `mu = 0`, 100 bridges.
    pub fn strong() -> Self {
        Self::with(0.0, 100)
    }

    /// `mu = 0`, 1000 bridges.
    pub fn strong_moderate() -> Self {
        Self::with(0.0, 1000)
    }

    /// `mu = 0.3`, 100 bridges.
    pub fn moderate_weak() -> Self {
        Self::with(0.3, 100)
    }

    /// `mu = 0.3`, 1000 bridges.
    pub fn weak() -> Self {
        Self::with(0.3, 1000)
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.size_min < 1 || self.size_min > self.size_max {
            return Err(Error::invalid(
                "size_min",
                format!(
                    "need 1 <= size_min ({}) <= size_max ({})",
                    self.size_min, self.size_max
                ),
            ));
        }
        if !(0.0..=1.0).contains(&self.mu) {
            return Err(Error::invalid("mu", format!("{} not in [0, 1]", self.mu)));
        }
        if self.n_overlap > n {
            return Err(Error::invalid(
                "n_overlap",
                format!("{} exceeds node count {n}", self.n_overlap),
            ));
        }
        if self.n_overlap > 0 && self.memberships_per_overlap < 2 {
            return Err(Error::invalid(
                "memberships_per_overlap",
                "bridges need at least 2",
            ));
        }
        Ok(())
    }

    fn size_weights(&self) -> Vec<f64> {
        (self.size_min..=self.size_max)
            .map(|s| (s as f64).powf(self.size_exponent))
            .collect()
    }
}

/// Draws `n` degrees from `spec`. An odd total is repaired by adding one to
/// a uniformly chosen node.
pub fn sample_degree_sequence<R: Rng + ?Sized>(
    n: usize,
    spec: &DegreeDistributionSpec,
    rng: &mut R,
) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::invalid("n", "need at least two nodes"));
    }
    let (k_min, pmf) = spec.pmf(n)?;
    let dist = WeightedIndex::new(&pmf).map_err(|e| Error::Unnormalizable(e.to_string()))?;
    let mut degrees: Vec<usize> = (0..n).map(|_| k_min + dist.sample(rng)).collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        let v = rng.random_range(0..n);
        degrees[v] += 1;
    }
    Ok(degrees)
}

/// Generated network plus the number of stubs that could not be wired
/// without creating a self-loop or a repeated edge.
#[derive(Debug, Clone)]
pub struct Wired {
    pub network: Network,
    pub dropped_stubs: usize,
}

/// Simple-graph edge set supporting uniform edge sampling and removal.
struct EdgeSet {
    edges: Vec<(NodeId, NodeId)>,
    present: HashSet<(NodeId, NodeId)>,
}

fn key(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    (u.min(v), u.max(v))
}

impl EdgeSet {
    fn new() -> Self {
        Self {
            edges: Vec::new(),
            present: HashSet::new(),
        }
    }

    fn contains(&self, u: NodeId, v: NodeId) -> bool {
        self.present.contains(&key(u, v))
    }

    /// Adds `u–v` if it is neither a self-loop nor already present.
    fn insert(&mut self, u: NodeId, v: NodeId) -> bool {
        if u == v || !self.present.insert(key(u, v)) {
            return false;
        }
        self.edges.push(key(u, v));
        true
    }

    fn remove_at(&mut self, i: usize) -> (NodeId, NodeId) {
        let e = self.edges.swap_remove(i);
        self.present.remove(&e);
        e
    }

    fn remove(&mut self, u: NodeId, v: NodeId) -> bool {
        let k = key(u, v);
        if !self.present.contains(&k) {
            return false;
        }
        let i = self
            .edges
            .iter()
            .position(|&e| e == k)
            .expect("edge list and set agree");
        self.remove_at(i);
        true
    }
}

/// Pairs stubs uniformly at random, rejecting self-loops and repeated
/// edges. Rejected stubs are reshuffled until no progress is made; what is
/// left is then placed by degree-preserving edge switches. Only edges added
/// by this call are switched, so wiring one community never touches
/// another. Returns the number of stubs that remain unwired.
fn wire_stubs<R: Rng + ?Sized>(
    mut pending: Vec<NodeId>,
    edges: &mut EdgeSet,
    rng: &mut R,
) -> usize {
    const MAX_STALLS: usize = 10;
    // `remove_at` swaps in the last edge, so edges[start..] stays local.
    let start = edges.edges.len();
    let mut stalls = 0;
    while pending.len() >= 2 && stalls < MAX_STALLS {
        pending.shuffle(rng);
        let before = pending.len();
        let mut rejected = Vec::new();
        for pair in pending.chunks(2) {
            match *pair {
                [u, v] if edges.insert(u, v) => {}
                _ => rejected.extend_from_slice(pair),
            }
        }
        stalls = if rejected.len() == before {
            stalls + 1
        } else {
            0
        };
        pending = rejected;
    }

    // Edge switch: drop a random edge a–b and add u–a, v–b. Degrees of a and
    // b are unchanged while u and v each gain one edge.
    let mut budget = 1000 + 50 * pending.len();
    while pending.len() >= 2 && budget > 0 {
        budget -= 1;
        let (u, v) = (pending[pending.len() - 1], pending[pending.len() - 2]);
        if edges.insert(u, v) {
            pending.truncate(pending.len() - 2);
            continue;
        }
        if edges.edges.len() == start {
            break;
        }
        let i = rng.random_range(start..edges.edges.len());
        let (mut a, mut b) = edges.edges[i];
        if rng.random_bool(0.5) {
            std::mem::swap(&mut a, &mut b);
        }
        let ok = u != a
            && v != b
            && key(u, a) != key(v, b)
            && !edges.contains(u, a)
            && !edges.contains(v, b);
        if ok {
            edges.remove_at(i);
            edges.insert(u, a);
            edges.insert(v, b);
            pending.truncate(pending.len() - 2);
        } else if budget.is_multiple_of(64) {
            pending.shuffle(rng);
        }
    }
    pending.len()
}

fn check_degrees(degrees: &[usize]) -> Result<()> {
    let n = degrees.len();
    if let Some((node, &degree)) = degrees.iter().enumerate().find(|(_, &k)| k >= n) {
        return Err(Error::DegreeTooLarge {
            node,
            degree,
            node_count: n,
        });
    }
    let total: usize = degrees.iter().sum();
    if total % 2 == 1 {
        return Err(Error::OddDegreeSum(total));
    }
    Ok(())
}

fn stubs_of(degrees: &[usize]) -> Vec<NodeId> {
    degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &k)| std::iter::repeat_n(v, k))
        .collect()
}

/// Configuration model by stub matching.
pub fn configuration_model<R: Rng + ?Sized>(degrees: &[usize], rng: &mut R) -> Result<Wired> {
    check_degrees(degrees)?;
    let mut edges = EdgeSet::new();
    let dropped_stubs = wire_stubs(stubs_of(degrees), &mut edges, rng);
    Ok(Wired {
        network: Network::from_dense_edges(degrees.len(), edges.edges)?,
        dropped_stubs,
    })
}

#[derive(Debug, Clone)]
pub struct Clustered {
    pub network: Network,
    pub dropped_stubs: usize,
    /// Per-node triangle quota derived from the degree class.
    pub quota: Vec<usize>,
    /// Triangles closed in the first phase.
    pub formed: Vec<[NodeId; 3]>,
}

/// Triangle-rich network on a given degree sequence.
///
/// Phase one repeatedly picks three distinct nodes, each with open triangle
/// quota and at least two free stubs, and closes the triangle when none of
/// its edges exists yet. It stops once fewer than three nodes are eligible
/// or a long run of picks fails. Phase two wires the remaining stubs as in
/// [`configuration_model`].
pub fn clustered_network<R: Rng + ?Sized>(
    degrees: &[usize],
    spec: &ClusteredSpec,
    rng: &mut R,
) -> Result<Clustered> {
    spec.validate()?;
    check_degrees(degrees)?;
    let n = degrees.len();
    let quota: Vec<usize> = degrees.iter().map(|&k| spec.triangle_quota(k)).collect();
    let mut open = quota.clone();
    let mut free = degrees.to_vec();
    let mut eligible: Vec<NodeId> = (0..n).filter(|&v| open[v] > 0 && free[v] >= 2).collect();
    let mut edges = EdgeSet::new();
    let mut formed = Vec::new();

    let mut failures = 0usize;
    while eligible.len() >= 3 && failures < 1000 + 20 * eligible.len() {
        let picks = index::sample(rng, eligible.len(), 3).into_vec();
        let t = [eligible[picks[0]], eligible[picks[1]], eligible[picks[2]]];
        if edges.contains(t[0], t[1]) || edges.contains(t[1], t[2]) || edges.contains(t[0], t[2]) {
            failures += 1;
            continue;
        }
        failures = 0;
        edges.insert(t[0], t[1]);
        edges.insert(t[1], t[2]);
        edges.insert(t[0], t[2]);
        for &v in &t {
            free[v] -= 2;
            open[v] -= 1;
        }
        formed.push(t);
        // Drop exhausted nodes, highest position first so indices stay valid.
        let mut positions = picks;
        positions.sort_unstable_by(|a, b| b.cmp(a));
        for p in positions {
            let v = eligible[p];
            if open[v] == 0 || free[v] < 2 {
                eligible.swap_remove(p);
            }
        }
    }

    let dropped_stubs = wire_stubs(stubs_of(&free), &mut edges, rng);
    Ok(Clustered {
        network: Network::from_dense_edges(n, edges.edges)?,
        dropped_stubs,
        quota,
        formed,
    })
}

/// Upper bound on generation attempts for [`community_network`].
pub const MAX_COMMUNITY_ATTEMPTS: usize = 100;

#[derive(Debug, Clone)]
pub struct CommunityNetwork {
    pub network: Network,
    pub partition: CommunityPartition,
    pub bridges: Vec<NodeId>,
    /// Degree sequence drawn for the successful attempt.
    pub requested_degrees: Vec<usize>,
    pub attempts: usize,
    pub dropped_stubs: usize,
}

/// Draws community sizes until they cover `total` memberships exactly. The
/// last draw is truncated to the remainder, so every other size keeps the
/// power-law distribution untouched.
pub fn sample_community_sizes<R: Rng + ?Sized>(
    total: usize,
    spec: &CommunitySpec,
    rng: &mut R,
) -> Result<Vec<usize>> {
    let dist = WeightedIndex::new(spec.size_weights())
        .map_err(|e| Error::invalid("size_exponent", e.to_string()))?;
    let mut sizes = Vec::new();
    let mut sum = 0;
    loop {
        let s = spec.size_min + dist.sample(rng);
        if sum + s < total {
            sizes.push(s);
            sum += s;
            continue;
        }
        // The draw that would overshoot is replaced by the exact remainder.
        let rest = total - sum;
        if rest >= spec.size_min {
            sizes.push(rest);
        } else {
            // Too small for a community of its own: hand it out one node at
            // a time to communities that still have room.
            for _ in 0..rest {
                let growable: Vec<usize> = (0..sizes.len())
                    .filter(|&c| sizes[c] < spec.size_max)
                    .collect();
                match growable.choose(rng) {
                    Some(&c) => sizes[c] += 1,
                    None => return Err(Error::invalid("size_max", "community capacity too small")),
                }
            }
        }
        break;
    }
    Ok(sizes)
}

/// Splits `degree` equally across `parts`, remainder to the first part.
pub fn split_degree(degree: usize, parts: usize) -> Vec<usize> {
    let mut split = vec![degree / parts; parts];
    split[0] += degree % parts;
    split
}

/// Overlapping-community network on `n` nodes.
///
/// Each attempt draws community sizes, picks `n_overlap` bridge nodes with
/// `memberships_per_overlap` memberships each, draws degrees and splits each
/// node's degree across its memberships, places memberships into
/// communities (bridges first, then the rest by decreasing degree), wires
/// every community by stub matching, and finally rewires each bridge link
/// with probability `mu` to a random node of another community, keeping
/// degrees. Attempts are repeated until the network is connected.
pub fn community_network<R: Rng + ?Sized>(
    n: usize,
    dspec: &DegreeDistributionSpec,
    cspec: &CommunitySpec,
    rng: &mut R,
) -> Result<CommunityNetwork> {
    retry_community(n, DegreeSource::Draw(dspec), cspec, rng)
}

/// Same as [`community_network`] with a fixed degree sequence instead of a
/// fresh draw per attempt. Bridges still get at least one link per
/// membership.
pub fn community_network_from_degrees<R: Rng + ?Sized>(
    degrees: &[usize],
    cspec: &CommunitySpec,
    rng: &mut R,
) -> Result<CommunityNetwork> {
    retry_community(degrees.len(), DegreeSource::Fixed(degrees), cspec, rng)
}

#[derive(Clone, Copy)]
enum DegreeSource<'a> {
    Draw(&'a DegreeDistributionSpec),
    Fixed(&'a [usize]),
}

fn retry_community<R: Rng + ?Sized>(
    n: usize,
    degrees: DegreeSource<'_>,
    cspec: &CommunitySpec,
    rng: &mut R,
) -> Result<CommunityNetwork> {
    cspec.validate(n)?;
    let mut last_reason = String::new();
    for attempt in 1..=MAX_COMMUNITY_ATTEMPTS {
        match community_attempt(n, degrees, cspec, rng)? {
            Ok(mut generated) => {
                generated.attempts = attempt;
                return Ok(generated);
            }
            Err(reason) => last_reason = reason,
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_COMMUNITY_ATTEMPTS,
        reason: last_reason,
    })
}

/// One generation attempt. The outer `Result` carries hard errors, the
/// inner one a retryable failure.
fn community_attempt<R: Rng + ?Sized>(
    n: usize,
    degree_source: DegreeSource<'_>,
    cspec: &CommunitySpec,
    rng: &mut R,
) -> Result<std::result::Result<CommunityNetwork, String>> {
    let om = cspec.memberships_per_overlap.max(1);
    let total = n + cspec.n_overlap * (om - 1);
    let sizes = sample_community_sizes(total, cspec, rng)?;
    if cspec.n_overlap > 0 && sizes.len() < om {
        return Ok(Err(format!(
            "{} communities cannot host {om} memberships per bridge",
            sizes.len()
        )));
    }

    let mut bridges = index::sample(rng, n, cspec.n_overlap).into_vec();
    bridges.sort_unstable();
    let mut is_bridge = vec![false; n];
    for &b in &bridges {
        is_bridge[b] = true;
    }

    let mut degrees = match degree_source {
        DegreeSource::Draw(dspec) => sample_degree_sequence(n, dspec, rng)?,
        DegreeSource::Fixed(d) => d.to_vec(),
    };
    for &b in &bridges {
        degrees[b] = degrees[b].max(om);
    }

    // (node, internal degree) per membership, in placement order.
    let mut slots: Vec<(NodeId, usize)> = Vec::with_capacity(total);
    for &b in &bridges {
        slots.extend(split_degree(degrees[b], om).into_iter().map(|d| (b, d)));
    }
    let mut others: Vec<NodeId> = (0..n).filter(|&v| !is_bridge[v]).collect();
    others.shuffle(rng);
    others.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));
    slots.extend(others.iter().map(|&v| (v, degrees[v])));

    let mut room = sizes.clone();
    let mut has_bridge = vec![false; sizes.len()];
    let mut memberships: Vec<Vec<CommunityId>> = vec![Vec::new(); n];
    let mut members: Vec<Vec<(NodeId, usize)>> = vec![Vec::new(); sizes.len()];
    for &(v, d) in &slots {
        let open = |c: &usize| room[*c] > 0 && !memberships[v].contains(c);
        let fits: Vec<CommunityId> = (0..sizes.len())
            .filter(open)
            .filter(|&c| sizes[c] > d)
            .collect();
        let pool: Vec<CommunityId> = if is_bridge[v] {
            let uncovered: Vec<CommunityId> =
                fits.iter().copied().filter(|&c| !has_bridge[c]).collect();
            if uncovered.is_empty() {
                fits
            } else {
                uncovered
            }
        } else {
            fits
        };
        // Drawing in proportion to free room deals memberships into
        // community slots at random, so community size and degree are
        // only linked through the `size > degree` requirement.
        let chosen = match pool.choose_weighted(rng, |&c| room[c]) {
            Ok(&c) => c,
            // Nothing large enough: take the largest open community and cap
            // the internal degree at its size.
            Err(_) => match (0..sizes.len()).filter(open).max_by_key(|&c| (sizes[c], c)) {
                Some(c) => c,
                None => {
                    return Ok(Err(format!(
                        "node {v} cannot be placed in a distinct community"
                    )))
                }
            },
        };
        room[chosen] -= 1;
        memberships[v].push(chosen);
        if is_bridge[v] {
            has_bridge[chosen] = true;
        }
        members[chosen].push((v, d.min(sizes[chosen] - 1)));
    }

    let mut edges = EdgeSet::new();
    let mut dropped_stubs = 0;
    for group in &members {
        let stubs: Vec<NodeId> = group
            .iter()
            .flat_map(|&(v, d)| std::iter::repeat_n(v, d))
            .collect();
        dropped_stubs += wire_stubs(stubs, &mut edges, rng);
    }

    if cspec.mu > 0.0 && !bridges.is_empty() {
        rewire_bridges(
            n,
            &bridges,
            &memberships,
            &members,
            cspec.mu,
            &mut edges,
            rng,
        );
    }

    let network = Network::from_dense_edges(n, edges.edges.iter().copied())?;
    let components = network.connected_components();
    if components.len() != 1 {
        return Ok(Err(format!("{} connected components", components.len())));
    }
    let partition = CommunityPartition::new(memberships)?;
    Ok(Ok(CommunityNetwork {
        network,
        partition,
        bridges,
        requested_degrees: degrees,
        attempts: 0,
        dropped_stubs,
    }))
}

/// With probability `mu` per bridge link `(b, x)`, moves the far end to a
/// uniform node `y` of a uniformly chosen community the bridge does not
/// belong to. The move is a double edge swap with a random link `(y, z)`:
/// `(b, x), (y, z)` become `(b, y), (x, z)`, so every degree is kept.
fn rewire_bridges<R: Rng + ?Sized>(
    n: usize,
    bridges: &[NodeId],
    memberships: &[Vec<CommunityId>],
    members: &[Vec<(NodeId, usize)>],
    mu: f64,
    edges: &mut EdgeSet,
    rng: &mut R,
) {
    let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for &(u, v) in &edges.edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let unlink = |adjacency: &mut Vec<Vec<NodeId>>, u: NodeId, v: NodeId| {
        for (a, b) in [(u, v), (v, u)] {
            let i = adjacency[a]
                .iter()
                .position(|&w| w == b)
                .expect("edge present");
            adjacency[a].swap_remove(i);
        }
    };
    for &b in bridges {
        let foreign: Vec<CommunityId> = (0..members.len())
            .filter(|c| !memberships[b].contains(c))
            .collect();
        if foreign.is_empty() {
            continue;
        }
        let mut links = adjacency[b].clone();
        links.sort_unstable();
        for x in links {
            if !rng.random_bool(mu) || !edges.contains(b, x) {
                continue;
            }
            for _ in 0..8 {
                let c = *foreign.choose(rng).expect("non-empty");
                let (y, _) = *members[c].choose(rng).expect("communities are non-empty");
                let Some(&z) = adjacency[y].choose(rng) else {
                    continue;
                };
                let distinct = y != b && y != x && z != b && z != x;
                if distinct && !edges.contains(b, y) && !edges.contains(x, z) {
                    edges.remove(b, x);
                    edges.remove(y, z);
                    edges.insert(b, y);
                    edges.insert(x, z);
                    unlink(&mut adjacency, b, x);
                    unlink(&mut adjacency, y, z);
                    adjacency[b].push(y);
                    adjacency[y].push(b);
                    adjacency[x].push(z);
                    adjacency[z].push(x);
                    break;
                }
            }
        }
    }
}
