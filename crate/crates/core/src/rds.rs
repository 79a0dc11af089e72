//! Continuous-time respondent-driven sampling.
//!
//! Every participant owns one exponential clock. When it fires, the
//! participant hands coupons to up to `coupons` uniformly chosen neighbours
//! that have not participated yet; each invitee accepts with probability
//! `response_rate` and, on acceptance, joins the sample at that instant and
//! starts its own clock. An invitee who refuses stays available to later
//! invitations. Nobody participates twice.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_distr::{Distribution, Exp};

use crate::error::{Error, Result};
use crate::graph::{CommunityPartition, Network, NodeId};
use crate::io::{fmt_num, parse_num};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeedStrategy {
    /// Distinct nodes chosen uniformly.
    Uniform,
    /// Uniform among nodes whose smallest community is below `small_threshold`.
    SmallCommunity,
    /// Uniform among nodes in any community above `large_threshold`.
    LargeCommunity,
    /// One active tree at a time; a fresh uniform seed starts whenever the
    /// current tree stops.
    SequentialRestart,
}

impl SeedStrategy {
    pub fn name(self) -> &'static str {
        match self {
            SeedStrategy::Uniform => "uniform",
            SeedStrategy::SmallCommunity => "small-community",
            SeedStrategy::LargeCommunity => "large-community",
            SeedStrategy::SequentialRestart => "sequential-restart",
        }
    }
}

impl fmt::Display for SeedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeedStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            SeedStrategy::Uniform,
            SeedStrategy::SmallCommunity,
            SeedStrategy::LargeCommunity,
            SeedStrategy::SequentialRestart,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::invalid("seed_strategy", format!("unknown strategy {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RdsConfig {
    pub n_seeds: usize,
    pub coupons: usize,
    pub mean_wait: f64,
    pub response_rate: f64,
    /// `None` means unlimited.
    pub sample_cap: Option<usize>,
    pub seed_strategy: SeedStrategy,
    /// Successful recruits allowed per tree in sequential-restart mode.
    pub per_seed_cap: usize,
    pub small_threshold: usize,
    pub large_threshold: usize,
}

impl Default for RdsConfig {
    fn default() -> Self {
        Self {
            n_seeds: 10,
            coupons: 3,
            mean_wait: 5.0,
            response_rate: 1.0,
            sample_cap: None,
            seed_strategy: SeedStrategy::Uniform,
            per_seed_cap: 50,
            small_threshold: 200,
            large_threshold: 500,
        }
    }
}

impl RdsConfig {
    pub fn with_response_rate(mut self, p: f64) -> Self {
        self.response_rate = p;
        self
    }

    pub fn with_cap(mut self, cap: Option<usize>) -> Self {
        self.sample_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.response_rate) {
            return Err(Error::invalid(
                "response_rate",
                format!("{} not in [0, 1]", self.response_rate),
            ));
        }
        if self.n_seeds == 0 {
            return Err(Error::invalid("n_seeds", "need at least one seed"));
        }
        if self.coupons == 0 {
            return Err(Error::invalid("coupons", "need at least one coupon"));
        }
        if !(self.mean_wait > 0.0 && self.mean_wait.is_finite()) {
            return Err(Error::invalid(
                "mean_wait",
                format!("{} is not positive", self.mean_wait),
            ));
        }
        if self.seed_strategy == SeedStrategy::SequentialRestart && self.per_seed_cap == 0 {
            return Err(Error::invalid("per_seed_cap", "must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Participant {
    pub node: NodeId,
    pub recruiter: Option<NodeId>,
    pub tree: usize,
    pub wave: usize,
    pub time: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Exhausted,
    CapReached,
}

impl Termination {
    pub fn name(self) -> &'static str {
        match self {
            Termination::Exhausted => "exhausted",
            Termination::CapReached => "cap_reached",
        }
    }
}

/// Recruitment record of one simulation, in recruitment order.
#[derive(Debug, Clone, PartialEq)]
pub struct RdsOutcome {
    pub participants: Vec<Participant>,
    pub refusal_count: usize,
    pub termination: Termination,
}

impl RdsOutcome {
    /// Ω, the number of participants (seeds included).
    pub fn omega(&self) -> usize {
        self.participants.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.participants.iter().map(|p| p.node)
    }

    pub fn tree_count(&self) -> usize {
        self.participants
            .iter()
            .map(|p| p.tree + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Picks the initial seeds. Sequential restart returns a single seed; the
/// engine draws the rest on demand.
pub fn select_seeds<R: Rng + ?Sized>(
    net: &Network,
    part: Option<&CommunityPartition>,
    cfg: &RdsConfig,
    rng: &mut R,
) -> Result<Vec<NodeId>> {
    cfg.validate()?;
    let n = net.node_count();
    let (pool, wanted): (Vec<NodeId>, usize) = match cfg.seed_strategy {
        SeedStrategy::Uniform => ((0..n).collect(), cfg.n_seeds),
        SeedStrategy::SequentialRestart => ((0..n).collect(), 1),
        SeedStrategy::SmallCommunity => {
            let part = part.ok_or(Error::MissingPartition("small-community seeding"))?;
            let pool = (0..n)
                .filter(|&v| part.size(part.smallest_community(v)) < cfg.small_threshold)
                .collect();
            (pool, cfg.n_seeds)
        }
        SeedStrategy::LargeCommunity => {
            let part = part.ok_or(Error::MissingPartition("large-community seeding"))?;
            let pool = (0..n)
                .filter(|&v| {
                    part.memberships(v)
                        .iter()
                        .any(|&c| part.size(c) > cfg.large_threshold)
                })
                .collect();
            (pool, cfg.n_seeds)
        }
    };
    if pool.is_empty() {
        return Err(Error::EmptySeedPool(cfg.seed_strategy.name()));
    }
    if wanted > pool.len() {
        return Err(Error::invalid(
            "n_seeds",
            format!(
                "{wanted} seeds requested but only {} nodes are eligible",
                pool.len()
            ),
        ));
    }
    Ok(pool.choose_multiple(rng, wanted).copied().collect())
}

#[derive(Debug, Clone, Copy)]
struct Event {
    time: f64,
    seq: u64,
    node: NodeId,
}

impl PartialEq for Event {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Event {}

impl PartialOrd for Event {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Event {
    // Reversed so the max-heap pops the earliest event, then the earliest
    // insertion among equal times.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .time
            .total_cmp(&self.time)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

struct Engine<'a, R: Rng + ?Sized> {
    net: &'a Network,
    cfg: &'a RdsConfig,
    rng: &'a mut R,
    wait: Exp<f64>,
    queue: BinaryHeap<Event>,
    next_seq: u64,
    joined: Vec<Option<usize>>,
    participants: Vec<Participant>,
    refusals: usize,
    cap: usize,
}

impl<R: Rng + ?Sized> Engine<'_, R> {
    fn admit(
        &mut self,
        node: NodeId,
        recruiter: Option<NodeId>,
        tree: usize,
        wave: usize,
        time: f64,
    ) {
        self.joined[node] = Some(self.participants.len());
        self.participants.push(Participant {
            node,
            recruiter,
            tree,
            wave,
            time,
        });
        let delay = self.wait.sample(self.rng);
        self.queue.push(Event {
            time: time + delay,
            seq: self.next_seq,
            node,
        });
        self.next_seq += 1;
    }

    fn full(&self) -> bool {
        self.participants.len() >= self.cap
    }

    /// Processes one distribution event. `tree_room` limits how many more
    /// recruits the event's tree may take. Returns the number admitted.
    fn distribute(&mut self, event: Event, tree_room: usize) -> usize {
        let u = event.node;
        let me = self.participants[self.joined[u].expect("event owner participates")];
        let mut eligible: Vec<NodeId> = self
            .net
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| self.joined[v].is_none())
            .collect();
        let handed = self.cfg.coupons.min(eligible.len());
        // Partial Fisher-Yates: a uniform ordered selection of `handed`.
        for i in 0..handed {
            let j = self.rng.random_range(i..eligible.len());
            eligible.swap(i, j);
        }
        let mut admitted = 0;
        for &v in &eligible[..handed] {
            if self.full() || admitted >= tree_room {
                break;
            }
            if self.rng.random_bool(self.cfg.response_rate) {
                self.admit(v, Some(u), me.tree, me.wave + 1, event.time);
                admitted += 1;
            } else {
                self.refusals += 1;
            }
        }
        admitted
    }
}

/// Runs one simulation from the given seeds. Seeds always participate.
pub fn run_rds<R: Rng + ?Sized>(
    net: &Network,
    cfg: &RdsConfig,
    seeds: &[NodeId],
    rng: &mut R,
) -> Result<RdsOutcome> {
    cfg.validate()?;
    let n = net.node_count();
    let mut seen = vec![false; n];
    for &s in seeds {
        if s >= n {
            return Err(Error::NodeOutOfRange {
                node: s,
                node_count: n,
            });
        }
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::invalid("seeds", format!("seed {s} listed twice")));
        }
    }
    let mut engine = Engine {
        net,
        cfg,
        wait: Exp::new(1.0 / cfg.mean_wait)
            .map_err(|e| Error::invalid("mean_wait", e.to_string()))?,
        rng,
        queue: BinaryHeap::new(),
        next_seq: 0,
        joined: vec![None; n],
        participants: Vec::new(),
        refusals: 0,
        cap: cfg.sample_cap.unwrap_or(usize::MAX),
    };

    let termination = if cfg.seed_strategy == SeedStrategy::SequentialRestart {
        run_sequential(&mut engine, seeds)
    } else {
        run_simultaneous(&mut engine, seeds)
    };
    Ok(RdsOutcome {
        participants: engine.participants,
        refusal_count: engine.refusals,
        termination,
    })
}

fn run_simultaneous<R: Rng + ?Sized>(engine: &mut Engine<'_, R>, seeds: &[NodeId]) -> Termination {
    for (tree, &s) in seeds.iter().enumerate() {
        if engine.full() {
            return Termination::CapReached;
        }
        engine.admit(s, None, tree, 0, 0.0);
    }
    while let Some(event) = engine.queue.pop() {
        if engine.full() {
            return Termination::CapReached;
        }
        engine.distribute(event, usize::MAX);
    }
    if engine.full() {
        Termination::CapReached
    } else {
        Termination::Exhausted
    }
}

fn run_sequential<R: Rng + ?Sized>(engine: &mut Engine<'_, R>, seeds: &[NodeId]) -> Termination {
    let mut listed = seeds.iter().copied();
    let mut now = 0.0;
    let mut tree = 0;
    loop {
        if engine.full() {
            return Termination::CapReached;
        }
        let seed = listed
            .by_ref()
            .find(|&s| engine.joined[s].is_none())
            .or_else(|| uniform_outsider(engine));
        let Some(seed) = seed else {
            return Termination::Exhausted;
        };
        engine.admit(seed, None, tree, 0, now);
        let mut recruits = 0;
        while let Some(event) = engine.queue.pop() {
            now = event.time;
            if engine.full() || recruits >= engine.cfg.per_seed_cap {
                break;
            }
            recruits += engine.distribute(event, engine.cfg.per_seed_cap - recruits);
        }
        // Pending clocks of a stopped tree never fire.
        engine.queue.clear();
        tree += 1;
    }
}

/// Uniform node that has not participated, if any.
fn uniform_outsider<R: Rng + ?Sized>(engine: &mut Engine<'_, R>) -> Option<NodeId> {
    let n = engine.joined.len();
    if engine.participants.len() >= n {
        return None;
    }
    for _ in 0..64 {
        let v = engine.rng.random_range(0..n);
        if engine.joined[v].is_none() {
            return Some(v);
        }
    }
    let outsiders: Vec<NodeId> = (0..n).filter(|&v| engine.joined[v].is_none()).collect();
    outsiders.choose(engine.rng).copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStat {
    /// Participants in the tree, seed included.
    pub size: usize,
    /// Deepest wave reached.
    pub waves: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub trees: Vec<TreeStat>,
    pub omega: usize,
}

pub fn tree_stats(out: &RdsOutcome) -> TreeStats {
    let mut trees = vec![TreeStat { size: 0, waves: 0 }; out.tree_count()];
    for p in &out.participants {
        let t = &mut trees[p.tree];
        t.size += 1;
        t.waves = t.waves.max(p.wave);
    }
    TreeStats {
        omega: trees.iter().map(|t| t.size).sum(),
        trees,
    }
}

pub const OUTCOME_HEADER: &str = "node,recruiter,tree,wave,time";

/// One row per participant; seeds have an empty recruiter field.
pub fn format_outcome_csv(net: &Network, out: &RdsOutcome) -> String {
    let mut s = String::from(OUTCOME_HEADER);
    s.push('\n');
    for p in &out.participants {
        let recruiter = p.recruiter.map(|r| net.label(r)).unwrap_or("");
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            net.label(p.node),
            recruiter,
            p.tree,
            p.wave,
            fmt_num(p.time)
        ));
    }
    s
}

/// Parses an outcome CSV against the network it was simulated on. Refusal
/// counts are not part of the file and read back as zero; the termination
/// is reported as `Exhausted`.
pub fn parse_outcome_csv(net: &Network, text: &str, source: &str) -> Result<RdsOutcome> {
    let lookup = net.node_by_label();
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == OUTCOME_HEADER => {}
        _ => {
            return Err(Error::parse(
                source,
                1,
                format!("expected header `{OUTCOME_HEADER}`"),
            ))
        }
    }
    let node_of = |tok: &str, line: usize| {
        lookup
            .get(tok)
            .copied()
            .ok_or_else(|| Error::parse(source, line, format!("unknown node {tok:?}")))
    };
    let mut seen = vec![false; net.node_count()];
    let mut participants = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 5 {
            return Err(Error::parse(source, line_no, "expected 5 fields"));
        }
        let node = node_of(fields[0], line_no)?;
        if std::mem::replace(&mut seen[node], true) {
            return Err(Error::parse(source, line_no, "node appears twice"));
        }
        let recruiter = match fields[1] {
            "" => None,
            tok => Some(node_of(tok, line_no)?),
        };
        let int = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(source, line_no, format!("bad integer {s:?}")))
        };
        let time = parse_num(fields[4])
            .ok_or_else(|| Error::parse(source, line_no, format!("bad number {:?}", fields[4])))?;
        participants.push(Participant {
            node,
            recruiter,
            tree: int(fields[2])?,
            wave: int(fields[3])?,
            time,
        });
    }
    Ok(RdsOutcome {
        participants,
        refusal_count: 0,
        termination: Termination::Exhausted,
    })
}
