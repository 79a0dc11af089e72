//! Undirected simple graphs, community partitions and structural metrics.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type CommunityId = usize;

/// Immutable undirected simple graph on nodes `0..node_count`.
///
/// Adjacency lists are sorted and symmetric, and contain no self-loops or
/// repeated neighbours. `labels[v]` is the token the node had in its source
/// (an input file or the original integer id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
    labels: Vec<String>,
}

impl Network {
    /// Builds a network from integer node ids. Ids are remapped to `0..N` in
    /// ascending order, so any permutation of the same edge list yields the
    /// same network. Self-loops and repeated pairs are dropped; a node that
    /// only appears in a self-loop is kept as an isolated node.
    pub fn build(edges: &[(u64, u64)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let ids: BTreeSet<u64> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let index: HashMap<u64, NodeId> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let labels = ids.iter().map(|id| id.to_string()).collect();
        let dense = edges.iter().map(|(u, v)| (index[u], index[v]));
        Ok(Self::assemble(index.len(), dense, labels))
    }

    /// Builds a network from string tokens (as read from a file). Tokens are
    /// ordered numerically when every token is an integer and
    /// lexicographically otherwise.
    pub fn build_from_tokens<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut tokens: Vec<&str> = edges
            .iter()
            .flat_map(|(u, v)| [u.as_ref(), v.as_ref()])
            .collect();
        tokens.sort_unstable();
        tokens.dedup();
        sort_tokens(&mut tokens);
        let index: HashMap<&str, NodeId> =
            tokens.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let dense = edges
            .iter()
            .map(|(u, v)| (index[u.as_ref()], index[v.as_ref()]));
        let labels = tokens.iter().map(|t| t.to_string()).collect();
        Ok(Self::assemble(tokens.len(), dense, labels))
    }

    /// Builds a network on exactly `node_count` dense nodes (isolated nodes
    /// allowed). Used by the generators, which already index nodes densely.
    pub fn from_dense_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u.max(v) >= node_count) {
            return Err(Error::NodeOutOfRange {
                node: u.max(v),
                node_count,
            });
        }
        let labels = (0..node_count).map(|v| v.to_string()).collect();
        Ok(Self::assemble(node_count, edges, labels))
    }

    fn assemble(
        node_count: usize,
        edges: impl IntoIterator<Item = (NodeId, NodeId)>,
        labels: Vec<String>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); node_count];
        for (u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        let mut twice_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_edges += list.len();
        }
        Network {
            adjacency,
            edge_count: twice_edges / 2,
            labels,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check(v).map(|_| self.adjacency[v].len())
    }

    /// Sorted neighbour list. Panics on an out-of-range id.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dense id of a source token.
    pub fn node_by_label(&self) -> HashMap<&str, NodeId> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    fn check(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    /// Number of triangles each node belongs to.
    pub fn triangles_per_node(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.node_count()];
        // Each triangle u < v < w is found once, from its lowest node.
        for u in 0..self.node_count() {
            let nu = &self.adjacency[u];
            for &v in nu.iter().filter(|&&v| v > u) {
                let common = sorted_intersection_above(nu, &self.adjacency[v], v);
                for w in common {
                    counts[u] += 1;
                    counts[v] += 1;
                    counts[w] += 1;
                }
            }
        }
        counts
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles_per_node().iter().sum::<usize>() / 3
    }

    /// Transitivity: three times the triangle count over the number of
    /// connected triples. Zero when there is no connected triple.
    pub fn global_clustering(&self) -> f64 {
        let closed: usize = self.triangles_per_node().iter().sum();
        let triples: usize = self
            .adjacency
            .iter()
            .map(|l| l.len() * l.len().saturating_sub(1) / 2)
            .sum();
        if triples == 0 {
            0.0
        } else {
            closed as f64 / triples as f64
        }
    }

    /// Per-node local clustering; nodes of degree below two get zero.
    pub fn local_clustering(&self) -> Vec<f64> {
        self.triangles_per_node()
            .iter()
            .zip(&self.adjacency)
            .map(|(&t, l)| {
                let k = l.len();
                if k < 2 {
                    0.0
                } else {
                    2.0 * t as f64 / (k * (k - 1)) as f64
                }
            })
            .collect()
    }

    pub fn mean_local_clustering(&self) -> f64 {
        let local = self.local_clustering();
        if local.is_empty() {
            return 0.0;
        }
        local.iter().sum::<f64>() / local.len() as f64
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() > 0 && self.connected_components().len() == 1
    }

    /// Raw node/edge counts alongside the counts restricted to the largest
    /// connected component.
    pub fn size_summary(&self) -> SizeSummary {
        let components = self.connected_components();
        let largest = components
            .iter()
            .max_by_key(|c| c.len())
            .cloned()
            .unwrap_or_default();
        let lcc_edges = largest
            .iter()
            .map(|&v| self.adjacency[v].len())
            .sum::<usize>()
            / 2;
        SizeSummary {
            nodes: self.node_count(),
            edges: self.edge_count,
            components: components.len(),
            lcc_nodes: largest.len(),
            lcc_edges,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeSummary {
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
    pub lcc_nodes: usize,
    pub lcc_edges: usize,
}

fn sort_tokens(tokens: &mut [&str]) {
    if tokens.iter().all(|t| t.parse::<u64>().is_ok()) {
        tokens.sort_unstable_by_key(|t| t.parse::<u64>().unwrap());
    }
}

fn sorted_intersection_above<'a>(
    a: &'a [NodeId],
    b: &'a [NodeId],
    floor: NodeId,
) -> impl Iterator<Item = NodeId> + 'a {
    let mut i = a.partition_point(|&x| x <= floor);
    let mut j = b.partition_point(|&x| x <= floor);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let x = a[i];
                    i += 1;
                    j += 1;
                    return Some(x);
                }
            }
        }
        None
    })
}

/// Possibly overlapping assignment of nodes to communities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityPartition {
    memberships: Vec<Vec<CommunityId>>,
    sizes: Vec<usize>,
}

impl CommunityPartition {
    /// `memberships[v]` lists the communities of node `v`. Community ids must
    /// be dense (`0..C`); every node needs at least one membership.
    pub fn new(memberships: Vec<Vec<CommunityId>>) -> Result<Self> {
        let mut memberships = memberships;
        let mut community_count = 0;
        for (v, set) in memberships.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            match set.last() {
                None => {
                    return Err(Error::invalid(
                        "memberships",
                        format!("node {v} has no community"),
                    ))
                }
                Some(&c) => community_count = community_count.max(c + 1),
            }
        }
        let mut sizes = vec![0; community_count];
        for &c in memberships.iter().flatten() {
            sizes[c] += 1;
        }
        if let Some(c) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::invalid(
                "memberships",
                format!("community id {c} is unused"),
            ));
        }
        Ok(Self { memberships, sizes })
    }

    pub fn node_count(&self) -> usize {
        self.memberships.len()
    }

    pub fn community_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn memberships(&self, v: NodeId) -> &[CommunityId] {
        &self.memberships[v]
    }

    pub fn size(&self, c: CommunityId) -> usize {
        self.sizes[c]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// The node's smallest community (ties to the lower id).
    pub fn smallest_community(&self, v: NodeId) -> CommunityId {
        *self.memberships[v]
            .iter()
            .min_by_key(|&&c| (self.sizes[c], c))
            .expect("every node has a membership")
    }

    /// The node's largest community (ties to the lower id).
    pub fn largest_community(&self, v: NodeId) -> CommunityId {
        *self.memberships[v]
            .iter()
            .min_by_key(|&&c| (std::cmp::Reverse(self.sizes[c]), c))
            .expect("every node has a membership")
    }

    pub fn shares_community(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = (&self.memberships[u], &self.memberships[v]);
        a.iter().any(|c| b.binary_search(c).is_ok())
    }

    /// Edges whose endpoints have no community in common.
    pub fn inter_community_edges(&self, net: &Network) -> usize {
        net.edges()
            .filter(|&(u, v)| !self.shares_community(u, v))
            .count()
    }

    /// Builds a partition over `net` from `(node token, community tokens)`
    /// rows. Community tokens are remapped densely in order of first
    /// appearance; nodes without a row are an error.
    pub fn from_labels<S: AsRef<str>>(net: &Network, rows: &[(S, Vec<S>)]) -> Result<Self> {
        let lookup = net.node_by_label();
        let mut community_ids: HashMap<String, CommunityId> = HashMap::new();
        let mut memberships = vec![Vec::new(); net.node_count()];
        for (node, comms) in rows {
            let v = *lookup
                .get(node.as_ref())
                .ok_or_else(|| Error::UnknownNode(node.as_ref().to_string()))?;
            for c in comms {
                let next = community_ids.len();
                let id = *community_ids.entry(c.as_ref().to_string()).or_insert(next);
                memberships[v].push(id);
            }
        }
        if let Some(v) = memberships.iter().position(Vec::is_empty) {
            return Err(Error::invalid(
                "communities",
                format!("node {:?} has no community label", net.label(v)),
            ));
        }
        Self::new(memberships)
    }
}
