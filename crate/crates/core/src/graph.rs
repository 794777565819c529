//! Directed network value type, node classification and reduced networks.
//!
//! A [`DirectedNetwork`] is immutable once built. Operations that change the
//! arc set (node removal, symmetrization, arc edits) return a new value and
//! keep every [`NodeId`] stable: removed nodes stay behind as isolated
//! placeholders, so per-node results computed on `D` and `D - i` can be
//! compared index by index.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense index of a node inside one network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(i)
    }
}

/// Connectivity class of a node; every node gets exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeClass {
    /// In-degree 0, out-degree at least 1.
    Source,
    /// Out-degree 0, in-degree at least 1.
    Sink,
    /// A single reciprocated link to one neighbour.
    Leaf,
    /// At least one predecessor and one successor, and two distinct neighbours.
    Intermediary,
    /// No arcs at all.
    Isolated,
}

impl NodeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeClass::Source => "source",
            NodeClass::Sink => "sink",
            NodeClass::Leaf => "leaf",
            NodeClass::Intermediary => "intermediary",
            NodeClass::Isolated => "isolated",
        }
    }
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Irreflexive directed network with forward and reverse adjacency.
///
/// Both adjacency lists are kept sorted, which makes arc lookup a binary
/// search and lets equality be decided by comparing them directly.
#[derive(Clone, Debug)]
pub struct DirectedNetwork {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    out_adj: Vec<Vec<NodeId>>,
    in_adj: Vec<Vec<NodeId>>,
    arc_count: usize,
}

impl PartialEq for DirectedNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.out_adj == other.out_adj
    }
}

impl Eq for DirectedNetwork {}

impl DirectedNetwork {
    /// Builds a network from node labels and labelled arcs.
    ///
    /// Labels must be unique and non-empty; arcs must join two distinct known
    /// labels and may not repeat. The order in which arcs are given does not
    /// affect the result.
    pub fn build<L, S, A, T, U>(labels: L, arcs: A) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        A: IntoIterator<Item = (T, U)>,
        T: AsRef<str>,
        U: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), NodeId(i)).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut pairs = Vec::new();
        for (s, t) in arcs {
            let (s, t) = (s.as_ref(), t.as_ref());
            let u = *index
                .get(s)
                .ok_or_else(|| Error::UnknownEndpoint(s.to_string()))?;
            let v = *index
                .get(t)
                .ok_or_else(|| Error::UnknownEndpoint(t.to_string()))?;
            pairs.push((u, v));
        }
        Self::assemble(labels, index, pairs)
    }

    /// Builds a network on `n` nodes labelled `"0"`, `"1"`, … from index arcs.
    pub fn from_index_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), NodeId(i)))
            .collect();
        let mut pairs = Vec::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::InvalidNode(u));
            }
            if v >= n {
                return Err(Error::InvalidNode(v));
            }
            pairs.push((NodeId(u), NodeId(v)));
        }
        Self::assemble(labels, index, pairs)
    }

    fn assemble(
        labels: Vec<String>,
        index: HashMap<String, NodeId>,
        pairs: Vec<(NodeId, NodeId)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in &pairs {
            if u == v {
                return Err(Error::SelfLoop {
                    label: labels[u.0].clone(),
                    line: None,
                });
            }
            out_adj[u.0].push(v);
        }
        for (u, row) in out_adj.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateArc {
                    source_label: labels[u].clone(),
                    target_label: labels[w[0].0].clone(),
                    line: None,
                });
            }
        }
        Ok(Self::from_sorted_out(labels, index, out_adj))
    }

    /// `out_adj` rows must already be sorted, duplicate-free and loop-free.
    fn from_sorted_out(
        labels: Vec<String>,
        index: HashMap<String, NodeId>,
        out_adj: Vec<Vec<NodeId>>,
    ) -> Self {
        let n = labels.len();
        let mut in_adj = vec![Vec::new(); n];
        let mut arc_count = 0;
        // Rows are visited in increasing source order, so in_adj stays sorted.
        for (u, row) in out_adj.iter().enumerate() {
            arc_count += row.len();
            for &v in row {
                in_adj[v.0].push(NodeId(u));
            }
        }
        DirectedNetwork {
            labels,
            index,
            out_adj,
            in_adj,
            arc_count,
        }
    }

    fn with_out_adj(&self, out_adj: Vec<Vec<NodeId>>) -> Self {
        Self::from_sorted_out(self.labels.clone(), self.index.clone(), out_adj)
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: NodeId) -> &str {
        &self.labels[i.0]
    }

    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    /// Looks a node up by label, failing with [`Error::UnknownNode`].
    pub fn require_node(&self, label: &str) -> Result<NodeId> {
        self.node(label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn check(&self, i: NodeId) -> Result<()> {
        if i.0 < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidNode(i.0))
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count()).map(NodeId)
    }

    /// Direct successors `s_i`, sorted.
    pub fn out_neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.out_adj[i.0]
    }

    /// Direct predecessors `p_i`, sorted.
    pub fn in_neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.in_adj[i.0]
    }

    pub fn out_degree(&self, i: NodeId) -> usize {
        self.out_adj[i.0].len()
    }

    pub fn in_degree(&self, i: NodeId) -> usize {
        self.in_adj[i.0].len()
    }

    /// Number of distinct neighbours, counting a reciprocated pair once.
    pub fn degree(&self, i: NodeId) -> usize {
        let (a, b) = (&self.out_adj[i.0], &self.in_adj[i.0]);
        let (mut x, mut y, mut d) = (0, 0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    x += 1;
                    y += 1;
                }
            }
            d += 1;
        }
        d + (a.len() - x) + (b.len() - y)
    }

    pub fn has_arc(&self, u: NodeId, v: NodeId) -> bool {
        self.out_adj[u.0].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic `(source, target)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (NodeId(u), v)))
    }

    pub fn classify_node(&self, i: NodeId) -> NodeClass {
        let (din, dout) = (self.in_degree(i), self.out_degree(i));
        match (din, dout) {
            (0, 0) => NodeClass::Isolated,
            (0, _) => NodeClass::Source,
            (_, 0) => NodeClass::Sink,
            _ if self.degree(i) >= 2 => NodeClass::Intermediary,
            _ => NodeClass::Leaf,
        }
    }

    pub fn is_intermediary(&self, i: NodeId) -> bool {
        self.classify_node(i) == NodeClass::Intermediary
    }

    /// `D - i`: drops every arc incident to `i`, keeping `i` as an isolated node.
    pub fn remove_node(&self, i: NodeId) -> Self {
        self.remove_node_set(&[i])
    }

    /// `D - C` for a node set `C`.
    pub fn remove_node_set(&self, removed: &[NodeId]) -> Self {
        let mut gone = vec![false; self.node_count()];
        for &c in removed {
            gone[c.0] = true;
        }
        let out_adj = self
            .out_adj
            .iter()
            .enumerate()
            .map(|(u, row)| {
                if gone[u] {
                    Vec::new()
                } else {
                    row.iter().copied().filter(|v| !gone[v.0]).collect()
                }
            })
            .collect();
        self.with_out_adj(out_adj)
    }

    /// Adds the reverse of every arc. Idempotent.
    pub fn symmetrize(&self) -> Self {
        let out_adj = (0..self.node_count())
            .map(|u| merge_sorted(&self.out_adj[u], &self.in_adj[u]))
            .collect();
        self.with_out_adj(out_adj)
    }

    pub fn is_symmetric(&self) -> bool {
        self.out_adj == self.in_adj
    }

    /// Reverses every arc.
    pub fn transpose(&self) -> Self {
        self.with_out_adj(self.in_adj.clone())
    }

    /// Returns `D ∪ arcs`; fails on self-loops or arcs already present.
    pub fn with_arcs_added(&self, arcs: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut out_adj = self.out_adj.clone();
        for &(u, v) in arcs {
            self.check(u)?;
            self.check(v)?;
            if u == v {
                return Err(Error::SelfLoop {
                    label: self.label(u).to_string(),
                    line: None,
                });
            }
            match out_adj[u.0].binary_search(&v) {
                Ok(_) => {
                    return Err(Error::DuplicateArc {
                        source_label: self.label(u).to_string(),
                        target_label: self.label(v).to_string(),
                        line: None,
                    })
                }
                Err(pos) => out_adj[u.0].insert(pos, v),
            }
        }
        Ok(self.with_out_adj(out_adj))
    }

    /// Returns `D ∖ arcs`; arcs not present are ignored.
    pub fn without_arcs(&self, arcs: &[(NodeId, NodeId)]) -> Self {
        let mut out_adj = self.out_adj.clone();
        for &(u, v) in arcs {
            if let Some(row) = out_adj.get_mut(u.0) {
                if let Ok(pos) = row.binary_search(&v) {
                    row.remove(pos);
                }
            }
        }
        self.with_out_adj(out_adj)
    }

    /// Maximal weakly connected node sets, each sorted, ordered by first member.
    pub fn weak_components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(NodeId(u));
                for &v in self.out_adj[u].iter().chain(&self.in_adj[u]) {
                    if !seen[v.0] {
                        seen[v.0] = true;
                        queue.push_back(v.0);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Maximal strongly connected node sets (Tarjan), each sorted, ordered by
    /// first member.
    pub fn strong_components(&self) -> Vec<Vec<NodeId>> {
        let n = self.node_count();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut counter = 0;
        // (node, position in its successor list)
        let mut call: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            while let Some(&mut (u, ref mut pos)) = call.last_mut() {
                if *pos == 0 && index[u] == UNSEEN {
                    index[u] = counter;
                    low[u] = counter;
                    counter += 1;
                    stack.push(u);
                    on_stack[u] = true;
                }
                if let Some(&v) = self.out_adj[u].get(*pos) {
                    *pos += 1;
                    if index[v.0] == UNSEEN {
                        call.push((v.0, 0));
                    } else if on_stack[v.0] {
                        low[u] = low[u].min(index[v.0]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[u]);
                }
                if low[u] == index[u] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(NodeId(w));
                        if w == u {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps.sort_unstable_by_key(|c| c[0]);
        comps
    }
}

fn merge_sorted(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => {
                out.push(a[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[y]);
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[x]);
                x += 1;
                y += 1;
            }
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
    out
}
