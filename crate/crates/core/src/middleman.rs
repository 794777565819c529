//! Middleman identification.
//!
//! A node `h` is an `ij`-middleman when it lies on every `ij`-path. That is
//! the same as saying `j` is reachable from `i` in `D` but not in `D - h`,
//! which is what every routine here tests; paths are never enumerated.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DirectedNetwork, NodeId};
use crate::reachability::{
    is_strongly_connected, reachability, reachability_avoiding, successors_avoiding,
    weak_component_count_within, NodeSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MiddlemanKind {
    NotIntermediary,
    ContestedIntermediary,
    /// Removal breaks some connection but leaves the network weakly connected.
    RegularMiddleman,
    /// Removal splits the network into more weak components.
    StrongMiddleman,
}

impl MiddlemanKind {
    pub fn is_middleman(self) -> bool {
        matches!(
            self,
            MiddlemanKind::RegularMiddleman | MiddlemanKind::StrongMiddleman
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MiddlemanKind::NotIntermediary => "not_intermediary",
            MiddlemanKind::ContestedIntermediary => "contested_intermediary",
            MiddlemanKind::RegularMiddleman => "regular_middleman",
            MiddlemanKind::StrongMiddleman => "strong_middleman",
        }
    }

    /// `*` for regular and `**` for strong middlemen, empty otherwise.
    pub fn marker(self) -> &'static str {
        match self {
            MiddlemanKind::RegularMiddleman => "*",
            MiddlemanKind::StrongMiddleman => "**",
            _ => "",
        }
    }
}

impl fmt::Display for MiddlemanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-node middleman classification with the pairs each node brokers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiddlemanReport {
    kinds: Vec<MiddlemanKind>,
    brokered_pairs: Vec<Vec<(NodeId, NodeId)>>,
}

impl MiddlemanReport {
    pub fn kind(&self, i: NodeId) -> MiddlemanKind {
        self.kinds[i.0]
    }

    pub fn kinds(&self) -> &[MiddlemanKind] {
        &self.kinds
    }

    /// Ordered pairs `(h, j)` for which the node is an `hj`-middleman.
    pub fn brokered_pairs(&self, i: NodeId) -> &[(NodeId, NodeId)] {
        &self.brokered_pairs[i.0]
    }

    pub fn is_middleman(&self, i: NodeId) -> bool {
        self.kinds[i.0].is_middleman()
    }

    /// `M(D)` in increasing order.
    pub fn middlemen(&self) -> Vec<NodeId> {
        self.nodes_where(MiddlemanKind::is_middleman)
    }

    pub fn contested_intermediaries(&self) -> Vec<NodeId> {
        self.nodes_where(|k| k == MiddlemanKind::ContestedIntermediary)
    }

    fn nodes_where(&self, pred: impl Fn(MiddlemanKind) -> bool) -> Vec<NodeId> {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, &k)| pred(k))
            .map(|(i, _)| NodeId(i))
            .collect()
    }
}

/// `M_ij(D)`: nodes other than `i` and `j` lying on every `ij`-path.
pub fn ij_middlemen(net: &DirectedNetwork, i: NodeId, j: NodeId) -> Result<Vec<NodeId>> {
    net.check(i)?;
    net.check(j)?;
    if i == j {
        return Err(Error::SameNode(i));
    }
    if !successors_avoiding(net, i, None).contains(j.0) || net.has_arc(i, j) {
        return Ok(Vec::new());
    }
    Ok(net
        .nodes()
        .filter(|&h| h != i && h != j)
        .filter(|&h| !successors_avoiding(net, i, Some(h)).contains(j.0))
        .collect())
}

/// Whether `h` brokers at least one pair.
///
/// Only direct neighbours need checking: `h` is a middleman exactly when some
/// direct predecessor `a` cannot reach some other direct successor `b` once
/// `h` is removed. Every brokered pair `(x, y)` routes through such an
/// `a -> h -> b` step, and the prefix and suffix avoid `h`.
pub fn is_middleman(net: &DirectedNetwork, h: NodeId) -> bool {
    let succ = net.out_neighbors(h);
    if succ.is_empty() {
        return false;
    }
    net.in_neighbors(h).iter().any(|&a| {
        let reach = successors_avoiding(net, a, Some(h));
        succ.iter().any(|&b| b != a && !reach.contains(b.0))
    })
}

/// Classifies every node and lists the pairs it brokers.
///
/// Uses one reachability table for `D` and one for each `D - h`. The
/// strong/regular split compares weak-component counts over the nodes that
/// carry at least one arc in `D`, with `h` itself left out after removal.
pub fn middleman_set(net: &DirectedNetwork) -> MiddlemanReport {
    let n = net.node_count();
    let base = reachability(net);
    let mut active = NodeSet::with_capacity(n);
    for i in net.nodes().filter(|&i| net.degree(i) > 0) {
        active.insert(i.0);
    }
    let base_components = weak_component_count_within(net, &active);

    let rows: Vec<(MiddlemanKind, Vec<(NodeId, NodeId)>)> = (0..n)
        .into_par_iter()
        .map(|h| {
            let h = NodeId(h);
            if !net.is_intermediary(h) {
                return (MiddlemanKind::NotIntermediary, Vec::new());
            }
            let reduced = reachability_avoiding(net, Some(h));
            let mut pairs = Vec::new();
            for i in net.nodes().filter(|&i| i != h) {
                let mut lost = base.successors(i).clone();
                lost.difference_with(reduced.successors(i));
                lost.set(h.0, false);
                pairs.extend(lost.ones().map(|j| (i, NodeId(j))));
            }
            if pairs.is_empty() {
                return (MiddlemanKind::ContestedIntermediary, pairs);
            }
            let mut keep = active.clone();
            keep.set(h.0, false);
            let kind = if weak_component_count_within(net, &keep) > base_components {
                MiddlemanKind::StrongMiddleman
            } else {
                MiddlemanKind::RegularMiddleman
            };
            (kind, pairs)
        })
        .collect();

    let (kinds, brokered_pairs) = rows.into_iter().unzip();
    MiddlemanReport {
        kinds,
        brokered_pairs,
    }
}

/// Checks that every middleman of a strongly connected network is strong.
///
/// This holds for symmetric networks. Directed ones can fail: in a directed
/// cycle every node is a middleman, yet removing it leaves a path, which is
/// still weakly connected.
pub fn verify_strong_theorem(net: &DirectedNetwork) -> Result<bool> {
    if !is_strongly_connected(net) {
        return Err(Error::NotStronglyConnected);
    }
    let report = middleman_set(net);
    Ok(report
        .kinds()
        .iter()
        .all(|&k| k != MiddlemanKind::RegularMiddleman))
}
