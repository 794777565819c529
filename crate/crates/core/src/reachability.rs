//! Transitive successor and predecessor sets.
//!
//! Sets are bit-packed ([`NodeSet`]) so that membership is O(1) and the set
//! differences used by the brokerage computation are word-parallel.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DirectedNetwork, NodeId};

/// Bit set over the node indices of one network.
pub type NodeSet = FixedBitSet;

/// Members of a [`NodeSet`] in increasing order.
pub fn members(set: &NodeSet) -> Vec<NodeId> {
    set.ones().map(NodeId).collect()
}

/// `S_i`, `P_i`, `s_i` and `p_i` for every node of one network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityTable {
    successors: Vec<NodeSet>,
    predecessors: Vec<NodeSet>,
    direct_successors: Vec<NodeSet>,
    direct_predecessors: Vec<NodeSet>,
}

/// Reach `S̄_i = S_i ∪ {i}` and origin `P̄_i = P_i ∪ {i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachClosure {
    reach: Vec<NodeSet>,
    origin: Vec<NodeSet>,
}

impl ReachabilityTable {
    pub fn node_count(&self) -> usize {
        self.successors.len()
    }

    /// `S_i`: nodes reachable from `i` by a path; never contains `i`.
    pub fn successors(&self, i: NodeId) -> &NodeSet {
        &self.successors[i.0]
    }

    /// `P_i`: nodes that reach `i`; never contains `i`.
    pub fn predecessors(&self, i: NodeId) -> &NodeSet {
        &self.predecessors[i.0]
    }

    pub fn direct_successors(&self, i: NodeId) -> &NodeSet {
        &self.direct_successors[i.0]
    }

    pub fn direct_predecessors(&self, i: NodeId) -> &NodeSet {
        &self.direct_predecessors[i.0]
    }

    /// Whether `j ∈ S_i`.
    pub fn reaches(&self, i: NodeId, j: NodeId) -> bool {
        self.successors[i.0].contains(j.0)
    }

    pub fn closure(&self) -> ReachClosure {
        let add_self = |sets: &[NodeSet]| {
            sets.iter()
                .enumerate()
                .map(|(i, s)| {
                    let mut s = s.clone();
                    s.insert(i);
                    s
                })
                .collect()
        };
        ReachClosure {
            reach: add_self(&self.successors),
            origin: add_self(&self.predecessors),
        }
    }
}

impl ReachClosure {
    pub fn reach(&self, i: NodeId) -> &NodeSet {
        &self.reach[i.0]
    }

    pub fn origin(&self, i: NodeId) -> &NodeSet {
        &self.origin[i.0]
    }
}

/// Computes the full reachability table by one breadth-first traversal per
/// source. Traversals run in parallel; the result is independent of
/// scheduling.
pub fn reachability(net: &DirectedNetwork) -> ReachabilityTable {
    reachability_avoiding(net, None)
}

/// Reachability of `D - blocked` without materialising the reduced network.
/// The blocked node keeps empty sets.
pub fn reachability_avoiding(net: &DirectedNetwork, blocked: Option<NodeId>) -> ReachabilityTable {
    let n = net.node_count();
    let successors: Vec<NodeSet> = (0..n)
        .into_par_iter()
        .map(|u| {
            if Some(NodeId(u)) == blocked {
                NodeSet::with_capacity(n)
            } else {
                successors_avoiding(net, NodeId(u), blocked)
            }
        })
        .collect();
    let mut predecessors = vec![NodeSet::with_capacity(n); n];
    for (u, succ) in successors.iter().enumerate() {
        for v in succ.ones() {
            predecessors[v].insert(u);
        }
    }
    let direct = |forward: bool| -> Vec<NodeSet> {
        (0..n)
            .map(|u| {
                let u = NodeId(u);
                let mut s = NodeSet::with_capacity(n);
                let adj = if forward {
                    net.out_neighbors(u)
                } else {
                    net.in_neighbors(u)
                };
                if Some(u) != blocked {
                    for &v in adj {
                        if Some(v) != blocked {
                            s.insert(v.0);
                        }
                    }
                }
                s
            })
            .collect()
    };
    ReachabilityTable {
        direct_successors: direct(true),
        direct_predecessors: direct(false),
        successors,
        predecessors,
    }
}

/// `S_source` in `D - blocked` (or in `D` when `blocked` is `None`).
pub fn successors_avoiding(
    net: &DirectedNetwork,
    source: NodeId,
    blocked: Option<NodeId>,
) -> NodeSet {
    let n = net.node_count();
    let mut seen = NodeSet::with_capacity(n);
    if let Some(b) = blocked {
        seen.insert(b.0);
    }
    let mut queue = VecDeque::new();
    queue.push_back(source);
    let mut out = NodeSet::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        for &v in net.out_neighbors(u) {
            if !seen.contains(v.0) {
                seen.insert(v.0);
                out.insert(v.0);
                queue.push_back(v);
            }
        }
    }
    out.set(source.0, false);
    out
}

/// Whether some path leads from `i` to `j`. Reflexive queries are rejected.
pub fn has_path(net: &DirectedNetwork, i: NodeId, j: NodeId) -> Result<bool> {
    net.check(i)?;
    net.check(j)?;
    if i == j {
        return Err(Error::SameNode(i));
    }
    Ok(successors_avoiding(net, i, None).contains(j.0))
}

/// One weak component spans all nodes that carry an arc.
///
/// Isolated nodes are ignored so that the placeholder left behind by node
/// removal does not count as a separate component. A network without arcs
/// is weakly connected only when it has at most one node.
pub fn is_weakly_connected(net: &DirectedNetwork) -> bool {
    // Singleton components are exactly the isolated nodes.
    let spanning = net.weak_components().iter().filter(|c| c.len() > 1).count();
    match spanning {
        0 => net.node_count() <= 1,
        k => k == 1,
    }
}

/// Every ordered pair of distinct nodes is joined by a path.
pub fn is_strongly_connected(net: &DirectedNetwork) -> bool {
    net.strong_components().len() <= 1
}

/// Number of weak components among the nodes of `keep`.
///
/// Used to compare connectivity of `D` and `D - h` on the same node
/// population.
pub(crate) fn weak_component_count_within(net: &DirectedNetwork, keep: &NodeSet) -> usize {
    let n = net.node_count();
    let mut seen = NodeSet::with_capacity(n);
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in keep.ones() {
        if seen.contains(start) {
            continue;
        }
        count += 1;
        seen.insert(start);
        queue.push_back(NodeId(start));
        while let Some(u) = queue.pop_front() {
            for &v in net.out_neighbors(u).iter().chain(net.in_neighbors(u)) {
                if keep.contains(v.0) && !seen.contains(v.0) {
                    seen.insert(v.0);
                    queue.push_back(v);
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure1() -> DirectedNetwork {
        DirectedNetwork::from_index_arcs(
            8,
            [
                (1, 2),
                (1, 3),
                (2, 4),
                (2, 5),
                (3, 5),
                (4, 6),
                (5, 6),
                (6, 7),
            ],
        )
        .unwrap()
        .remove_node(NodeId(0))
    }

    fn set(ids: &[usize]) -> Vec<NodeId> {
        ids.iter().map(|&i| NodeId(i)).collect()
    }

    #[test]
    fn figure1_table() {
        // index = figure label; index 0 is an unused placeholder
        let t = reachability(&figure1());
        assert_eq!(members(t.successors(NodeId(2))), set(&[4, 5, 6, 7]));
        assert_eq!(members(t.predecessors(NodeId(6))), set(&[1, 2, 3, 4, 5]));
        assert!(t.successors(NodeId(7)).is_clear());
        assert!(t.predecessors(NodeId(1)).is_clear());
    }

    #[test]
    fn empty_network_has_empty_sets() {
        let net = DirectedNetwork::from_index_arcs(4, []).unwrap();
        let t = reachability(&net);
        for i in net.nodes() {
            assert!(t.successors(i).is_clear());
            assert!(t.predecessors(i).is_clear());
        }
    }

    #[test]
    fn cycle_reaches_everyone_else() {
        let n = 5;
        let net = DirectedNetwork::from_index_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let t = reachability(&net);
        for i in net.nodes() {
            assert_eq!(t.successors(i).count_ones(..), n - 1);
            assert!(!t.reaches(i, i));
        }
        assert!(is_strongly_connected(&net));
    }

    #[test]
    fn closure_adds_self() {
        let t = reachability(&figure1());
        let c = t.closure();
        assert!(c.reach(NodeId(7)).contains(7));
        assert!(c.origin(NodeId(1)).contains(1));
        assert_eq!(c.reach(NodeId(7)).count_ones(..), 1);
    }

    #[test]
    fn path_queries() {
        let net = figure1();
        assert!(has_path(&net, NodeId(1), NodeId(7)).unwrap());
        assert!(!has_path(&net, NodeId(7), NodeId(1)).unwrap());
        assert!(matches!(
            has_path(&net, NodeId(3), NodeId(3)),
            Err(Error::SameNode(_))
        ));
    }

    #[test]
    fn connectivity_predicates() {
        let net = figure1();
        assert!(is_weakly_connected(&net));
        assert!(!is_strongly_connected(&net));
        let tri = DirectedNetwork::from_index_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_strongly_connected(&tri));
        let two = DirectedNetwork::from_index_arcs(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_weakly_connected(&two));
    }

    #[test]
    fn avoiding_matches_reduced_network() {
        let net = figure1();
        for b in net.nodes() {
            let direct = reachability(&net.remove_node(b));
            let masked = reachability_avoiding(&net, Some(b));
            assert_eq!(direct, masked);
        }
    }
}
