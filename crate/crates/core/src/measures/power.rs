use num_rational::Ratio;
use rayon::prelude::*;

use crate::graph::{DirectedNetwork, NodeId};
use crate::reachability::{reachability, reachability_avoiding};

/// Brokerage `b_i`, potential `B(D)` and power `ν_i = b_i / max(B(D), 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTable {
    brokerage: Vec<u64>,
    total_potential: u64,
    power: Vec<Ratio<u64>>,
}

impl PowerTable {
    pub fn brokerage(&self, i: NodeId) -> u64 {
        self.brokerage[i.0]
    }

    pub fn brokerages(&self) -> &[u64] {
        &self.brokerage
    }

    pub fn total_potential(&self) -> u64 {
        self.total_potential
    }

    pub fn power(&self, i: NodeId) -> Ratio<u64> {
        self.power[i.0]
    }

    pub fn powers(&self) -> &[Ratio<u64>] {
        &self.power
    }

    pub fn power_f64(&self, i: NodeId) -> f64 {
        let r = self.power[i.0];
        *r.numer() as f64 / *r.denom() as f64
    }
}

/// `b_i = Σ_{j≠i} [#S_j(D) - #S_j(D - i)] - #P_i(D)`.
///
/// The subtraction removes `i` itself, which every member of `P_i` loses
/// from its successor set once `i` is gone.
pub fn brokerage(net: &DirectedNetwork) -> Vec<u64> {
    let base = reachability(net);
    let before: Vec<u64> = net
        .nodes()
        .map(|j| base.successors(j).count_ones(..) as u64)
        .collect();
    (0..net.node_count())
        .into_par_iter()
        .map(|i| {
            let i = NodeId(i);
            let reduced = reachability_avoiding(net, Some(i));
            let lost: u64 = net
                .nodes()
                .filter(|&j| j != i)
                .map(|j| before[j.0] - reduced.successors(j).count_ones(..) as u64)
                .sum();
            lost - base.predecessors(i).count_ones(..) as u64
        })
        .collect()
}

/// `b_i` for a single node.
pub fn brokerage_of(net: &DirectedNetwork, i: NodeId) -> u64 {
    let base = reachability(net);
    let reduced = reachability_avoiding(net, Some(i));
    let lost: u64 = net
        .nodes()
        .filter(|&j| j != i)
        .map(|j| (base.successors(j).count_ones(..) - reduced.successors(j).count_ones(..)) as u64)
        .sum();
    lost - base.predecessors(i).count_ones(..) as u64
}

/// `B(D) = Σ_i [#S_i - #s_i]`: ordered pairs joined only indirectly.
pub fn total_potential_brokerage(net: &DirectedNetwork) -> u64 {
    let base = reachability(net);
    net.nodes()
        .map(|i| (base.successors(i).count_ones(..) - net.out_degree(i)) as u64)
        .sum()
}

pub fn middleman_power(net: &DirectedNetwork) -> PowerTable {
    let brokerage = brokerage(net);
    let total_potential = total_potential_brokerage(net);
    let denom = total_potential.max(1);
    let power = brokerage.iter().map(|&b| Ratio::new(b, denom)).collect();
    PowerTable {
        brokerage,
        total_potential,
        power,
    }
}
