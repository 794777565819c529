//! Coverage, contestation and minimum contesting sets.
//!
//! Intermediary `i` is contested by `C` when every pair it can broker,
//! `Γ_i(D) = {(h, j) ∈ P_i × S_i : h ≠ j}`, falls inside the union of the
//! extended coverages `P̄_c × S̄_c` of the members of `C`, evaluated on
//! `D - i`. Finding a smallest such `C` is a set-cover problem, solved here
//! exactly by depth-bounded search seeded with a greedy upper bound.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DirectedNetwork, NodeId};
use crate::middleman::middleman_set;
use crate::reachability::{reachability, reachability_avoiding, ReachabilityTable};

/// A set of ordered node pairs attributed to one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageSet {
    owner: NodeId,
    pairs: Vec<(NodeId, NodeId)>,
}

impl CoverageSet {
    pub fn owner(&self) -> NodeId {
        self.owner
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> &[(NodeId, NodeId)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (NodeId, NodeId)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }
}

/// `Γ_i(D)`. Only defined for intermediaries.
pub fn coverage(net: &DirectedNetwork, i: NodeId) -> Result<CoverageSet> {
    require_intermediary(net, i)?;
    let table = reachability(net);
    Ok(CoverageSet {
        owner: i,
        pairs: coverage_pairs(&table, i),
    })
}

/// `Γ̄_i = P̄_i × S̄_i` on the given network (pass `D - k` to evaluate on a
/// reduced network).
pub fn extended_coverage(net: &DirectedNetwork, i: NodeId) -> Result<CoverageSet> {
    net.check(i)?;
    let closure = reachability(net).closure();
    let mut pairs = Vec::new();
    for h in closure.origin(i).ones() {
        for j in closure.reach(i).ones() {
            pairs.push((NodeId(h), NodeId(j)));
        }
    }
    Ok(CoverageSet { owner: i, pairs })
}

fn coverage_pairs(table: &ReachabilityTable, i: NodeId) -> Vec<(NodeId, NodeId)> {
    let mut pairs = Vec::new();
    for h in table.predecessors(i).ones() {
        for j in table.successors(i).ones().filter(|&j| j != h) {
            pairs.push((NodeId(h), NodeId(j)));
        }
    }
    pairs
}

fn require_intermediary(net: &DirectedNetwork, i: NodeId) -> Result<()> {
    net.check(i)?;
    if net.is_intermediary(i) {
        Ok(())
    } else {
        Err(Error::NotIntermediary(net.label(i).to_string()))
    }
}

/// Whether `contestors` jointly contest intermediary `i`.
pub fn is_contested_by(net: &DirectedNetwork, i: NodeId, contestors: &[NodeId]) -> Result<bool> {
    require_intermediary(net, i)?;
    for &c in contestors {
        net.check(c)?;
        if c == i {
            return Err(Error::TargetInSet(net.label(i).to_string()));
        }
    }
    let problem = CoverProblem::new(net, i);
    let mut covered = FixedBitSet::with_capacity(problem.universe.len());
    for &c in contestors {
        covered.union_with(&problem.covered_by(c));
    }
    Ok(covered.count_ones(..) == problem.universe.len())
}

/// Whether `j` alone can take over `i`'s brokerage: every predecessor of `i`
/// that has a partner in `S_i` lies in `P_j(D - i) ∪ {j}`, and every
/// successor of `i` with a partner in `P_i` lies in `S_j(D - i) ∪ {j}`.
///
/// The partner condition only matters when `i` sits on a reciprocated arc:
/// if `h` is both the sole predecessor and the sole successor of `i`, the
/// pair `(h, h)` is not brokered and `h` places no demand on `j`.
///
/// For intermediaries this coincides with `is_contested_by(net, i, &[j])`.
/// The test is also evaluated for sources, sinks and leaves; only nodes
/// without any arc are rejected.
pub fn is_directly_contested(net: &DirectedNetwork, i: NodeId, j: NodeId) -> Result<bool> {
    net.check(i)?;
    net.check(j)?;
    if i == j {
        return Err(Error::SameNode(i));
    }
    if net.degree(i) == 0 {
        return Err(Error::NotIntermediary(net.label(i).to_string()));
    }
    let full = reachability(net);
    let reduced = reachability_avoiding(net, Some(i));
    let mut preds = full.predecessors(i).clone();
    let mut succs = full.successors(i).clone();
    preds.set(i.0, false);
    succs.set(i.0, false);
    let partnered = |x: usize, other: &FixedBitSet| other.ones().any(|y| y != x);
    let within = |needed: &FixedBitSet, other: &FixedBitSet, have: &FixedBitSet| {
        needed
            .ones()
            .all(|x| x == j.0 || have.contains(x) || !partnered(x, other))
    };
    Ok(within(&preds, &succs, reduced.predecessors(j))
        && within(&succs, &preds, reduced.successors(j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContestationStatus {
    Uncontested,
    Contested,
}

impl fmt::Display for ContestationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContestationStatus::Uncontested => "uncontested",
            ContestationStatus::Contested => "contested",
        })
    }
}

/// How the contesting set is searched for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoverSearch {
    #[default]
    Exact,
    /// Greedy cover; `lower_bound` reports how far from optimal it may be.
    Greedy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContestationResult {
    pub target: NodeId,
    pub status: ContestationStatus,
    /// Smallest contesting set found, sorted by id. `None` when uncontested.
    pub minimal_set: Option<Vec<NodeId>>,
    /// Nodes that contest the target on their own.
    pub direct_contestors: Vec<NodeId>,
    /// `true` when `minimal_set` is proven minimum.
    pub exact: bool,
    /// Lower bound on the size of any contesting set (0 when uncontested).
    pub lower_bound: usize,
}

impl ContestationResult {
    /// Greedy size minus the lower bound; 0 for exact results.
    pub fn optimality_gap(&self) -> usize {
        match &self.minimal_set {
            Some(s) if !self.exact => s.len().saturating_sub(self.lower_bound),
            _ => 0,
        }
    }
}

/// Exact minimum contesting set of intermediary `i`.
///
/// Among sets of minimum size the one returned is the lexicographically
/// smallest sequence under the candidate order: intermediaries of `D` first,
/// then all other nodes, each group by increasing id.
pub fn minimal_contesting_set(net: &DirectedNetwork, i: NodeId) -> Result<ContestationResult> {
    contesting_set_with(net, i, CoverSearch::Exact)
}

pub fn contesting_set_with(
    net: &DirectedNetwork,
    i: NodeId,
    search: CoverSearch,
) -> Result<ContestationResult> {
    require_intermediary(net, i)?;
    let problem = CoverProblem::new(net, i);
    let universe = problem.universe.len();

    let mut order: Vec<NodeId> = net.nodes().filter(|&c| c != i).collect();
    order.sort_by_key(|&c| (!net.is_intermediary(c), c));
    let candidates: Vec<(NodeId, FixedBitSet)> = order
        .into_iter()
        .map(|c| (c, problem.covered_by(c)))
        .filter(|(_, s)| !s.is_clear())
        .collect();

    let direct_contestors = {
        let mut d: Vec<NodeId> = candidates
            .iter()
            .filter(|(_, s)| s.count_ones(..) == universe)
            .map(|&(c, _)| c)
            .collect();
        d.sort_unstable();
        d
    };

    let mut union = FixedBitSet::with_capacity(universe);
    for (_, s) in &candidates {
        union.union_with(s);
    }
    if union.count_ones(..) < universe {
        return Ok(ContestationResult {
            target: i,
            status: ContestationStatus::Uncontested,
            minimal_set: None,
            direct_contestors,
            exact: true,
            lower_bound: 0,
        });
    }

    let sets: Vec<&FixedBitSet> = candidates.iter().map(|(_, s)| s).collect();
    let largest = sets.iter().map(|s| s.count_ones(..)).max().unwrap_or(1);
    let lower = universe.div_ceil(largest).max(1);
    let greedy = greedy_cover(&sets, universe);

    let (chosen, exact, lower_bound) = match search {
        CoverSearch::Greedy => {
            let exact = greedy.len() == lower;
            (greedy, exact, lower)
        }
        CoverSearch::Exact => {
            let best = exact_cover(&sets, universe, lower, greedy.len()).unwrap_or(greedy);
            let size = best.len();
            (best, true, size)
        }
    };
    let mut minimal: Vec<NodeId> = chosen.into_iter().map(|k| candidates[k].0).collect();
    minimal.sort_unstable();

    Ok(ContestationResult {
        target: i,
        status: ContestationStatus::Contested,
        minimal_set: Some(minimal),
        direct_contestors,
        exact,
        lower_bound,
    })
}

/// Checks that every intermediary is a middleman exactly when no node set
/// contests it.
///
/// Contestation is decided from coverage alone, independently of the
/// middleman module: by monotonicity some set contests `i` exactly when
/// `N ∖ {i}` does.
pub fn verify_duality(net: &DirectedNetwork) -> bool {
    let report = middleman_set(net);
    net.nodes().filter(|&i| net.is_intermediary(i)).all(|i| {
        let everyone: Vec<NodeId> = net.nodes().filter(|&c| c != i).collect();
        let contested = is_contested_by(net, i, &everyone).expect("intermediary target");
        report.is_middleman(i) != contested
    })
}

/// Universe `Γ_i(D)` with `D - i` closures for building candidate sets.
struct CoverProblem {
    universe: Vec<(NodeId, NodeId)>,
    reduced: ReachabilityTable,
}

impl CoverProblem {
    fn new(net: &DirectedNetwork, i: NodeId) -> Self {
        CoverProblem {
            universe: coverage_pairs(&reachability(net), i),
            reduced: reachability_avoiding(net, Some(i)),
        }
    }

    /// Universe elements inside `Γ̄_c(D - i)`.
    fn covered_by(&self, c: NodeId) -> FixedBitSet {
        let origin = |h: NodeId| h == c || self.reduced.reaches(h, c);
        let reach = |j: NodeId| j == c || self.reduced.reaches(c, j);
        let mut set = FixedBitSet::with_capacity(self.universe.len());
        for (k, &(h, j)) in self.universe.iter().enumerate() {
            if origin(h) && reach(j) {
                set.insert(k);
            }
        }
        set
    }
}

fn greedy_cover(sets: &[&FixedBitSet], universe: usize) -> Vec<usize> {
    let mut covered = FixedBitSet::with_capacity(universe);
    let mut chosen = Vec::new();
    while covered.count_ones(..) < universe {
        let (best, gain) = sets
            .iter()
            .enumerate()
            .map(|(k, s)| (k, s.difference(&covered).count()))
            .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if gain == 0 {
            break;
        }
        covered.union_with(sets[best]);
        chosen.push(best);
    }
    chosen
}

/// Smallest cover, lexicographically first in candidate order, with size in
/// `lower..=upper`.
fn exact_cover(
    sets: &[&FixedBitSet],
    universe: usize,
    lower: usize,
    upper: usize,
) -> Option<Vec<usize>> {
    // suffix[k] = union of sets[k..]
    let mut suffix = vec![FixedBitSet::with_capacity(universe); sets.len() + 1];
    for k in (0..sets.len()).rev() {
        let mut u = suffix[k + 1].clone();
        u.union_with(sets[k]);
        suffix[k] = u;
    }
    let search = CoverSearchState {
        sets,
        universe,
        suffix,
    };
    (lower..=upper).find_map(|k| {
        let mut chosen = Vec::with_capacity(k);
        let covered = FixedBitSet::with_capacity(universe);
        search.dfs(0, &covered, k, &mut chosen).then_some(chosen)
    })
}

struct CoverSearchState<'a> {
    sets: &'a [&'a FixedBitSet],
    universe: usize,
    suffix: Vec<FixedBitSet>,
}

impl CoverSearchState<'_> {
    fn dfs(
        &self,
        start: usize,
        covered: &FixedBitSet,
        left: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let missing = self.universe - covered.count_ones(..);
        if missing == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        // every uncovered element must still be coverable from sets[start..]
        let mut uncovered = FixedBitSet::with_capacity(self.universe);
        uncovered.insert_range(..);
        uncovered.difference_with(covered);
        if !uncovered.is_subset(&self.suffix[start]) {
            return false;
        }
        let best_gain = self.sets[start..]
            .iter()
            .map(|s| s.intersection(&uncovered).count())
            .max()
            .unwrap_or(0);
        if best_gain * left < missing {
            return false;
        }
        for k in start..self.sets.len() {
            if self.sets[k].intersection(&uncovered).next().is_none() {
                continue;
            }
            let mut next = covered.clone();
            next.union_with(self.sets[k]);
            chosen.push(k);
            if self.dfs(k + 1, &next, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}
