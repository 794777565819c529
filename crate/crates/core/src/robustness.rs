//! Robustness of a middleman: how many arcs must be added (`ρ`) or removed
//! (`ρ*`), or how many nodes removed (`ψ`), before it stops being one.
//!
//! All three searches work on the same observation. Node `i` is a middleman
//! exactly when some direct predecessor `a` and some other direct successor
//! `b` are disconnected in `D - i`; call such a pair a conflict. A
//! modification succeeds when it leaves no conflict.
//!
//! * Removing arcs not incident to `i` never resolves a conflict, so `ρ*`
//!   only considers the arcs `a -> i` and `i -> b`, and each conflict forces
//!   one of its two arcs into the witness.
//! * Likewise `ψ` only considers direct neighbours, and each conflict forces
//!   `a` or `b` into the removed set.
//! * Adding arcs incident to `i` only creates conflicts, so `ρ` adds arcs to
//!   `G = D - i`. Any added arc `u -> v` can be replaced by `t -> s` where
//!   `t` represents a sink component of `G` reachable from `u` and `s` a
//!   source component reaching `v`, so only those arcs are searched.
//!
//! Every search is iterative deepening over the witness size, so the first
//! witness found is minimum.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DirectedNetwork, NodeId};
use crate::measures::brokerage_of;
use crate::middleman::is_middleman;
use crate::reachability::{successors_avoiding, NodeSet};

pub type Arc = (NodeId, NodeId);

/// Search limits shared by the three measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RobustnessConfig {
    /// Maximum number of search states per measure and target.
    pub budget: u64,
}

impl Default for RobustnessConfig {
    fn default() -> Self {
        RobustnessConfig { budget: 2_000_000 }
    }
}

/// A minimum modification and its size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Robustness<T> {
    pub value: usize,
    pub witness: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobustnessReport {
    pub target: NodeId,
    pub rho: Robustness<Arc>,
    pub rho_dual: Robustness<Arc>,
    pub psi: Robustness<NodeId>,
}

impl RobustnessReport {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.rho.value, self.rho_dual.value, self.psi.value)
    }
}

fn require_middleman(net: &DirectedNetwork, i: NodeId) -> Result<()> {
    net.check(i)?;
    if is_middleman(net, i) {
        Ok(())
    } else {
        Err(Error::NotMiddleman(net.label(i).to_string()))
    }
}

struct Budget {
    measure: &'static str,
    limit: u64,
    explored: u64,
}

impl Budget {
    fn new(measure: &'static str, config: &RobustnessConfig) -> Self {
        Budget {
            measure,
            limit: config.budget.max(1),
            explored: 0,
        }
    }

    fn tick(&mut self) -> std::result::Result<(), ()> {
        self.explored += 1;
        if self.explored > self.limit {
            Err(())
        } else {
            Ok(())
        }
    }

    fn exceeded(&self, net: &DirectedNetwork, i: NodeId, lower: usize, upper: usize) -> Error {
        Error::SearchBudgetExceeded {
            measure: self.measure,
            target: net.label(i).to_string(),
            explored: self.explored,
            lower_bound: lower,
            upper_bound: upper,
        }
    }
}

/// Direct predecessor/successor pairs of `i` disconnected in `net - i`,
/// in lexicographic order.
fn conflicts(net: &DirectedNetwork, i: NodeId) -> Vec<(NodeId, NodeId)> {
    let succ = net.out_neighbors(i);
    let mut out = Vec::new();
    for &a in net.in_neighbors(i) {
        let reach = successors_avoiding(net, a, Some(i));
        out.extend(
            succ.iter()
                .filter(|&&b| b != a && !reach.contains(b.0))
                .map(|&b| (a, b)),
        );
    }
    out
}

/// Minimum hitting search where every remaining conflict of the modified
/// network must be resolved by one of two choices.
///
/// `apply` builds the modified network; `choices` names the two options for
/// a conflict. All minimum-size solutions are visited and the
/// lexicographically smallest is kept.
fn two_way_search<T: Copy + Ord + std::hash::Hash>(
    net: &DirectedNetwork,
    i: NodeId,
    upper: usize,
    budget: &mut Budget,
    apply: impl Fn(&[T]) -> DirectedNetwork,
    choices: impl Fn((NodeId, NodeId)) -> [T; 2],
) -> Result<Robustness<T>> {
    struct Ctx<'a, T, A, C> {
        i: NodeId,
        apply: &'a A,
        choices: &'a C,
        best: Option<Vec<T>>,
        seen: HashSet<Vec<T>>,
    }

    fn visit<T, A, C>(
        ctx: &mut Ctx<'_, T, A, C>,
        chosen: &mut Vec<T>,
        limit: usize,
        budget: &mut Budget,
    ) -> std::result::Result<(), ()>
    where
        T: Copy + Ord + std::hash::Hash,
        A: Fn(&[T]) -> DirectedNetwork,
        C: Fn((NodeId, NodeId)) -> [T; 2],
    {
        budget.tick()?;
        let mut key = chosen.clone();
        key.sort_unstable();
        if !ctx.seen.insert(key.clone()) {
            return Ok(());
        }
        let modified = (ctx.apply)(chosen);
        let Some(&conflict) = conflicts(&modified, ctx.i).first() else {
            if ctx.best.as_ref().is_none_or(|b| key < *b) {
                ctx.best = Some(key);
            }
            return Ok(());
        };
        if chosen.len() == limit {
            return Ok(());
        }
        for option in (ctx.choices)(conflict) {
            chosen.push(option);
            visit(ctx, chosen, limit, budget)?;
            chosen.pop();
        }
        Ok(())
    }

    let mut ctx = Ctx {
        i,
        apply: &apply,
        choices: &choices,
        best: None,
        seen: HashSet::new(),
    };
    for limit in 1..=upper {
        ctx.seen.clear();
        visit(&mut ctx, &mut Vec::with_capacity(limit), limit, budget)
            .map_err(|()| budget.exceeded(net, i, limit, upper))?;
        if let Some(witness) = ctx.best.take() {
            return Ok(Robustness {
                value: witness.len(),
                witness,
            });
        }
    }
    unreachable!("removing every predecessor arc always resolves all conflicts")
}

/// `ρ*_i`: fewest arc deletions after which `i` is no longer a middleman.
pub fn dual_arc_robustness(net: &DirectedNetwork, i: NodeId) -> Result<Robustness<Arc>> {
    dual_arc_robustness_with(net, i, &RobustnessConfig::default())
}

pub fn dual_arc_robustness_with(
    net: &DirectedNetwork,
    i: NodeId,
    config: &RobustnessConfig,
) -> Result<Robustness<Arc>> {
    require_middleman(net, i)?;
    let upper = net.in_degree(i).min(net.out_degree(i));
    let mut budget = Budget::new("dual arc robustness", config);
    two_way_search(
        net,
        i,
        upper,
        &mut budget,
        |arcs| net.without_arcs(arcs),
        |(a, b)| [(a, i), (i, b)],
    )
}

/// `ψ_i`: fewest node deletions (other than `i`) after which `i` is no
/// longer a middleman.
pub fn node_robustness(net: &DirectedNetwork, i: NodeId) -> Result<Robustness<NodeId>> {
    node_robustness_with(net, i, &RobustnessConfig::default())
}

pub fn node_robustness_with(
    net: &DirectedNetwork,
    i: NodeId,
    config: &RobustnessConfig,
) -> Result<Robustness<NodeId>> {
    require_middleman(net, i)?;
    let upper = net.in_degree(i).min(net.out_degree(i));
    let mut budget = Budget::new("node robustness", config);
    two_way_search(
        net,
        i,
        upper,
        &mut budget,
        |nodes| net.remove_node_set(nodes),
        |(a, b)| [a, b],
    )
}

/// `ρ_i`: fewest new arcs after which `i` is no longer a middleman.
///
/// The witness never touches `i` and is deterministic, but it is not
/// necessarily the lexicographically smallest minimum witness over all
/// possible arcs: tails are drawn from sink components and heads from
/// source components of `D - i`.
pub fn arc_robustness(net: &DirectedNetwork, i: NodeId) -> Result<Robustness<Arc>> {
    arc_robustness_with(net, i, &RobustnessConfig::default())
}

pub fn arc_robustness_with(
    net: &DirectedNetwork,
    i: NodeId,
    config: &RobustnessConfig,
) -> Result<Robustness<Arc>> {
    require_middleman(net, i)?;
    let degree_bound = net.in_degree(i) + net.out_degree(i) - 1;
    let upper = (brokerage_of(net, i) as usize).min(degree_bound);
    let mut search = AdditionSearch::new(net, i, Budget::new("arc robustness", config));

    for limit in 1..=upper {
        search.seen.clear();
        let mut added = Vec::with_capacity(limit);
        match search.visit(&mut added, limit) {
            Err(()) => return Err(search.budget.exceeded(net, i, limit, upper)),
            Ok(true) => {
                added.sort_unstable();
                debug_assert!(!is_middleman(&net.with_arcs_added(&added)?, i));
                return Ok(Robustness {
                    value: added.len(),
                    witness: added,
                });
            }
            Ok(false) => {}
        }
    }
    unreachable!("chaining predecessors into successors always bypasses the middleman")
}

struct AdditionSearch {
    /// `D - i`
    base: DirectedNetwork,
    pred: Vec<NodeId>,
    succ: Vec<NodeId>,
    sinks: NodeSet,
    sources: NodeSet,
    seen: HashSet<Vec<Arc>>,
    budget: Budget,
}

impl AdditionSearch {
    fn new(net: &DirectedNetwork, i: NodeId, budget: Budget) -> Self {
        let base = net.remove_node(i);
        let n = net.node_count();
        let comps = base.strong_components();
        let mut comp_of = vec![0; n];
        for (c, members) in comps.iter().enumerate() {
            for &v in members {
                comp_of[v.0] = c;
            }
        }
        let mut has_out = vec![false; comps.len()];
        let mut has_in = vec![false; comps.len()];
        for (u, v) in base.arcs() {
            if comp_of[u.0] != comp_of[v.0] {
                has_out[comp_of[u.0]] = true;
                has_in[comp_of[v.0]] = true;
            }
        }
        let mut sinks = NodeSet::with_capacity(n);
        let mut sources = NodeSet::with_capacity(n);
        for (c, members) in comps.iter().enumerate() {
            let rep = members[0];
            if rep == i {
                continue;
            }
            if !has_out[c] {
                sinks.insert(rep.0);
            }
            if !has_in[c] {
                sources.insert(rep.0);
            }
        }
        AdditionSearch {
            base,
            pred: net.in_neighbors(i).to_vec(),
            succ: net.out_neighbors(i).to_vec(),
            sinks,
            sources,
            seen: HashSet::new(),
            budget,
        }
    }

    fn visit(&mut self, added: &mut Vec<Arc>, limit: usize) -> std::result::Result<bool, ()> {
        self.budget.tick()?;
        let mut key = added.clone();
        key.sort_unstable();
        if !self.seen.insert(key) {
            return Ok(false);
        }
        let net = self
            .base
            .with_arcs_added(added)
            .expect("search adds only new arcs between distinct nodes");
        let reverse = net.transpose();
        let closed = |g: &DirectedNetwork, v: NodeId| {
            let mut s = successors_avoiding(g, v, None);
            s.insert(v.0);
            s
        };

        let forward: Vec<NodeSet> = self.pred.iter().map(|&a| closed(&net, a)).collect();
        let mut open: Vec<(usize, usize)> = Vec::new();
        for (x, &a) in self.pred.iter().enumerate() {
            for (y, &b) in self.succ.iter().enumerate() {
                if a != b && !forward[x].contains(b.0) {
                    open.push((x, y));
                }
            }
        }
        if open.is_empty() {
            return Ok(true);
        }
        if added.len() == limit {
            return Ok(false);
        }

        let backward: Vec<Option<NodeSet>> = {
            let mut rows = vec![None; self.succ.len()];
            for &(_, y) in &open {
                if rows[y].is_none() {
                    rows[y] = Some(closed(&reverse, self.succ[y]));
                }
            }
            rows
        };
        let tails = |x: usize| -> NodeSet { intersect(&forward[x], &self.sinks) };
        let heads = |y: usize| -> NodeSet {
            intersect(
                backward[y].as_ref().expect("computed for open pairs"),
                &self.sources,
            )
        };

        // Each open pair needs a new arc leaving the part of the network
        // its source already reaches; pairwise disjoint tail sets need
        // distinct arcs. Same for heads.
        let mut xs: Vec<usize> = open.iter().map(|&(x, _)| x).collect();
        xs.dedup();
        let mut ys: Vec<usize> = open.iter().map(|&(_, y)| y).collect();
        ys.sort_unstable();
        ys.dedup();
        let lower = packing(xs.iter().map(|&x| tails(x)).collect())
            .max(packing(ys.iter().map(|&y| heads(y)).collect()));
        if added.len() + lower > limit {
            return Ok(false);
        }

        let n_sinks = self.sinks.count_ones(..);
        let n_sources = self.sources.count_ones(..);
        let (x, y) = open
            .iter()
            .copied()
            .min_by_key(|&(x, y)| {
                (tails(x).count_ones(..) * n_sources).min(heads(y).count_ones(..) * n_sinks)
            })
            .expect("open is non-empty");
        let (t_set, h_set) =
            if tails(x).count_ones(..) * n_sources <= heads(y).count_ones(..) * n_sinks {
                (tails(x), self.sources.clone())
            } else {
                (self.sinks.clone(), heads(y))
            };

        let mut candidates = Vec::new();
        for t in t_set.ones() {
            let reach = closed(&net, NodeId(t));
            candidates.extend(
                h_set
                    .ones()
                    .filter(|&h| !reach.contains(h))
                    .map(|h| (NodeId(t), NodeId(h))),
            );
        }
        for arc in candidates {
            added.push(arc);
            if self.visit(added, limit)? {
                return Ok(true);
            }
            added.pop();
        }
        Ok(false)
    }
}

fn intersect(a: &NodeSet, b: &NodeSet) -> NodeSet {
    let mut s = a.clone();
    s.intersect_with(b);
    s
}

/// Size of a greedy family of pairwise disjoint sets, smallest first.
fn packing(mut sets: Vec<NodeSet>) -> usize {
    sets.sort_by_key(|s| s.count_ones(..));
    let mut used = NodeSet::with_capacity(sets.first().map_or(0, |s| s.len()));
    let mut count = 0;
    for s in sets {
        if s.is_disjoint(&used) {
            used.union_with(&s);
            count += 1;
        }
    }
    count
}

/// All three measures for one middleman.
pub fn robustness_of(
    net: &DirectedNetwork,
    i: NodeId,
    config: &RobustnessConfig,
) -> Result<RobustnessReport> {
    Ok(RobustnessReport {
        target: i,
        rho: arc_robustness_with(net, i, config)?,
        rho_dual: dual_arc_robustness_with(net, i, config)?,
        psi: node_robustness_with(net, i, config)?,
    })
}

/// Robustness of every middleman, in node order.
pub fn robustness_report(net: &DirectedNetwork) -> Result<Vec<RobustnessReport>> {
    robustness_report_with(net, &RobustnessConfig::default())
}

pub fn robustness_report_with(
    net: &DirectedNetwork,
    config: &RobustnessConfig,
) -> Result<Vec<RobustnessReport>> {
    net.nodes()
        .filter(|&i| is_middleman(net, i))
        .map(|i| robustness_of(net, i, config))
        .collect()
}
