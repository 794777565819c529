use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{DirectedNetwork, NodeId};

pub const EIGENVECTOR_TOLERANCE: f64 = 1e-10;
pub const PAGERANK_DAMPING: f64 = 0.85;
pub const PAGERANK_TOLERANCE: f64 = 1e-12;
const MAX_ITERATIONS: usize = 100_000;

/// Standard centralities reported next to middleman power.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityTable {
    pub in_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
    /// Distinct neighbours, ignoring direction.
    pub degree: Vec<usize>,
    pub betweenness: Vec<BigRational>,
    pub betweenness_normalized: Vec<BigRational>,
    pub closeness: Vec<f64>,
    pub eigenvector: Vec<f64>,
    pub pagerank: Vec<f64>,
}

impl CentralityTable {
    pub fn betweenness_f64(&self, i: NodeId) -> f64 {
        self.betweenness[i.0].to_f64().unwrap_or(f64::NAN)
    }

    pub fn betweenness_normalized_f64(&self, i: NodeId) -> f64 {
        self.betweenness_normalized[i.0]
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

pub fn comparison_centralities(net: &DirectedNetwork) -> Result<CentralityTable> {
    let betweenness = betweenness(net);
    Ok(CentralityTable {
        in_degree: net.nodes().map(|i| net.in_degree(i)).collect(),
        out_degree: net.nodes().map(|i| net.out_degree(i)).collect(),
        degree: net.nodes().map(|i| net.degree(i)).collect(),
        betweenness_normalized: normalized_betweenness(net, &betweenness),
        betweenness,
        closeness: closeness(net),
        eigenvector: eigenvector_centrality(net)?,
        pagerank: pagerank(net)?,
    })
}

/// Raw betweenness over ordered pairs, exact.
///
/// Brandes' accumulation with rational dependencies; geodesic counts can
/// grow exponentially, hence big integers.
pub fn betweenness(net: &DirectedNetwork) -> Vec<BigRational> {
    let n = net.node_count();
    let mut bc = vec![BigRational::zero(); n];
    for s in net.nodes() {
        let mut order = Vec::with_capacity(n);
        let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        let mut sigma = vec![BigInt::zero(); n];
        let mut dist = vec![usize::MAX; n];
        sigma[s.0] = BigInt::one();
        dist[s.0] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in net.out_neighbors(v) {
                if dist[w.0] == usize::MAX {
                    dist[w.0] = dist[v.0] + 1;
                    queue.push_back(w);
                }
                if dist[w.0] == dist[v.0] + 1 {
                    let add = sigma[v.0].clone();
                    sigma[w.0] += add;
                    preds[w.0].push(v);
                }
            }
        }
        let mut delta = vec![BigRational::zero(); n];
        for &w in order.iter().rev() {
            let share =
                (BigRational::one() + &delta[w.0]) / BigRational::from_integer(sigma[w.0].clone());
            for &v in &preds[w.0] {
                let gain = &share * BigRational::from_integer(sigma[v.0].clone());
                delta[v.0] += gain;
            }
            if w != s {
                bc[w.0] += &delta[w.0];
            }
        }
    }
    bc
}

/// Divides by `(n-1)(n-2)`, or by `(n-1)(n-2)/2` when every arc is
/// reciprocated. Raw values always count ordered pairs, so on symmetric
/// networks the result can exceed 1.
pub fn normalized_betweenness(net: &DirectedNetwork, raw: &[BigRational]) -> Vec<BigRational> {
    let n = net.node_count();
    if n < 3 {
        return vec![BigRational::zero(); n];
    }
    let mut pairs = BigInt::from((n - 1) * (n - 2));
    if net.is_symmetric() {
        pairs /= 2;
    }
    let pairs = BigRational::from_integer(pairs);
    raw.iter().map(|b| b / &pairs).collect()
}

/// `r / Σ dist(i, j)` over the `r` nodes reachable from `i`; 0 if none.
pub fn closeness(net: &DirectedNetwork) -> Vec<f64> {
    let n = net.node_count();
    net.nodes()
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s.0] = 0;
            let mut queue = VecDeque::from([s]);
            let (mut reached, mut total) = (0usize, 0usize);
            while let Some(v) = queue.pop_front() {
                for &w in net.out_neighbors(v) {
                    if dist[w.0] == usize::MAX {
                        dist[w.0] = dist[v.0] + 1;
                        reached += 1;
                        total += dist[w.0];
                        queue.push_back(w);
                    }
                }
            }
            if total == 0 {
                0.0
            } else {
                reached as f64 / total as f64
            }
        })
        .collect()
}

/// Principal eigenvector of the in-arc adjacency (`x_i ∝ Σ_{j→i} x_j`),
/// scaled to maximum 1.
///
/// Iterates `A^T + I` so that periodic networks such as bipartite ones
/// still converge. Networks without cycles have spectral radius 0 and get
/// all zeros.
pub fn eigenvector_centrality(net: &DirectedNetwork) -> Result<Vec<f64>> {
    let n = net.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let step = |x: &[f64], shift: f64| -> Vec<f64> {
        net.nodes()
            .map(|i| shift * x[i.0] + net.in_neighbors(i).iter().map(|j| x[j.0]).sum::<f64>())
            .collect()
    };

    let mut probe = vec![1.0; n];
    for _ in 0..n {
        probe = step(&probe, 0.0);
    }
    if probe.iter().all(|&v| v == 0.0) {
        return Ok(vec![0.0; n]);
    }

    let mut x = vec![1.0; n];
    for _ in 0..MAX_ITERATIONS {
        let mut next = step(&x, 1.0);
        let max = next.iter().cloned().fold(0.0, f64::max);
        next.iter_mut().for_each(|v| *v /= max);
        let change = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = next;
        if change < EIGENVECTOR_TOLERANCE {
            return Ok(x);
        }
    }
    Err(Error::NonConvergence {
        measure: "eigenvector centrality",
        iterations: MAX_ITERATIONS,
    })
}

/// PageRank with damping 0.85; rank of dangling nodes is spread uniformly.
pub fn pagerank(net: &DirectedNetwork) -> Result<Vec<f64>> {
    let n = net.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let d = PAGERANK_DAMPING;
    let uniform = 1.0 / n as f64;
    let mut rank = vec![uniform; n];
    for _ in 0..MAX_ITERATIONS {
        let dangling: f64 = net
            .nodes()
            .filter(|&i| net.out_degree(i) == 0)
            .map(|i| rank[i.0])
            .sum();
        let base = (1.0 - d) * uniform + d * dangling * uniform;
        let next: Vec<f64> = net
            .nodes()
            .map(|i| {
                base + d * net
                    .in_neighbors(i)
                    .iter()
                    .map(|j| rank[j.0] / net.out_degree(*j) as f64)
                    .sum::<f64>()
            })
            .collect();
        let change: f64 = next.iter().zip(&rank).map(|(a, b)| (a - b).abs()).sum();
        rank = next;
        if change < PAGERANK_TOLERANCE {
            return Ok(rank);
        }
    }
    Err(Error::NonConvergence {
        measure: "pagerank",
        iterations: MAX_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure3() -> DirectedNetwork {
        DirectedNetwork::build(
            (1..=10).map(|i| i.to_string()),
            [
                ("1", "4"),
                ("2", "5"),
                ("3", "6"),
                ("4", "7"),
                ("4", "8"),
                ("5", "7"),
                ("5", "8"),
                ("6", "7"),
                ("6", "8"),
                ("7", "9"),
                ("7", "10"),
                ("8", "9"),
                ("8", "10"),
            ],
        )
        .unwrap()
    }

    fn rational(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn directed_betweenness() {
        let bc = betweenness(&figure3());
        for v in &bc[3..6] {
            assert_eq!(*v, rational(4, 1));
        }
        assert_eq!(bc[6], rational(6, 1));
        assert_eq!(bc[7], rational(6, 1));
        assert!(bc[0].is_zero() && bc[9].is_zero());
    }

    #[test]
    fn undirected_betweenness() {
        let net = figure3().symmetrize();
        let bc = betweenness(&net);
        assert_eq!(bc[3], rational(82, 5));
        assert_eq!(bc[6], rational(25, 1));
        let norm = normalized_betweenness(&net, &bc);
        assert_eq!(norm[6], rational(25, 36));
    }

    #[test]
    fn undirected_closeness() {
        let c = closeness(&figure3().symmetrize());
        assert!((c[0] - 0.36).abs() < 1e-12);
        assert!((c[6] - 9.0 / 13.0).abs() < 1e-12);
    }

    #[test]
    fn cycle_is_uniform() {
        let n = 5;
        let net = DirectedNetwork::from_index_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let t = comparison_centralities(&net).unwrap();
        for i in 1..n {
            assert_eq!(t.betweenness[i], t.betweenness[0]);
            assert!((t.closeness[i] - t.closeness[0]).abs() < 1e-12);
            assert!((t.eigenvector[i] - 1.0).abs() < 1e-9);
            assert!((t.pagerank[i] - 0.2).abs() < 1e-9);
        }
    }

    #[test]
    fn acyclic_eigenvector_is_zero() {
        let e = eigenvector_centrality(&figure3()).unwrap();
        assert!(e.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn bipartite_eigenvector_converges() {
        let star = DirectedNetwork::from_index_arcs(4, [(0, 1), (0, 2), (0, 3)])
            .unwrap()
            .symmetrize();
        let e = eigenvector_centrality(&star).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-9);
        assert!((e[1] - 1.0 / 3f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn pagerank_sums_to_one() {
        let pr = pagerank(&figure3()).unwrap();
        assert!((pr.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        assert!(pr.iter().all(|&v| v > 0.0));
    }
}
