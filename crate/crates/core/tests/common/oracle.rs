//! Brute-force reference implementations over adjacency matrices.
//!
//! Nothing here calls into the library beyond reading arcs, so agreement
//! with the library is meaningful. Everything is exponential or cubic and
//! only meant for small networks.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use middlemen::DirectedNetwork;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(net: &DirectedNetwork) -> Matrix {
    let n = net.node_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in net.arcs() {
        m[u.0][v.0] = true;
    }
    m
}

/// Drops every arc touching a removed node.
pub fn without_nodes(m: &Matrix, removed: &[usize]) -> Matrix {
    let mut out = m.clone();
    for &r in removed {
        for k in 0..m.len() {
            out[r][k] = false;
            out[k][r] = false;
        }
    }
    out
}

/// Warshall closure: `c[i][j]` iff a path of length ≥ 1 leads from `i` to `j`.
pub fn closure(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut c = m.clone();
    for k in 0..n {
        for i in 0..n {
            if c[i][k] {
                for j in 0..n {
                    if c[k][j] {
                        c[i][j] = true;
                    }
                }
            }
        }
    }
    c
}

/// Every simple path from `s` to `t`, as node sequences.
pub fn simple_paths(m: &Matrix, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn walk(
        m: &Matrix,
        path: &mut Vec<usize>,
        on: &mut [bool],
        t: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for v in 0..m.len() {
            if m[u][v] && !on[v] {
                on[v] = true;
                path.push(v);
                walk(m, path, on, t, out);
                path.pop();
                on[v] = false;
            }
        }
    }
    let mut on = vec![false; m.len()];
    on[s] = true;
    let mut out = Vec::new();
    walk(m, &mut vec![s], &mut on, t, &mut out);
    out
}

/// Nodes other than `i`, `j` on every `ij`-path (intersection definition).
pub fn ij_middlemen(m: &Matrix, i: usize, j: usize) -> Vec<usize> {
    let paths = simple_paths(m, i, j);
    if paths.is_empty() {
        return Vec::new();
    }
    (0..m.len())
        .filter(|&h| h != i && h != j && paths.iter().all(|p| p.contains(&h)))
        .collect()
}

/// Ordered pairs connected in `m` but not once `i` is removed.
pub fn disconnected_pairs(m: &Matrix, i: usize) -> usize {
    let n = m.len();
    let before = closure(m);
    let after = closure(&without_nodes(m, &[i]));
    let mut count = 0;
    for h in 0..n {
        for j in 0..n {
            if h != i && j != i && h != j && before[h][j] && !after[h][j] {
                count += 1;
            }
        }
    }
    count
}

pub fn is_middleman(m: &Matrix, i: usize) -> bool {
    disconnected_pairs(m, i) > 0
}

pub fn potential_brokerage(m: &Matrix) -> usize {
    let c = closure(m);
    let n = m.len();
    (0..n)
        .map(|i| (0..n).filter(|&j| j != i && c[i][j] && !m[i][j]).count())
        .sum()
}

/// Weak components among nodes with `active[v]`.
pub fn weak_component_count(m: &Matrix, active: &[bool]) -> usize {
    let n = m.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for u in 0..n {
        for v in 0..n {
            if m[u][v] && active[u] && active[v] {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
    }
    let mut roots: Vec<usize> = (0..n)
        .filter(|&v| active[v])
        .map(|v| find(&mut parent, v))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

pub fn is_strong_middleman(m: &Matrix, i: usize) -> bool {
    let n = m.len();
    let active: Vec<bool> = (0..n).map(|v| (0..n).any(|k| m[v][k] || m[k][v])).collect();
    let mut reduced = active.clone();
    reduced[i] = false;
    is_middleman(m, i)
        && weak_component_count(&without_nodes(m, &[i]), &reduced)
            > weak_component_count(m, &active)
}

pub fn is_intermediary(m: &Matrix, i: usize) -> bool {
    let n = m.len();
    let preds = (0..n).filter(|&k| m[k][i]).count();
    let succs = (0..n).filter(|&k| m[i][k]).count();
    let nbrs = (0..n).filter(|&k| m[k][i] || m[i][k]).count();
    preds > 0 && succs > 0 && nbrs >= 2
}

/// `Γ_i`: predecessor/successor pairs with distinct members.
pub fn coverage(m: &Matrix, i: usize) -> Vec<(usize, usize)> {
    let c = closure(m);
    let n = m.len();
    let mut out = Vec::new();
    for h in 0..n {
        for j in 0..n {
            if h != i && j != i && h != j && c[h][i] && c[i][j] {
                out.push((h, j));
            }
        }
    }
    out
}

/// Whether `set` contests `i`, straight from the definition.
pub fn contests(m: &Matrix, i: usize, set: &[usize]) -> bool {
    let reduced = closure(&without_nodes(m, &[i]));
    coverage(m, i).into_iter().all(|(h, j)| {
        set.iter()
            .any(|&c| (h == c || reduced[h][c]) && (j == c || reduced[c][j]))
    })
}

/// Smallest contesting set size by subset enumeration, `None` if none.
pub fn min_contesting_size(m: &Matrix, i: usize) -> Option<usize> {
    let others: Vec<usize> = (0..m.len()).filter(|&v| v != i).collect();
    (1..=others.len()).find(|&k| subsets(&others, k).iter().any(|s| contests(m, i, s)))
}

/// All `k`-subsets of `items`, in lexicographic order.
pub fn subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for idx in start..items.len() {
            if items.len() - idx < k - cur.len() {
                break;
            }
            cur.push(items[idx]);
            rec(items, k, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Betweenness by explicit geodesic enumeration, over ordered pairs.
pub fn betweenness(m: &Matrix) -> Vec<BigRational> {
    let n = m.len();
    let dist = distances(m);
    let mut bc = vec![BigRational::zero(); n];
    for s in 0..n {
        for t in 0..n {
            if s == t || dist[s][t].is_none() {
                continue;
            }
            let geodesics: Vec<Vec<usize>> = simple_paths(m, s, t)
                .into_iter()
                .filter(|p| Some(p.len() - 1) == dist[s][t])
                .collect();
            let total = BigInt::from(geodesics.len());
            for v in 0..n {
                if v == s || v == t {
                    continue;
                }
                let through = geodesics.iter().filter(|p| p.contains(&v)).count();
                if through > 0 {
                    bc[v] += BigRational::new(BigInt::from(through), total.clone());
                }
            }
        }
    }
    bc
}

/// Floyd–Warshall hop distances.
pub fn distances(m: &Matrix) -> Vec<Vec<Option<usize>>> {
    let n = m.len();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if m[i][j] {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Sum of `(geodesic length - 1)` over connected ordered pairs: the number
/// of interior slots that betweenness distributes.
pub fn interior_slots(m: &Matrix) -> BigRational {
    let d = distances(m);
    let mut total = BigRational::zero();
    for (s, row) in d.iter().enumerate() {
        for (t, x) in row.iter().enumerate() {
            if let Some(len) = x {
                if s != t {
                    total += BigRational::from_integer(BigInt::from(len - 1));
                }
            }
        }
    }
    total
}

/// Minimum number of arcs to add, over every possible new arc including
/// arcs touching `i`. Gives up above `cap`.
pub fn arc_addition(m: &Matrix, i: usize, cap: usize) -> Option<usize> {
    let n = m.len();
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !m[u][v])
        .collect();
    (0..=cap).find(|&k| {
        subsets(&candidates, k).iter().any(|s| {
            let mut g = m.clone();
            for &(u, v) in s {
                g[u][v] = true;
            }
            !is_middleman(&g, i)
        })
    })
}

/// Minimum number of existing arcs to delete, over all arcs.
pub fn arc_deletion(m: &Matrix, i: usize) -> usize {
    let n = m.len();
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| m[u][v])
        .collect();
    (0..=arcs.len())
        .find(|&k| {
            subsets(&arcs, k).iter().any(|s| {
                let mut g = m.clone();
                for &(u, v) in s {
                    g[u][v] = false;
                }
                !is_middleman(&g, i)
            })
        })
        .expect("deleting all arcs always works")
}

/// Minimum number of other nodes to delete.
pub fn node_deletion(m: &Matrix, i: usize) -> usize {
    let others: Vec<usize> = (0..m.len()).filter(|&v| v != i).collect();
    (0..=others.len())
        .find(|&k| {
            subsets(&others, k)
                .iter()
                .any(|s| !is_middleman(&without_nodes(m, s), i))
        })
        .expect("deleting all other nodes always works")
}

/// Smallest `k` such that some `k`-subset of arcs from `candidates` works,
/// checking sizes `0..cap` only; `None` when none below `cap` does.
pub fn arc_addition_below(m: &Matrix, i: usize, cap: usize) -> Option<usize> {
    let n = m.len();
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !m[u][v])
        .collect();
    (0..cap).find(|&k| {
        subsets(&candidates, k).iter().any(|s| {
            let mut g = m.clone();
            for &(u, v) in s {
                g[u][v] = true;
            }
            !is_middleman(&g, i)
        })
    })
}
