#![allow(dead_code)]

pub mod oracle;

use middlemen::{DirectedNetwork, NodeId};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Network on labels `1..=n` (ids `0..n`, id = label - 1).
pub fn numbered(n: usize, arcs: &[(usize, usize)]) -> DirectedNetwork {
    DirectedNetwork::build(
        (1..=n).map(|i| i.to_string()),
        arcs.iter().map(|&(u, v)| (u.to_string(), v.to_string())),
    )
    .unwrap()
}

pub fn figure1() -> DirectedNetwork {
    numbered(
        7,
        &[
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
}

pub fn figure2() -> DirectedNetwork {
    numbered(
        6,
        &[
            (1, 3),
            (1, 4),
            (2, 6),
            (2, 5),
            (2, 4),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
        ],
    )
}

pub fn figure3() -> DirectedNetwork {
    numbered(
        10,
        &[
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 7),
            (4, 8),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
            (7, 9),
            (7, 10),
            (8, 9),
            (8, 10),
        ],
    )
}

/// Two suppliers, one broker `C`, three customers.
pub fn star() -> DirectedNetwork {
    DirectedNetwork::build(
        ["1", "2", "C", "3", "4", "5"],
        [("1", "C"), ("2", "C"), ("C", "3"), ("C", "4"), ("C", "5")],
    )
    .unwrap()
}

pub fn id(net: &DirectedNetwork, label: &str) -> NodeId {
    net.node(label).unwrap()
}

pub fn ids(net: &DirectedNetwork, labels: &[&str]) -> Vec<NodeId> {
    labels.iter().map(|l| id(net, l)).collect()
}

pub fn labels(net: &DirectedNetwork, ids: &[NodeId]) -> Vec<String> {
    ids.iter().map(|&i| net.label(i).to_string()).collect()
}

/// Each ordered pair becomes an arc with probability `density`.
pub fn random_network(rng: &mut ChaCha8Rng, n: usize, density: f64) -> DirectedNetwork {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(density))
        .collect();
    DirectedNetwork::from_index_arcs(n, arcs).unwrap()
}
