//! Small reference networks with known closed-form results.

use crate::graph::DirectedNetwork;

fn labelled(n: usize, arcs: Vec<(usize, usize)>) -> DirectedNetwork {
    DirectedNetwork::build(
        (1..=n).map(|i| i.to_string()),
        arcs.into_iter()
            .map(|(u, v)| ((u + 1).to_string(), (v + 1).to_string())),
    )
    .expect("generated arcs are valid")
}

/// `1 -> 2 -> ... -> n -> 1`.
pub fn directed_cycle(n: usize) -> DirectedNetwork {
    labelled(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// Node `1` linked both ways to every other node.
pub fn undirected_star(n: usize) -> DirectedNetwork {
    labelled(n, (1..n).flat_map(|i| [(0, i), (i, 0)]).collect())
}

/// Path `1 - 2 - ... - n` with every link reciprocated.
pub fn undirected_line(n: usize) -> DirectedNetwork {
    labelled(n, (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]).collect())
}

/// Every ordered pair of distinct nodes is an arc.
pub fn complete(n: usize) -> DirectedNetwork {
    labelled(
        n,
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect(),
    )
}
