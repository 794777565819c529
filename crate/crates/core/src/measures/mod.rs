//! Brokerage, middleman power and the comparison centralities.

mod centrality;
mod power;

pub use centrality::{
    betweenness, closeness, comparison_centralities, eigenvector_centrality,
    normalized_betweenness, pagerank, CentralityTable, EIGENVECTOR_TOLERANCE, PAGERANK_DAMPING,
    PAGERANK_TOLERANCE,
};
pub use power::{brokerage, brokerage_of, middleman_power, total_potential_brokerage, PowerTable};
