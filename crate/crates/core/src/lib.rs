//! Middlemen in directed networks.
//!
//! Finds the nodes that lie on every path between some pair of other nodes,
//! decides whether they can be bypassed by other nodes (contestation),
//! measures how much brokerage they hold and how many arcs or nodes must
//! change before they lose it.
//!
//! ```
//! use middlemen::{middleman_set, DirectedNetwork};
//!
//! let net = DirectedNetwork::build(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
//! let report = middleman_set(&net);
//! assert_eq!(report.middlemen(), vec![net.node("b").unwrap()]);
//! ```

pub mod contestation;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod measures;
pub mod middleman;
pub mod reachability;
pub mod robustness;

pub use contestation::{
    contesting_set_with, coverage, extended_coverage, is_contested_by, is_directly_contested,
    minimal_contesting_set, verify_duality, ContestationResult, ContestationStatus, CoverSearch,
    CoverageSet,
};
pub use error::{Error, Result};
pub use graph::{DirectedNetwork, NodeClass, NodeId};
pub use measures::{
    betweenness, brokerage, comparison_centralities, middleman_power, total_potential_brokerage,
    CentralityTable, PowerTable,
};
pub use middleman::{
    ij_middlemen, is_middleman, middleman_set, verify_strong_theorem, MiddlemanKind,
    MiddlemanReport,
};
pub use reachability::{
    has_path, is_strongly_connected, is_weakly_connected, reachability, NodeSet, ReachabilityTable,
};
pub use robustness::{
    arc_robustness, dual_arc_robustness, node_robustness, robustness_report, Robustness,
    RobustnessConfig, RobustnessReport,
};
