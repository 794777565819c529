use thiserror::Error;

use crate::graph::NodeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate node label `{0}`")]
    DuplicateLabel(String),

    #[error("node labels must be non-empty")]
    EmptyLabel,

    #[error("arc endpoint `{0}` is not a known node label")]
    UnknownEndpoint(String),

    #[error("{}self-loop on `{label}` is not allowed", line_prefix(*.line))]
    SelfLoop { label: String, line: Option<usize> },

    #[error("{}duplicate arc `{source_label}` -> `{target_label}`", line_prefix(*.line))]
    DuplicateArc {
        source_label: String,
        target_label: String,
        line: Option<usize>,
    },

    #[error("line {line}: {reason} (at `{token}`)")]
    Parse {
        line: usize,
        token: String,
        reason: String,
    },

    #[error("node id {0} is out of range")]
    InvalidNode(usize),

    #[error("node `{0}` does not exist")]
    UnknownNode(String),

    #[error("a query from node {0} to itself is undefined")]
    SameNode(NodeId),

    #[error("node `{0}` is not an intermediary")]
    NotIntermediary(String),

    #[error("the contesting set contains its own target `{0}`")]
    TargetInSet(String),

    #[error("network is not strongly connected")]
    NotStronglyConnected,

    #[error("node `{0}` is not a middleman")]
    NotMiddleman(String),

    #[error("{measure} did not converge within {iterations} iterations")]
    NonConvergence {
        measure: &'static str,
        iterations: usize,
    },

    #[error(
        "{measure} search for `{target}` exceeded its budget after {explored} candidates \
         (value lies in [{lower_bound}, {upper_bound}])"
    )]
    SearchBudgetExceeded {
        measure: &'static str,
        target: String,
        explored: u64,
        lower_bound: usize,
        upper_bound: usize,
    },

    #[error("dataset `{dataset}` not found at {path}: {hint}")]
    DatasetMissing {
        dataset: String,
        path: String,
        hint: String,
    },

    #[error("dataset `{dataset}` failed validation:\n  {}", .mismatches.join("\n  "))]
    ChecksumMismatch {
        dataset: String,
        mismatches: Vec<String>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn line_prefix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}
