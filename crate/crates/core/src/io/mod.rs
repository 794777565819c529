//! Edge-list files, case-study datasets and analysis reports.

pub mod dataset;
pub mod edgelist;
pub mod report;

pub use dataset::{dataset_path, load_dataset, validate_dataset, Dataset};
pub use edgelist::{emit_edge_list, parse_edge_list, read_network, EdgeListDocument};
pub use report::{
    analyze, emit_report, emit_report_styled, AnalysisDocument, AnalysisOptions, ReportFormat,
};
