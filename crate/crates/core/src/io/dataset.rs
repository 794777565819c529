//! Loaders for the two case-study networks.
//!
//! The data files are not bundled. They are looked up on disk and checked
//! against published degree tables before use, so a mislabelled or
//! transposed file is rejected instead of silently analysed.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::DirectedNetwork;
use crate::io::edgelist::read_network;
use crate::reachability::NodeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dataset {
    /// Advice network among 21 managers, arcs pointing from advice seeker
    /// to advisor; labels `1` to `21`.
    KrackhardtAdvice,
    /// Marriages among 32 Florentine houses, labelled by house name.
    FlorentineMarriage,
}

/// (label, in-degree, out-degree)
const KRACKHARDT_DEGREES: [(&str, usize, usize); 21] = [
    ("1", 12, 4),
    ("2", 18, 2),
    ("3", 3, 9),
    ("4", 6, 7),
    ("5", 3, 10),
    ("6", 0, 1),
    ("7", 11, 6),
    ("8", 1, 7),
    ("9", 4, 9),
    ("10", 8, 5),
    ("11", 9, 3),
    ("12", 3, 1),
    ("13", 0, 6),
    ("14", 10, 4),
    ("15", 3, 9),
    ("16", 0, 4),
    ("17", 0, 5),
    ("18", 15, 12),
    ("19", 2, 10),
    ("20", 6, 7),
    ("21", 15, 8),
];

/// (house, in-degree, out-degree)
const FLORENTINE_DEGREES: [(&str, usize, usize); 32] = [
    ("Albizzi", 3, 3),
    ("Aldobrandini", 0, 0),
    ("Altoviti", 1, 0),
    ("Baroncelli", 0, 0),
    ("Benizzi", 0, 1),
    ("Bisheri", 1, 0),
    ("Castellani", 1, 3),
    ("C-Donati", 1, 0),
    ("Da Uzzano", 1, 1),
    ("Dall'Antella", 0, 1),
    ("Davanzati", 0, 1),
    ("Della Casa", 1, 1),
    ("Dietisalvi", 1, 0),
    ("Fioravanti", 0, 1),
    ("Ginori", 2, 1),
    ("Guadagni", 1, 1),
    ("Guicciardini", 0, 1),
    ("Lamberteschi", 0, 0),
    ("Medici", 2, 3),
    ("Orlandini", 1, 0),
    ("Panciatichi", 2, 1),
    ("Pazzi", 4, 3),
    ("Pepi", 1, 0),
    ("Peruzzi", 2, 4),
    ("Rondinelli", 1, 1),
    ("Rucellai", 1, 0),
    ("Scambrilla", 1, 0),
    ("Solosmei", 0, 0),
    ("Strozzi", 2, 3),
    ("Tornabuoni", 1, 0),
    ("Valori", 0, 1),
    ("Velluti", 0, 0),
];

const FLORENTINE_ARCS: usize = 31;
const FLORENTINE_WEAK_COMPONENTS: usize = 9;
const FLORENTINE_GIANT: usize = 20;

impl Dataset {
    pub const ALL: [Dataset; 2] = [Dataset::KrackhardtAdvice, Dataset::FlorentineMarriage];

    pub fn name(self) -> &'static str {
        match self {
            Dataset::KrackhardtAdvice => "krackhardt-advice",
            Dataset::FlorentineMarriage => "florentine-marriage",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|d| d.name() == name)
    }

    pub fn file_name(self) -> String {
        format!("{}.edges", self.name())
    }

    /// Environment variable naming the file directly.
    pub fn env_var(self) -> &'static str {
        match self {
            Dataset::KrackhardtAdvice => "MIDDLEMEN_KRACKHARDT",
            Dataset::FlorentineMarriage => "MIDDLEMEN_FLORENTINE",
        }
    }

    /// Expected `(in, out)` degree per label.
    pub fn degree_table(self) -> Vec<(&'static str, usize, usize)> {
        match self {
            Dataset::KrackhardtAdvice => KRACKHARDT_DEGREES.to_vec(),
            Dataset::FlorentineMarriage => FLORENTINE_DEGREES.to_vec(),
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Environment variable naming a directory holding both files.
pub const DATA_DIR_ENV: &str = "MIDDLEMEN_DATA_DIR";

/// Where the dataset is expected: the per-dataset variable, then
/// `data_dir`, then `MIDDLEMEN_DATA_DIR`, then `./data`.
pub fn dataset_path(dataset: Dataset, data_dir: Option<&Path>) -> PathBuf {
    if let Some(p) = std::env::var_os(dataset.env_var()) {
        return PathBuf::from(p);
    }
    let dir = data_dir
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(DATA_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"));
    dir.join(dataset.file_name())
}

/// Loads and validates a dataset file.
pub fn load_dataset(dataset: Dataset, path: &Path) -> Result<DirectedNetwork> {
    if !path.is_file() {
        return Err(Error::DatasetMissing {
            dataset: dataset.name().to_string(),
            path: path.display().to_string(),
            hint: format!(
                "save the network as an edge list (one `SOURCE TARGET` arc per line, \
                 `%node LABEL` for isolated nodes) at this path, or point {} or {} at it",
                dataset.env_var(),
                DATA_DIR_ENV
            ),
        });
    }
    let net = read_network(path, false)?;
    validate_dataset(dataset, &net)?;
    Ok(net)
}

/// Lowercase, with spaces, underscores, hyphens and apostrophes dropped.
fn normalize(label: &str) -> String {
    label
        .chars()
        .filter(|c| !matches!(c, ' ' | '_' | '-' | '\'' | '’'))
        .flat_map(char::to_lowercase)
        .collect()
}

/// Checks node labels and per-node degrees (plus, for the marriage network,
/// arc and component counts). Every divergence is listed.
pub fn validate_dataset(dataset: Dataset, net: &DirectedNetwork) -> Result<()> {
    let table = dataset.degree_table();
    let mut problems = Vec::new();

    let mut matched = NodeSet::with_capacity(net.node_count());
    for (label, want_in, want_out) in &table {
        let key = normalize(label);
        let found = net.nodes().find(|&i| normalize(net.label(i)) == key);
        match found {
            None => problems.push(format!("node `{label}` missing")),
            Some(i) => {
                matched.insert(i.0);
                let (din, dout) = (net.in_degree(i), net.out_degree(i));
                if (din, dout) != (*want_in, *want_out) {
                    problems.push(format!(
                        "node `{label}`: in/out degree {din}/{dout}, expected {want_in}/{want_out}"
                    ));
                }
            }
        }
    }
    for i in net.nodes().filter(|i| !matched.contains(i.0)) {
        problems.push(format!("unexpected node `{}`", net.label(i)));
    }

    if dataset == Dataset::FlorentineMarriage {
        if net.arc_count() != FLORENTINE_ARCS {
            problems.push(format!(
                "{} arcs, expected {FLORENTINE_ARCS}",
                net.arc_count()
            ));
        }
        let comps = net.weak_components();
        if comps.len() != FLORENTINE_WEAK_COMPONENTS {
            problems.push(format!(
                "{} weak components, expected {FLORENTINE_WEAK_COMPONENTS}",
                comps.len()
            ));
        }
        let giant = comps.iter().map(Vec::len).max().unwrap_or(0);
        if giant != FLORENTINE_GIANT {
            problems.push(format!(
                "largest component has {giant} nodes, expected {FLORENTINE_GIANT}"
            ));
        }
    }

    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::ChecksumMismatch {
            dataset: dataset.name().to_string(),
            mismatches: problems,
        })
    }
}
