//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! %undirected
//! %node Aldobrandini faction=none
//! Medici Albizzi
//! Pazzi, Salviati
//! ```
//!
//! An arc line holds two labels separated by spaces/tabs or by one comma.
//! `%undirected` asks for symmetrization on load. `%node` declares a node
//! (so isolated nodes can be listed) and optional `key=value` attributes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::DirectedNetwork;

pub type Attributes = BTreeMap<String, String>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub undirected: bool,
    /// Labels in order of first appearance.
    pub nodes: Vec<String>,
    pub arcs: Vec<(String, String)>,
    pub attributes: BTreeMap<String, Attributes>,
}

impl EdgeListDocument {
    /// Builds the network; symmetrized when the document is undirected.
    pub fn to_network(&self) -> Result<DirectedNetwork> {
        let net = DirectedNetwork::build(
            self.nodes.iter().map(String::as_str),
            self.arcs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        Ok(if self.undirected {
            net.symmetrize()
        } else {
            net
        })
    }

    pub fn from_network(net: &DirectedNetwork) -> Self {
        EdgeListDocument {
            undirected: false,
            nodes: net.labels().to_vec(),
            arcs: net
                .arcs()
                .map(|(u, v)| (net.label(u).to_string(), net.label(v).to_string()))
                .collect(),
            attributes: BTreeMap::new(),
        }
    }
}

fn parse_error(line: usize, token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn check_label(line: usize, label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(parse_error(line, label, "empty node label"));
    }
    if label.chars().any(char::is_whitespace) {
        return Err(parse_error(
            line,
            label,
            "labels may not contain whitespace",
        ));
    }
    if label.starts_with('%') {
        return Err(parse_error(line, label, "labels may not start with `%`"));
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListDocument> {
    let mut doc = EdgeListDocument::default();
    let mut known: HashSet<String> = HashSet::new();
    let mut declared: HashSet<String> = HashSet::new();
    let mut arcs_seen: HashMap<(String, String), usize> = HashMap::new();

    let mut note = |doc: &mut EdgeListDocument, label: &str| {
        if known.insert(label.to_string()) {
            doc.nodes.push(label.to_string());
        }
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }

        if let Some(directive) = content.strip_prefix('%') {
            let mut parts = directive.split_whitespace();
            match parts.next() {
                Some("undirected") => {
                    if let Some(extra) = parts.next() {
                        return Err(parse_error(line, extra, "`%undirected` takes no arguments"));
                    }
                    doc.undirected = true;
                }
                Some("node") => {
                    let label = parts
                        .next()
                        .ok_or_else(|| parse_error(line, content, "`%node` needs a label"))?;
                    check_label(line, label)?;
                    if !declared.insert(label.to_string()) {
                        return Err(parse_error(line, label, "node declared twice"));
                    }
                    note(&mut doc, label);
                    let mut attrs = Attributes::new();
                    for pair in parts {
                        let (key, value) = pair
                            .split_once('=')
                            .filter(|(k, _)| !k.is_empty())
                            .ok_or_else(|| parse_error(line, pair, "expected `key=value`"))?;
                        if attrs.insert(key.to_string(), value.to_string()).is_some() {
                            return Err(parse_error(line, key, "attribute given twice"));
                        }
                    }
                    if !attrs.is_empty() {
                        doc.attributes.insert(label.to_string(), attrs);
                    }
                }
                _ => return Err(parse_error(line, content, "unknown directive")),
            }
            continue;
        }

        let (source, target) = if content.contains(',') {
            let fields: Vec<&str> = content.split(',').map(str::trim).collect();
            if fields.len() != 2 {
                return Err(parse_error(line, content, "expected exactly one comma"));
            }
            (fields[0], fields[1])
        } else {
            let fields: Vec<&str> = content.split_whitespace().collect();
            match fields.as_slice() {
                [a, b] => (*a, *b),
                [a] => return Err(parse_error(line, a, "missing target label")),
                _ => return Err(parse_error(line, fields[2], "expected two labels")),
            }
        };
        check_label(line, source)?;
        check_label(line, target)?;
        if source == target {
            return Err(Error::SelfLoop {
                label: source.to_string(),
                line: Some(line),
            });
        }
        let key = (source.to_string(), target.to_string());
        if arcs_seen.insert(key.clone(), line).is_some() {
            return Err(Error::DuplicateArc {
                source_label: key.0,
                target_label: key.1,
                line: Some(line),
            });
        }
        note(&mut doc, source);
        note(&mut doc, target);
        doc.arcs.push(key);
    }
    Ok(doc)
}

/// Inverse of [`parse_edge_list`] up to comments and whitespace.
pub fn emit_edge_list(doc: &EdgeListDocument) -> String {
    let mut out = String::new();
    if doc.undirected {
        out.push_str("%undirected\n");
    }
    for label in &doc.nodes {
        out.push_str("%node ");
        out.push_str(label);
        if let Some(attrs) = doc.attributes.get(label) {
            for (k, v) in attrs {
                let _ = write!(out, " {k}={v}");
            }
        }
        out.push('\n');
    }
    for (a, b) in &doc.arcs {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Reads and builds a network from a file; `undirected` forces
/// symmetrization even without the directive.
pub fn read_network(path: &Path, undirected: bool) -> Result<DirectedNetwork> {
    let text = std::fs::read_to_string(path)?;
    let mut doc = parse_edge_list(&text)?;
    doc.undirected |= undirected;
    doc.to_network()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_text() {
        let doc = parse_edge_list("1 2\n1 3\n2 4\n2 5\n3 5\n4 6\n5 6\n6 7").unwrap();
        let net = doc.to_network().unwrap();
        assert_eq!(net.node_count(), 7);
        assert_eq!(net.arc_count(), 8);
        assert_eq!(net.labels()[6], "7");
    }

    #[test]
    fn comments_commas_and_tabs() {
        let doc = parse_edge_list("# comment\n\na,b\nb\tc  # trailing\n c , d \n").unwrap();
        assert_eq!(doc.arcs.len(), 3);
        assert_eq!(doc.arcs[2], ("c".to_string(), "d".to_string()));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list("a a"),
            Err(Error::SelfLoop { line: Some(1), .. })
        ));
        assert!(matches!(
            parse_edge_list("a b\n\na b"),
            Err(Error::DuplicateArc { line: Some(3), .. })
        ));
        assert!(matches!(
            parse_edge_list("a b c"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("a,b,c"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("a ,"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("%directed"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn directives() {
        let doc = parse_edge_list("%undirected\n%node z side=left\na b\n").unwrap();
        assert!(doc.undirected);
        assert_eq!(doc.nodes, ["z", "a", "b"]);
        assert_eq!(doc.attributes["z"]["side"], "left");
        let net = doc.to_network().unwrap();
        assert_eq!(net.arc_count(), 2);
        assert_eq!(net.degree(net.node("z").unwrap()), 0);
    }

    #[test]
    fn round_trip() {
        let text = "%undirected\n%node q k=v\nx y\ny,q\n";
        let doc = parse_edge_list(text).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&doc)).unwrap(), doc);
    }
}
