//! Full-network analysis documents and their table/JSON/CSV renderings.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DirectedNetwork, NodeId};
use crate::measures::{
    betweenness, closeness, eigenvector_centrality, middleman_power, normalized_betweenness,
    pagerank,
};
use crate::middleman::{middleman_set, MiddlemanKind};
use crate::robustness::{robustness_of, RobustnessConfig, RobustnessReport};
use num_traits::ToPrimitive;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Compute `(ρ, ρ*, ψ)` for every middleman.
    pub robustness: Option<RobustnessConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub nodes: usize,
    pub arcs: usize,
    pub symmetric: bool,
    pub density: f64,
    pub weak_components: usize,
    pub strong_components: usize,
    pub giant_component_size: usize,
    pub giant_component_share: f64,
    /// Longest shortest path among ordered reachable pairs of the giant
    /// weak component.
    pub diameter: Option<usize>,
    pub average_path_length: Option<f64>,
    pub total_potential_brokerage: u64,
    pub middlemen: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobustnessRow {
    pub rho: usize,
    pub rho_dual: usize,
    pub psi: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NodeRow {
    pub id: NodeId,
    pub label: String,
    pub class: String,
    pub kind: MiddlemanKind,
    pub in_degree: usize,
    pub out_degree: usize,
    pub degree: usize,
    pub brokerage: u64,
    pub power: f64,
    /// `ν` as an exact fraction, e.g. `"1/2"`.
    pub power_exact: String,
    pub betweenness: f64,
    pub betweenness_normalized: f64,
    pub closeness: f64,
    pub eigenvector: Option<f64>,
    pub pagerank: f64,
    pub robustness: Option<RobustnessRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RobustnessEntry {
    pub node: String,
    pub rho: usize,
    pub rho_witness: Vec<(String, String)>,
    pub rho_dual: usize,
    pub rho_dual_witness: Vec<(String, String)>,
    pub psi: usize,
    pub psi_witness: Vec<String>,
}

impl RobustnessEntry {
    pub fn new(net: &DirectedNetwork, r: &RobustnessReport) -> Self {
        let arcs = |w: &[(NodeId, NodeId)]| {
            w.iter()
                .map(|&(u, v)| (net.label(u).to_string(), net.label(v).to_string()))
                .collect()
        };
        RobustnessEntry {
            node: net.label(r.target).to_string(),
            rho: r.rho.value,
            rho_witness: arcs(&r.rho.witness),
            rho_dual: r.rho_dual.value,
            rho_dual_witness: arcs(&r.rho_dual.witness),
            psi: r.psi.value,
            psi_witness: r
                .psi
                .witness
                .iter()
                .map(|&v| net.label(v).to_string())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisDocument {
    pub summary: Summary,
    pub nodes: Vec<NodeRow>,
    /// Middleman labels in node order.
    pub middlemen: Vec<String>,
    pub robustness: Vec<RobustnessEntry>,
    /// Non-fatal problems, such as a centrality that failed to converge.
    pub warnings: Vec<String>,
}

pub fn analyze(net: &DirectedNetwork, options: &AnalysisOptions) -> Result<AnalysisDocument> {
    let report = middleman_set(net);
    let power = middleman_power(net);
    let bc = betweenness(net);
    let bc_norm = normalized_betweenness(net, &bc);
    let close = closeness(net);
    let mut warnings = Vec::new();
    let eigen = match eigenvector_centrality(net) {
        Ok(v) => Some(v),
        Err(e @ Error::NonConvergence { .. }) => {
            warnings.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let pr = pagerank(net)?;

    let mut robustness = Vec::new();
    let mut rows_robust = vec![None; net.node_count()];
    if let Some(config) = &options.robustness {
        for i in report.middlemen() {
            let r = robustness_of(net, i, config)?;
            rows_robust[i.0] = Some(RobustnessRow {
                rho: r.rho.value,
                rho_dual: r.rho_dual.value,
                psi: r.psi.value,
            });
            robustness.push(RobustnessEntry::new(net, &r));
        }
    }

    let nodes = net
        .nodes()
        .map(|i| {
            let nu = power.power(i);
            NodeRow {
                id: i,
                label: net.label(i).to_string(),
                class: net.classify_node(i).as_str().to_string(),
                kind: report.kind(i),
                in_degree: net.in_degree(i),
                out_degree: net.out_degree(i),
                degree: net.degree(i),
                brokerage: power.brokerage(i),
                power: power.power_f64(i),
                power_exact: format!("{}/{}", nu.numer(), nu.denom()),
                betweenness: bc[i.0].to_f64().unwrap_or(f64::NAN),
                betweenness_normalized: bc_norm[i.0].to_f64().unwrap_or(f64::NAN),
                closeness: close[i.0],
                eigenvector: eigen.as_ref().map(|e| e[i.0]),
                pagerank: pr[i.0],
                robustness: rows_robust[i.0].clone(),
            }
        })
        .collect();

    let middlemen: Vec<String> = report
        .middlemen()
        .into_iter()
        .map(|i| net.label(i).to_string())
        .collect();
    Ok(AnalysisDocument {
        summary: summarize(net, power.total_potential(), middlemen.len()),
        nodes,
        middlemen,
        robustness,
        warnings,
    })
}

fn summarize(net: &DirectedNetwork, total_potential: u64, middlemen: usize) -> Summary {
    let n = net.node_count();
    let weak = net.weak_components();
    // largest component, lowest first node on ties
    let giant: Vec<NodeId> = weak
        .iter()
        .fold(None::<&Vec<NodeId>>, |best, c| match best {
            Some(b) if b.len() >= c.len() => Some(b),
            _ => Some(c),
        })
        .cloned()
        .unwrap_or_default();
    let (diameter, apl) = path_statistics(net, &giant);
    Summary {
        nodes: n,
        arcs: net.arc_count(),
        symmetric: net.is_symmetric(),
        density: if n > 1 {
            net.arc_count() as f64 / (n * (n - 1)) as f64
        } else {
            0.0
        },
        weak_components: weak.len(),
        strong_components: net.strong_components().len(),
        giant_component_size: giant.len(),
        giant_component_share: if n > 0 {
            giant.len() as f64 / n as f64
        } else {
            0.0
        },
        diameter,
        average_path_length: apl,
        total_potential_brokerage: total_potential,
        middlemen,
    }
}

/// Diameter and mean distance over ordered pairs `(u, v)` of `component`
/// with `v` reachable from `u`.
fn path_statistics(net: &DirectedNetwork, component: &[NodeId]) -> (Option<usize>, Option<f64>) {
    let n = net.node_count();
    let (mut pairs, mut total, mut longest) = (0usize, 0usize, 0usize);
    for &s in component {
        let mut dist = vec![usize::MAX; n];
        dist[s.0] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in net.out_neighbors(u) {
                if dist[v.0] == usize::MAX {
                    dist[v.0] = dist[u.0] + 1;
                    pairs += 1;
                    total += dist[v.0];
                    longest = longest.max(dist[v.0]);
                    queue.push_back(v);
                }
            }
        }
    }
    if pairs == 0 {
        (None, None)
    } else {
        (Some(longest), Some(total as f64 / pairs as f64))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

impl ReportFormat {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "table" => Some(ReportFormat::Table),
            "json" => Some(ReportFormat::Json),
            "csv" => Some(ReportFormat::Csv),
            _ => None,
        }
    }
}

pub const CSV_HEADER: [&str; 15] = [
    "node",
    "label",
    "class",
    "kind",
    "in_degree",
    "out_degree",
    "brokerage",
    "power",
    "betweenness",
    "closeness",
    "eigenvector",
    "pagerank",
    "rho",
    "rho_dual",
    "psi",
];

/// Plain rendering, no terminal styling.
pub fn emit_report(doc: &AnalysisDocument, format: ReportFormat) -> String {
    emit_report_styled(doc, format, false)
}

/// `bold` highlights middleman rows in the table format.
pub fn emit_report_styled(doc: &AnalysisDocument, format: ReportFormat, bold: bool) -> String {
    match format {
        ReportFormat::Table => render_table(doc, bold),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => render_csv(doc),
    }
}

fn fixed(x: f64) -> String {
    format!("{x:.3}")
}

fn render_csv(doc: &AnalysisDocument) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in &doc.nodes {
        let rob = |f: fn(&RobustnessRow) -> usize| {
            r.robustness
                .as_ref()
                .map(|x| f(x).to_string())
                .unwrap_or_default()
        };
        w.write_record([
            r.id.to_string(),
            r.label.clone(),
            r.class.clone(),
            r.kind.as_str().to_string(),
            r.in_degree.to_string(),
            r.out_degree.to_string(),
            r.brokerage.to_string(),
            r.power.to_string(),
            r.betweenness_normalized.to_string(),
            r.closeness.to_string(),
            r.eigenvector.map(|e| e.to_string()).unwrap_or_default(),
            r.pagerank.to_string(),
            rob(|x| x.rho),
            rob(|x| x.rho_dual),
            rob(|x| x.psi),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn render_table(doc: &AnalysisDocument, bold: bool) -> String {
    let s = &doc.summary;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "nodes {}  arcs {}  density {:.3}  weak components {}  strong components {}",
        s.nodes, s.arcs, s.density, s.weak_components, s.strong_components
    );
    let _ = write!(
        out,
        "giant component {} ({:.1}%)",
        s.giant_component_size,
        100.0 * s.giant_component_share
    );
    if let (Some(d), Some(apl)) = (s.diameter, s.average_path_length) {
        let _ = write!(out, "  diameter {d}  average path length {apl:.3}");
    }
    out.push('\n');
    if doc.middlemen.is_empty() {
        out.push_str("no middlemen\n");
    } else {
        let marked: Vec<String> = doc
            .nodes
            .iter()
            .filter(|r| r.kind.is_middleman())
            .map(|r| format!("{}{}", r.label, r.kind.marker()))
            .collect();
        let _ = writeln!(out, "middlemen: {}", marked.join(", "));
    }
    for w in &doc.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if doc.nodes.is_empty() {
        return out;
    }

    let with_robustness = doc.nodes.iter().any(|r| r.robustness.is_some());
    let mut header = vec![
        "node", "class", "in", "out", "b", "nu", "BC", "close", "eigen", "pagerank",
    ];
    if with_robustness {
        header.extend(["rho", "rho*", "psi"]);
    }
    let rows: Vec<Vec<String>> = doc
        .nodes
        .iter()
        .map(|r| {
            let mut row = vec![
                r.label.clone(),
                r.class.clone(),
                r.in_degree.to_string(),
                r.out_degree.to_string(),
                r.brokerage.to_string(),
                format!("{}{}", fixed(r.power), r.kind.marker()),
                fixed(r.betweenness_normalized),
                fixed(r.closeness),
                r.eigenvector.map(fixed).unwrap_or_else(|| "-".into()),
                fixed(r.pagerank),
            ];
            if with_robustness {
                match &r.robustness {
                    Some(x) => row.extend([x.rho, x.rho_dual, x.psi].map(|v| v.to_string())),
                    None => row.extend(["-", "-", "-"].map(String::from)),
                }
            }
            row
        })
        .collect();

    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| -> String {
        let mut l = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                l.push_str("  ");
            }
            // label and class left-aligned, numbers right-aligned; nu keeps
            // its star markers in a trailing slot
            let pad = widths[c].saturating_sub(cell.chars().count());
            if c < 2 || c == 5 {
                l.push_str(cell);
                l.push_str(&" ".repeat(pad));
            } else {
                l.push_str(&" ".repeat(pad));
                l.push_str(cell);
            }
        }
        l.trim_end().to_string()
    };
    out.push('\n');
    let head: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    let _ = writeln!(out, "{}", line(&head));
    for (r, cells) in doc.nodes.iter().zip(&rows) {
        let text = line(cells);
        if bold && r.kind.is_middleman() {
            let _ = writeln!(out, "\x1b[1m{text}\x1b[0m");
        } else {
            let _ = writeln!(out, "{text}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::edgelist::parse_edge_list;

    fn figure1() -> DirectedNetwork {
        parse_edge_list("1 2\n1 3\n2 4\n2 5\n3 5\n4 6\n5 6\n6 7")
            .unwrap()
            .to_network()
            .unwrap()
    }

    #[test]
    fn table_marks_middlemen() {
        let doc = analyze(&figure1(), &AnalysisOptions::default()).unwrap();
        let text = emit_report(&doc, ReportFormat::Table);
        assert!(text.contains("middlemen: 2*, 5*, 6**"));
        let six = text.lines().find(|l| l.starts_with("6 ")).unwrap();
        assert!(six.contains("0.500**"), "{six}");
    }

    #[test]
    fn summary_statistics() {
        let doc = analyze(&figure1(), &AnalysisOptions::default()).unwrap();
        let s = &doc.summary;
        assert_eq!(
            (s.nodes, s.arcs, s.weak_components, s.strong_components),
            (7, 8, 1, 7)
        );
        assert_eq!(s.diameter, Some(4));
        assert_eq!(s.total_potential_brokerage, 10);
        assert!((s.density - 8.0 / 42.0).abs() < 1e-12);
    }

    #[test]
    fn empty_network_is_summary_only() {
        let net = DirectedNetwork::from_index_arcs(0, []).unwrap();
        let doc = analyze(&net, &AnalysisOptions::default()).unwrap();
        assert!(doc.nodes.is_empty());
        let text = emit_report(&doc, ReportFormat::Table);
        assert!(text.contains("no middlemen"));
        assert_eq!(emit_report(&doc, ReportFormat::Csv).lines().count(), 1);
    }

    #[test]
    fn json_keys() {
        let doc = analyze(&figure1(), &AnalysisOptions::default()).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&emit_report(&doc, ReportFormat::Json)).unwrap();
        for key in ["nodes", "summary", "middlemen", "robustness"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["middlemen"], serde_json::json!(["2", "5", "6"]));
    }

    #[test]
    fn csv_header_and_robustness() {
        let options = AnalysisOptions {
            robustness: Some(RobustnessConfig::default()),
        };
        let doc = analyze(&figure1(), &options).unwrap();
        let text = emit_report(&doc, ReportFormat::Csv);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let six = lines.find(|l| l.starts_with("5,6,")).unwrap();
        assert!(six.ends_with(",2,1,1"), "{six}");
    }
}
