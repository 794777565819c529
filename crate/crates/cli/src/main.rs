use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use middlemen::io::report::RobustnessEntry;
use middlemen::io::{
    analyze, dataset_path, emit_report_styled, load_dataset, read_network, AnalysisOptions,
    Dataset, ReportFormat,
};
use middlemen::{
    contesting_set_with, middleman_set, robustness::robustness_of, ContestationResult,
    ContestationStatus, CoverSearch, DirectedNetwork, Error, MiddlemanKind, NodeId,
    RobustnessConfig,
};
use serde_json::json;

/// Find middlemen in directed networks and measure their power.
#[derive(Parser)]
#[command(name = "middlemen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary statistics, middlemen, power and centralities for every node.
    Analyze {
        /// Edge-list file (omit with --dataset).
        #[arg(value_name = "INPUT")]
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
        /// Also compute (rho, rho*, psi) for every middleman.
        #[arg(long)]
        robustness: bool,
        /// Maximum search states per measure and node
        #[arg(long, default_value_t = RobustnessConfig::default().budget, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Whether a node can be bypassed, and by which smallest node set.
    Contest {
        /// [INPUT] NODE
        #[arg(value_name = "ARGS", required = true)]
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
        /// Use a greedy cover and report its distance from the lower bound.
        #[arg(long)]
        greedy: bool,
    },
    /// Arc-addition, arc-deletion and node-deletion robustness of middlemen.
    Robustness {
        /// [INPUT] [NODE]
        #[arg(value_name = "ARGS")]
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
        /// Every middleman instead of a single node.
        #[arg(long)]
        all: bool,
        /// Maximum search states per measure and node.
        #[arg(long, default_value_t = RobustnessConfig::default().budget, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
}

#[derive(Args)]
struct Common {
    /// Treat every arc as reciprocated.
    #[arg(long)]
    undirected: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Load a case-study dataset instead of an input file.
    #[arg(long, value_enum)]
    dataset: Option<DatasetArg>,
    /// Directory holding dataset files.
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DatasetArg {
    KrackhardtAdvice,
    FlorentineMarriage,
}

impl From<DatasetArg> for Dataset {
    fn from(d: DatasetArg) -> Self {
        match d {
            DatasetArg::KrackhardtAdvice => Dataset::KrackhardtAdvice,
            DatasetArg::FlorentineMarriage => Dataset::FlorentineMarriage,
        }
    }
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => ReportFormat::Table,
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchBudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Splits positionals into the network and the remaining arguments.
fn load<'a>(
    common: &Common,
    args: &'a [String],
) -> Result<(DirectedNetwork, &'a [String]), Failure> {
    let (net, rest) = match common.dataset {
        Some(d) => {
            let d = Dataset::from(d);
            (
                load_dataset(d, &dataset_path(d, common.data_dir.as_deref()))?,
                args,
            )
        }
        None => {
            let (input, rest) = args
                .split_first()
                .ok_or_else(|| usage("an input file or --dataset is required"))?;
            let net = read_network(&PathBuf::from(input), false).map_err(|e| match e {
                Error::Io(io) => usage(format!("{input}: {io}")),
                other => Failure {
                    code: 2,
                    message: format!("{input}: {other}"),
                },
            })?;
            (net, rest)
        }
    };
    Ok((
        if common.undirected {
            net.symmetrize()
        } else {
            net
        },
        rest,
    ))
}

/// Numeric labels in numeric order, before any other labels.
fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    }
}

fn color_enabled() -> bool {
    std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none()
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Analyze {
            args,
            common,
            robustness,
            budget,
        } => {
            let (net, rest) = load(&common, &args)?;
            if let Some(extra) = rest.first() {
                return Err(usage(format!("unexpected argument `{extra}`")));
            }
            let options = AnalysisOptions {
                robustness: robustness.then_some(RobustnessConfig { budget }),
            };
            let doc = analyze(&net, &options)?;
            for w in &doc.warnings {
                eprintln!("warning: {w}");
            }
            Ok(emit_report_styled(
                &doc,
                common.format.into(),
                color_enabled(),
            ))
        }
        Command::Contest {
            args,
            common,
            greedy,
        } => {
            let (net, rest) = load(&common, &args)?;
            let [label] = rest else {
                return Err(usage("expected exactly one NODE"));
            };
            let i = net.require_node(label)?;
            let kind = middleman_set(&net).kind(i);
            if kind == MiddlemanKind::NotIntermediary {
                return Err(usage(format!(
                    "node `{label}` is a {} and brokers nothing; contestation applies to intermediaries",
                    net.classify_node(i)
                )));
            }
            let search = if greedy {
                CoverSearch::Greedy
            } else {
                CoverSearch::Exact
            };
            let result = contesting_set_with(&net, i, search)?;
            let names = |ids: &[NodeId]| -> Vec<String> {
                let mut v: Vec<String> = ids.iter().map(|&j| net.label(j).to_string()).collect();
                v.sort_by(|a, b| label_order(a, b));
                v
            };
            match common.format {
                Format::Json => {
                    let value = json!({
                        "node": label,
                        "kind": kind,
                        "status": result.status,
                        "contesting_set": result.minimal_set.as_deref().map(names),
                        "exact": result.exact,
                        "lower_bound": result.lower_bound,
                        "direct_contestors": names(&result.direct_contestors),
                    });
                    Ok(format!("{value:#}\n"))
                }
                Format::Table => Ok(contest_text(label, kind, &result, &names)),
                Format::Csv => Err(usage("contest supports --format table or json")),
            }
        }
        Command::Robustness {
            args,
            common,
            all,
            budget,
        } => {
            let (net, rest) = load(&common, &args)?;
            let config = RobustnessConfig { budget };
            let report = middleman_set(&net);
            let targets = match (all, rest) {
                (true, []) => report.middlemen(),
                (false, [label]) => {
                    let i = net.require_node(label)?;
                    if !report.is_middleman(i) {
                        return Err(Error::NotMiddleman(label.clone()).into());
                    }
                    vec![i]
                }
                (true, _) => return Err(usage("--all takes no NODE")),
                (false, _) => return Err(usage("expected exactly one NODE or --all")),
            };
            if targets.is_empty() {
                eprintln!("no middlemen");
            }
            let mut entries = Vec::new();
            for i in targets {
                let r = robustness_of(&net, i, &config)?;
                entries.push((report.kind(i), RobustnessEntry::new(&net, &r)));
            }
            Ok(robustness_text(&entries, common.format))
        }
    }
}

fn contest_text(
    label: &str,
    kind: MiddlemanKind,
    result: &ContestationResult,
    names: &dyn Fn(&[NodeId]) -> Vec<String>,
) -> String {
    let mut out = String::new();
    match (&result.status, &result.minimal_set) {
        (ContestationStatus::Contested, Some(set)) => {
            let members = names(set);
            let how = if result.exact {
                format!("minimal, size {}", set.len())
            } else {
                format!(
                    "greedy, size {}, lower bound {}",
                    set.len(),
                    result.lower_bound
                )
            };
            if members.len() == 1 && result.exact {
                out.push_str(&format!(
                    "{label}: directly contested by {} ({how})\n",
                    members[0]
                ));
            } else {
                out.push_str(&format!(
                    "{label}: contested by {{{}}} ({how})\n",
                    members.join(",")
                ));
            }
        }
        _ => {
            let what = match kind {
                MiddlemanKind::StrongMiddleman => "strong middleman",
                MiddlemanKind::RegularMiddleman => "regular middleman",
                _ => "intermediary",
            };
            out.push_str(&format!("{label}: uncontested ({what})\n"));
        }
    }
    let direct = names(&result.direct_contestors);
    if direct.is_empty() {
        out.push_str("direct contestors: none\n");
    } else {
        out.push_str(&format!("direct contestors: {}\n", direct.join(", ")));
    }
    out
}

fn robustness_text(entries: &[(MiddlemanKind, RobustnessEntry)], format: Format) -> String {
    let arcs = |w: &[(String, String)]| -> Vec<String> {
        w.iter().map(|(a, b)| format!("{a}->{b}")).collect()
    };
    match format {
        Format::Table => {
            let mut out = String::new();
            for (kind, e) in entries {
                out.push_str(&format!(
                    "{}{}: rho={} rho*={} psi={}\n",
                    e.node,
                    kind.marker(),
                    e.rho,
                    e.rho_dual,
                    e.psi
                ));
                out.push_str(&format!(
                    "  add arcs:     {}\n",
                    arcs(&e.rho_witness).join(", ")
                ));
                out.push_str(&format!(
                    "  remove arcs:  {}\n",
                    arcs(&e.rho_dual_witness).join(", ")
                ));
                out.push_str(&format!("  remove nodes: {}\n", e.psi_witness.join(", ")));
            }
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "node",
                "kind",
                "rho",
                "rho_dual",
                "psi",
                "rho_witness",
                "rho_dual_witness",
                "psi_witness",
            ])
            .expect("in-memory write");
            for (kind, e) in entries {
                w.write_record([
                    e.node.clone(),
                    kind.as_str().to_string(),
                    e.rho.to_string(),
                    e.rho_dual.to_string(),
                    e.psi.to_string(),
                    arcs(&e.rho_witness).join(" "),
                    arcs(&e.rho_dual_witness).join(" "),
                    e.psi_witness.join(" "),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = entries
                .iter()
                .map(|(kind, e)| {
                    let mut v = serde_json::to_value(e).expect("entry serializes");
                    v["kind"] = json!(kind);
                    v
                })
                .collect();
            format!("{:#}\n", serde_json::Value::Array(items))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("middlemen: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
