//! Command line front end: file formats, reports and command dispatch.
//!
//! [`run`] does all the work and returns the exit code and captured
//! output, so the binary is a thin wrapper and tests can call it in-process.

pub mod document;
pub mod error;
pub mod graph_file;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use ultragraph_core::{
    bound_transform, counterexample_metric, default_counterexample_sides, diametrical_graph, find_weak_similarity,
    is_isometric, metric_from_graph, padic_space, random_ultrametric, safe_graph_predicate, space_from_distance_chain,
    sweep, threshold_graph, truncate, unbound_transform, witness_triple, FiniteSpace, Rational, TransformParams,
};

pub use document::SpaceDocument;
pub use error::{CliError, ExitCode};
use report::{AnalysisReport, LabeledSweep, Provenance};

pub fn tool_id() -> String {
    format!("ultragraph {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Debug, Parser)]
#[command(name = "ultragraph", version, about = "Diametrical graphs and ultrametricity of finite metric spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: class, diameter, distance set, diametrical graph, sweep.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Threshold-graph sweep. Exits 1 when the space is not ultrametric.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Diametrical graph (or the threshold graph at `--threshold`).
    Graph {
        file: PathBuf,
        /// Emit Graphviz DOT instead of an edge list.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_parser = parse_rational)]
        threshold: Option<Rational>,
    },
    /// Emit a space document built from parameters.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Emit a transformed space document.
    Transform {
        #[command(subcommand)]
        kind: Transform,
    },
    /// Isometry and weak similarity. Exits 1 when not weakly similar.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Whether every metric with this diametrical graph is ultrametric.
    /// Exits 1 when not; with `--counterexample` the output is then a space
    /// document.
    Predicate {
        file: PathBuf,
        /// Also emit a non-ultrametric metric with this diametrical graph.
        #[arg(long)]
        counterexample: bool,
        #[arg(long, value_parser = parse_rational)]
        a: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        b: Option<Rational>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Distances 2 on edges, 1 on non-edges.
    MetricFromGraph { file: PathBuf },
    /// Residues mod p^k with the p-adic distance.
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
    /// Nested chain realizing a strictly decreasing list of distances.
    Chain {
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_rational)]
        values: Vec<Rational>,
    },
    /// Random ultrametric from a level tree.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    /// `t -> d* t / (1 + t)`.
    Bound {
        #[arg(long, value_parser = parse_rational)]
        dstar: Rational,
        file: PathBuf,
    },
    /// `s -> s / (d* - s)`; d* must exceed the diameter.
    Unbound {
        #[arg(long, value_parser = parse_rational)]
        dstar: Rational,
        file: PathBuf,
    },
    /// `t -> min(r, t)`.
    Truncate {
        #[arg(long, value_parser = parse_rational)]
        r: Rational,
        file: PathBuf,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: ultragraph_core::Error| e.to_string())
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: ExitCode,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: ExitCode::Success, stdout, stderr: String::new() }
    }

    fn decided(yes: bool, stdout: String) -> Self {
        Outcome { code: if yes { ExitCode::Success } else { ExitCode::Negative }, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    // argv[0] varies with install location; keep provenance machine-independent.
    let command_line = std::iter::once("ultragraph".into())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy()))
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: ExitCode::InputError, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(cli.command, &command_line) {
        Ok(out) => out,
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<FiniteSpace, CliError> {
    let text = read(path)?;
    SpaceDocument::parse(&text)
        .and_then(|d| d.to_space())
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<ultragraph_core::SimpleGraph, CliError> {
    graph_file::parse_graph(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit_space(space: &FiniteSpace, command_line: &str, extra: Vec<(String, String)>) -> String {
    let mut meta = vec![("tool".to_string(), tool_id()), ("command".to_string(), command_line.to_string())];
    meta.extend(extra);
    SpaceDocument::from_space(space, meta).emit()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Internal(e.to_string()))
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    provenance: Provenance,
    #[serde(flatten)]
    sweep: &'a LabeledSweep,
}

#[derive(Serialize)]
struct CompareOutput {
    provenance: Provenance,
    isometric: bool,
    weakly_similar: bool,
    /// Point of `a` -> point of `b`.
    bijection: Option<Vec<(String, String)>>,
    /// Distance of `b` -> distance of `a`.
    scaling: Option<Vec<(Rational, Rational)>>,
}

#[derive(Serialize)]
struct PredicateOutput {
    provenance: Provenance,
    predicate: bool,
    witness: Option<[String; 3]>,
}

fn execute(command: Command, command_line: &str) -> Result<Outcome, CliError> {
    match command {
        Command::Analyze { file, json } => {
            let space = load_space(&file)?;
            let report = AnalysisReport::build(&space, Provenance::new(command_line))?;
            Ok(Outcome::ok(if json { to_json(&report)? } else { report.to_text() }))
        }
        Command::Sweep { file, json } => {
            let space = load_space(&file)?;
            let labeled = LabeledSweep::new(&space, &sweep(&space)?);
            let text = if json {
                to_json(&SweepOutput { provenance: Provenance::new(command_line), sweep: &labeled })?
            } else {
                report::sweep_text(&labeled)
            };
            Ok(Outcome::decided(labeled.verdict, text))
        }
        Command::Graph { file, dot, threshold } => {
            let space = load_space(&file)?;
            let g = match &threshold {
                Some(r) => threshold_graph(&space, r)?,
                None => diametrical_graph(&space),
            };
            Ok(Outcome::ok(if dot { graph_file::to_dot(&g, "G") } else { graph_file::emit_graph(&g) }))
        }
        Command::Construct { kind } => {
            let (space, extra) = match kind {
                Construct::MetricFromGraph { file } => (metric_from_graph(&load_graph(&file)?)?, vec![]),
                Construct::Padic { p, k } => (padic_space(p, k)?, vec![]),
                Construct::Chain { values } => (space_from_distance_chain(&values)?, vec![]),
                Construct::Random { n, levels, seed } => {
                    (random_ultrametric(n, levels, seed)?, vec![("seed".to_string(), seed.to_string())])
                }
            };
            Ok(Outcome::ok(emit_space(&space, command_line, extra)))
        }
        Command::Transform { kind } => {
            let space = match kind {
                Transform::Bound { dstar, file } => {
                    bound_transform(&load_space(&file)?, &TransformParams::new(dstar)?)?
                }
                Transform::Unbound { dstar, file } => {
                    unbound_transform(&load_space(&file)?, &TransformParams::new(dstar)?)?
                }
                Transform::Truncate { r, file } => truncate(&load_space(&file)?, &r)?,
            };
            Ok(Outcome::ok(emit_space(&space, command_line, vec![])))
        }
        Command::Compare { a, b, json } => {
            let (sa, sb) = (load_space(&a)?, load_space(&b)?);
            let witness = find_weak_similarity(&sa, &sb);
            let isometric = is_isometric(&sa, &sb);
            if isometric && witness.is_none() {
                return Err(CliError::Internal("isometric spaces reported as not weakly similar".into()));
            }
            let out = CompareOutput {
                provenance: Provenance::new(command_line),
                isometric,
                weakly_similar: witness.is_some(),
                bijection: witness.as_ref().map(|w| {
                    w.bijection
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| (sa.label(i).to_string(), sb.label(j).to_string()))
                        .collect()
                }),
                scaling: witness.as_ref().map(|w| w.scaling.clone()),
            };
            let text = if json { to_json(&out)? } else { compare_text(&out) };
            Ok(Outcome::decided(out.weakly_similar, text))
        }
        Command::Predicate { file, counterexample, a, b, json } => {
            let g = load_graph(&file)?;
            let holds = safe_graph_predicate(&g)?;
            let witness = witness_triple(&g).map(|(x, z, y)| [x, z, y].map(|v| g.label(v).to_string()));
            if holds == witness.is_some() {
                return Err(CliError::Internal("predicate and witness search disagree".into()));
            }
            if counterexample && !holds {
                let (da, db) = default_counterexample_sides();
                let (a, b) = (a.unwrap_or(da), b.unwrap_or(db));
                let space = counterexample_metric(&g, &a, &b)?
                    .ok_or_else(|| CliError::Internal("predicate false but no counterexample".into()))?;
                if space.is_ultrametric() || diametrical_graph(&space) != g {
                    return Err(CliError::Internal("counterexample fails its own contract".into()));
                }
                let extra = vec![("witness".to_string(), witness.unwrap_or_default().join(" "))];
                return Ok(Outcome::decided(false, emit_space(&space, command_line, extra)));
            }
            let out = PredicateOutput { provenance: Provenance::new(command_line), predicate: holds, witness };
            let text = if json {
                to_json(&out)?
            } else {
                let mut s = format!("predicate: {holds}\n");
                if let Some(w) = &out.witness {
                    s.push_str(&format!("witness: {}\n", w.join(" ")));
                }
                s
            };
            Ok(Outcome::decided(holds, text))
        }
    }
}

fn compare_text(out: &CompareOutput) -> String {
    let mut s = format!("isometric: {}\nweakly similar: {}\n", out.isometric, out.weakly_similar);
    if let (Some(bij), Some(scaling)) = (&out.bijection, &out.scaling) {
        let pairs: Vec<String> = bij.iter().map(|(x, y)| format!("{x}->{y}")).collect();
        s.push_str(&format!("bijection: {}\n", pairs.join(" ")));
        let steps: Vec<String> = scaling.iter().map(|(r, d)| format!("{r}->{d}")).collect();
        s.push_str(&format!("scaling: {}\n", steps.join(" ")));
    }
    s
}
