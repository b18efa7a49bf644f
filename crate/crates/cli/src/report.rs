//! Analysis and sweep reports, rendered as JSON or plain text. Parts are
//! reported by point label.

use std::fmt::Write as _;

use serde::Serialize;
use ultragraph_core::{
    diametrical_graph, gap_condition, sweep, verify_parts_are_balls, FiniteSpace, Partition, Rational, SpaceClass,
    SweepReport, ThresholdClass,
};

use crate::error::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub command: String,
}

impl Provenance {
    pub fn new(command: &str) -> Self {
        Provenance { tool: crate::tool_id(), command: command.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiametricalSummary {
    pub edges: usize,
    /// `None` when the graph is not complete multipartite.
    pub parts: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LabeledClass {
    Empty,
    CompleteMultipartite { k: usize, parts: Vec<Vec<String>> },
    NotMultipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledThreshold {
    pub r: Rational,
    pub class: LabeledClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledSweep {
    pub thresholds: Vec<LabeledThreshold>,
    pub verdict: bool,
    pub metric: bool,
}

impl LabeledSweep {
    pub fn new(space: &FiniteSpace, report: &SweepReport) -> Self {
        let thresholds = report
            .thresholds
            .iter()
            .map(|t| LabeledThreshold {
                r: t.r.clone(),
                class: match &t.class {
                    ThresholdClass::Empty => LabeledClass::Empty,
                    ThresholdClass::NotMultipartite => LabeledClass::NotMultipartite,
                    ThresholdClass::CompleteMultipartite { k, parts } => {
                        LabeledClass::CompleteMultipartite { k: *k, parts: label_parts(space.labels(), parts) }
                    }
                },
            })
            .collect();
        LabeledSweep { thresholds, verdict: report.verdict, metric: report.metric }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub provenance: Provenance,
    pub points: usize,
    pub class: SpaceClass,
    pub diameter: Rational,
    pub distance_set: Vec<Rational>,
    pub diametrical_graph: DiametricalSummary,
    /// Absent for one-point spaces.
    pub sweep: Option<LabeledSweep>,
    /// Present for metric spaces with at least two points.
    pub gap_condition: Option<bool>,
    /// Present for ultrametric spaces with at least two points.
    pub parts_are_balls: Option<bool>,
}

pub fn label_parts(labels: &[String], parts: &Partition) -> Vec<Vec<String>> {
    parts.blocks().iter().map(|b| b.iter().map(|&v| labels[v].clone()).collect()).collect()
}

impl AnalysisReport {
    pub fn build(space: &FiniteSpace, provenance: Provenance) -> Result<Self, CliError> {
        let class = space.classify();
        let graph = diametrical_graph(space);
        let parts = graph.multipartite_parts();
        let big = space.len() >= 2;
        let sweep_report = if big { Some(sweep(space)?) } else { None };
        let report = AnalysisReport {
            provenance,
            points: space.len(),
            class,
            diameter: space.diameter().clone(),
            distance_set: space.distance_set().to_vec(),
            diametrical_graph: DiametricalSummary {
                edges: graph.edge_count(),
                parts: parts.as_ref().map(|p| label_parts(space.labels(), p)),
            },
            sweep: sweep_report.as_ref().map(|r| LabeledSweep::new(space, r)),
            gap_condition: if big && class.is_metric() { Some(gap_condition(space)?) } else { None },
            parts_are_balls: if big && class == SpaceClass::Ultrametric {
                Some(verify_parts_are_balls(space)?)
            } else {
                None
            },
        };
        report.check_consistency()?;
        Ok(report)
    }

    /// Cross-checks verdicts that theory says must agree.
    fn check_consistency(&self) -> Result<(), CliError> {
        let ultra = self.class == SpaceClass::Ultrametric;
        if let Some(s) = &self.sweep {
            if s.verdict != ultra {
                return Err(CliError::Internal(format!("sweep verdict {} but class {}", s.verdict, self.class)));
            }
        }
        if self.parts_are_balls == Some(false) {
            return Err(CliError::Internal("ultrametric space whose diametrical parts are not balls".into()));
        }
        if self.gap_condition == Some(true) && self.diametrical_graph.parts.is_none() {
            return Err(CliError::Internal("gap condition holds but diametrical graph is not multipartite".into()));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "points: {}", self.points);
        let _ = writeln!(out, "class: {}", self.class);
        let _ = writeln!(out, "diameter: {}", self.diameter);
        let _ = writeln!(out, "distance set: {}", join(&self.distance_set));
        let g = &self.diametrical_graph;
        let shape = match &g.parts {
            Some(p) => format!("complete {}-partite {}", p.len(), format_parts(p)),
            None if g.edges == 0 => "empty".to_string(),
            None => "not multipartite".to_string(),
        };
        let _ = writeln!(out, "diametrical graph: {} edges, {shape}", g.edges);
        if let Some(gap) = self.gap_condition {
            let _ = writeln!(out, "gap condition: {gap}");
        }
        if let Some(balls) = self.parts_are_balls {
            let _ = writeln!(out, "parts are balls: {balls}");
        }
        if let Some(s) = &self.sweep {
            out.push_str(&sweep_text(s));
        }
        out
    }
}

pub fn sweep_text(s: &LabeledSweep) -> String {
    let mut out = String::from("sweep:\n");
    for t in &s.thresholds {
        let class = match &t.class {
            LabeledClass::Empty => "empty".to_string(),
            LabeledClass::NotMultipartite => "not multipartite".to_string(),
            LabeledClass::CompleteMultipartite { k, parts } => format!("complete {k}-partite {}", format_parts(parts)),
        };
        let _ = writeln!(out, "  r = {}: {class}", t.r);
    }
    let verdict = if s.verdict { "ultrametric" } else { "not ultrametric" };
    let _ = writeln!(out, "  verdict: {verdict}");
    if !s.metric {
        out.push_str("  note: input is not a metric space\n");
    }
    out
}

pub fn format_parts(parts: &[Vec<String>]) -> String {
    parts.iter().map(|p| format!("{{{}}}", p.join(", "))).collect::<Vec<_>>().join(" ")
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
