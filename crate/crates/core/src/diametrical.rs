//! Diametrical graphs, threshold graphs and the threshold sweep that decides
//! ultrametricity from graph structure alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Partition, SimpleGraph};
use crate::rational::Rational;
use crate::space::{positive_radius, FiniteSpace};

/// Pairs realizing the diameter. Edgeless exactly when the space has one
/// point.
pub fn diametrical_graph(space: &FiniteSpace) -> SimpleGraph {
    let n = space.len();
    if n == 1 {
        return SimpleGraph::from_predicate(space.labels().to_vec(), |_, _| false);
    }
    let top = space.distance_set().len() as u32 - 1;
    SimpleGraph::from_predicate(space.labels().to_vec(), |i, j| space.rank(i, j) == top)
}

/// Pairs at distance `>= r`.
pub fn threshold_graph(space: &FiniteSpace, r: &Rational) -> Result<SimpleGraph> {
    positive_radius(r)?;
    let cut = space.rank_cut(r);
    Ok(SimpleGraph::from_predicate(space.labels().to_vec(), |i, j| space.rank(i, j) >= cut))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThresholdClass {
    Empty,
    CompleteMultipartite { k: usize, parts: Partition },
    NotMultipartite,
}

impl ThresholdClass {
    pub fn of(graph: &SimpleGraph) -> Self {
        if graph.is_edgeless() {
            return ThresholdClass::Empty;
        }
        match graph.multipartite_parts() {
            Some(parts) => ThresholdClass::CompleteMultipartite { k: parts.len(), parts },
            None => ThresholdClass::NotMultipartite,
        }
    }

    pub fn is_admissible(&self) -> bool {
        !matches!(self, ThresholdClass::NotMultipartite)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdEntry {
    pub r: Rational,
    pub class: ThresholdClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    /// One entry per distinct positive distance, ascending.
    pub thresholds: Vec<ThresholdEntry>,
    /// Every threshold graph is empty or complete multipartite.
    pub verdict: bool,
    /// Whether the input satisfied the triangle inequality. The verdict is
    /// only a theorem about metric inputs.
    pub metric: bool,
}

/// Classifies the threshold graph at every positive distance value.
///
/// Between consecutive distance values `d_i < r <= d_{i+1}` the edge set
/// `{d >= r}` is the one at `r = d_{i+1}`, so these thresholds cover all of
/// `(0, diam]`.
pub fn sweep(space: &FiniteSpace) -> Result<SweepReport> {
    require_points(space, 2)?;
    let thresholds: Vec<ThresholdEntry> = space.distance_set()[1..]
        .iter()
        .map(|r| {
            let g = threshold_graph(space, r)?;
            Ok(ThresholdEntry { r: r.clone(), class: ThresholdClass::of(&g) })
        })
        .collect::<Result<_>>()?;
    let verdict = thresholds.iter().all(|t| t.class.is_admissible());
    Ok(SweepReport { thresholds, verdict, metric: space.classify().is_metric() })
}

/// Checks that the parts of the diametrical graph coincide with the open
/// balls of radius `diam`. Requires an ultrametric space with two or more
/// points.
pub fn verify_parts_are_balls(space: &FiniteSpace) -> Result<bool> {
    require_points(space, 2)?;
    if !space.is_ultrametric() {
        return Err(Error::NotUltrametric);
    }
    Ok(parts_match_balls(space))
}

pub(crate) fn parts_match_balls(space: &FiniteSpace) -> bool {
    let Some(parts) = diametrical_graph(space).multipartite_parts() else {
        return false;
    };
    let balls = space.ball_family(space.diameter()).expect("diameter positive for n >= 2").balls;
    let mut parts = parts.blocks().to_vec();
    parts.sort();
    parts == balls
}

/// Every non-diameter distance `t > 0` satisfies `2t < diam`.
pub fn gap_condition(space: &FiniteSpace) -> Result<bool> {
    require_points(space, 2)?;
    if !space.classify().is_metric() {
        return Err(Error::NotMetric);
    }
    let diam = space.diameter();
    let values = space.distance_set();
    Ok(values[1..values.len() - 1].iter().all(|t| &(t + t) < diam))
}

fn require_points(space: &FiniteSpace, required: usize) -> Result<()> {
    if space.len() < required {
        Err(Error::TooFewPoints { required, actual: space.len() })
    } else {
        Ok(())
    }
}
