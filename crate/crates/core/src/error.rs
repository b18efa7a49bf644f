use thiserror::Error;

use crate::rational::Rational;
use crate::space::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("a space needs at least one point")]
    EmptySpace,

    #[error("matrix shape does not match {labels} labels: {detail}")]
    DimensionMismatch { labels: usize, detail: String },

    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),

    #[error("distance matrix violates the semimetric axioms: {}", format_violations(.0))]
    InvalidSpace(Vec<Violation>),

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(Rational),

    #[error("unknown point {0:?}")]
    UnknownPoint(String),

    #[error("operation needs at least {required} points, space has {actual}")]
    TooFewPoints { required: usize, actual: usize },

    #[error("space is not ultrametric")]
    NotUltrametric,

    #[error("space is not metric")]
    NotMetric,

    #[error("graph is disconnected: no path between {0:?} and {1:?}")]
    Disconnected(String, String),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("invalid edge {0:?}-{1:?}: {2}")]
    InvalidEdge(String, String, &'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid weak similarity witness: {0}")]
    InvalidWitness(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
