//! Finite metric spaces and their diametrical graphs.
//!
//! Every distance is an exact [`Rational`]. A [`FiniteSpace`] is always a
//! valid semimetric space; [`space::validate`] reports why raw data is not.
//! The crate decides ultrametricity two independent ways (triple scan in
//! [`FiniteSpace::classify`] and the threshold-graph [`sweep`]), and
//! provides the graph predicates, constructions and transforms around them.

#![allow(clippy::needless_range_loop)]

pub mod constructions;
pub mod diametrical;
pub mod error;
pub mod graph;
pub mod rational;
pub mod similarity;
pub mod space;

pub use constructions::{
    bound_transform, counterexample_metric, default_counterexample_sides, metric_from_graph, padic_space,
    perturbed_metric_from_graph, random_metric, random_ultrametric, safe_graph_predicate, space_from_distance_chain,
    truncate, unbound_transform, witness_triple, TransformParams,
};
pub use diametrical::{
    diametrical_graph, gap_condition, sweep, threshold_graph, verify_parts_are_balls, SweepReport, ThresholdClass,
    ThresholdEntry,
};
pub use error::{Error, Result};
pub use graph::{Partition, SimpleGraph};
pub use rational::Rational;
pub use similarity::{find_weak_similarity, is_isometric, verify_class_preservation, WeakSimilarity};
pub use space::{validate, BallFamily, FiniteSpace, SpaceClass, Violation};
