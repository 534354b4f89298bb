//! A workbench for structural sparsity in complex networks.
//!
//! The crate computes low-treedepth (p-centered) colorings through iterated
//! transitive-fraternal augmentations, counts fixed patterns with a dynamic
//! program over treedepth decompositions, evaluates localized distance-based
//! centrality through truncated-distance digraphs, and generates graphs from
//! the usual random models (configuration, Chung–Lu, households, perturbed,
//! Kleinberg grid, preferential attachment) with reproducible seeding.
//!
//! The `parallel` feature (on by default) runs the embarrassingly parallel
//! inner loops — subset verification, per-source BFS, per-subset counting
//! jobs, experiment cells — on a rayon pool; without it every code path is
//! sequential with identical results.

pub mod centrality;
pub mod coloring;
pub mod digraph;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod models;
pub mod patterns;
pub mod rng;

pub(crate) mod par;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, DegeneracyOrder, DistanceMap, Graph, Vertex};
