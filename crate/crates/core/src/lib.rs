//! Structural controllability and accessibility of bilinear systems on the
//! special Euclidean group SE(n), decided from the sparsity pattern of the
//! input matrices alone.
//!
//! - [`se_algebra`]: the Lie algebra se(n), exact bracket closure and
//!   numerical rank tests.
//! - [`pattern_graph`]: patterns, solid/broken graphs and their transitive
//!   closure, and the graph criteria.
//! - [`sparse_design`]: sparsest and minimum-cost controllable patterns.
//! - [`harness`]: exhaustive sweeps and randomized k-input checks.
//! - [`cli`]: the `structctrl` command line.

pub mod cli;
pub mod error;
pub mod harness;
pub mod pattern_graph;
pub mod se_algebra;
pub mod sparse_design;

pub use error::{Error, Result};
pub use pattern_graph::{Method, Pattern, PatternGraph};
