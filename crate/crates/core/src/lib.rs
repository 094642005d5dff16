//! Extremal vertex distance and Wiener index over connected graphs with a
//! fixed number of cut vertices.
//!
//! The crate evaluates closed forms for the lollipop and dumbbell families,
//! enumerates connected graphs up to isomorphism, and runs exhaustive
//! extremal searches and consistency checks over the classes of connected
//! graphs with `n` vertices and `k` cut vertices.

pub mod cli;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod structure;
pub mod verify;

pub use graph::{DistanceMatrix, Graph, GraphError, VertexSet};
