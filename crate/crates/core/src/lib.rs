//! Factors of regular multigraphs that meet prescribed edge-disjoint cycles.
//!
//! The crate builds `t`-factors of `3t`-regular and `2t`-regular multigraphs
//! that intersect every cycle of a given family, by blowing the graph up into
//! a cubic or 2-regular one, solving a matching problem there and pulling the
//! matching back. It also ships generators for the extremal families where no
//! such factor exists, and an exhaustive oracle that checks every claim on
//! small instances.

pub mod cli;
pub mod connectivity;
pub mod decompose;
pub mod error;
pub mod expansion;
pub mod families;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod pipelines;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Cycle, CycleSet, EdgeId, Factor, HitMode, Multigraph, Orientation, Vertex};
