use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: Vertex },

    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: Vertex,
        n: usize,
    },

    #[error("edge id {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: EdgeId, m: usize },

    #[error("cycle {index}: {reason}")]
    InvalidCycle { index: usize, reason: String },

    #[error("cycles {first} and {second} share edge {edge}")]
    CyclesOverlap {
        first: usize,
        second: usize,
        edge: EdgeId,
    },

    #[error("vertex {0} has odd degree")]
    OddDegree(Vertex),

    #[error("vertex {vertex} has odd indegree {indegree}")]
    OddIndegree { vertex: Vertex, indegree: usize },

    #[error("graph is not {expected}-regular")]
    NotRegular { expected: usize },

    #[error("edge {0} is a bridge")]
    Bridge(EdgeId),

    #[error("2-edge-cut {{{}, {}}} separates the prescribed cycles", .cut.0, .cut.1)]
    CutSeparatesCycles { cut: (EdgeId, EdgeId) },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("gadget slot assignment failed at vertex {vertex}: {reason}")]
    SlotAssignment { vertex: Vertex, reason: String },

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("no solution exists: {0}")]
    Unsat(String),

    #[error("postcondition check failed: {0}")]
    CheckFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn cycle(index: usize, reason: impl Into<String>) -> Self {
        Error::InvalidCycle {
            index,
            reason: reason.into(),
        }
    }
}
