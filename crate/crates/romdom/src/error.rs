//! Error type shared by graph construction, solvers and bound builders.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("loop at vertex {0} rejected: graphs here are simple")]
    LoopRejected(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("graph order {order} exceeds the configured maximum {max}")]
    GraphTooLarge { order: usize, max: usize },

    #[error("operation would produce an empty graph")]
    WouldBeEmpty,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{invariant} is undefined here: {reason}")]
    Undefined {
        invariant: &'static str,
        reason: String,
    },

    #[error("budget exceeded after {nodes} nodes{}", match .best { Some(b) => format!(" (best bound so far: {b})"), None => String::new() })]
    BudgetExceeded { nodes: u64, best: Option<usize> },

    #[error("hypothesis not met: {0}")]
    HypothesisFailed(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("no feasible assignment exists: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
