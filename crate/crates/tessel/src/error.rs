//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building or analyzing a tessellation.
#[derive(Debug, Error)]
pub enum TessError {
    /// The adjacency lists are not a valid rotation system.
    #[error("structural error: {0}")]
    Structure(String),

    /// `u` lists `v` as a neighbor but not conversely.
    #[error("asymmetric adjacency: {u} lists {v} but {v} does not list {u}")]
    Asymmetric { u: u32, v: u32 },

    /// A neighbor id that is not a vertex of the graph.
    #[error("dangling neighbor id {id} at vertex {at}")]
    DanglingId { at: u32, id: u32 },

    /// Parse error in the exchange format, with a 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Invalid generator parameters.
    #[error("invalid generator spec: {0}")]
    BadSpec(String),

    /// Layer-by-layer construction could not close a layer.
    #[error("construction infeasible at layer {layer}: {msg}")]
    Infeasible { layer: u32, msg: String },

    /// Operation applied to an input kind it does not support.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A precondition on an operation's argument failed.
    #[error("{0}")]
    Precondition(String),

    /// A hypothesis of the theorem being instantiated fails on this input.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, TessError>;
