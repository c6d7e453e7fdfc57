//! Error types shared across the crate.

use thiserror::Error;

/// Top-level error for solver, generators, oracle and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Input fails a structural precondition (edge bound, degree bound,
    /// missing element, malformed file, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The improvement search exhausted its budget without raising the
    /// number of accessible classes.
    #[error("no accessibility improvement found: {0}")]
    ImprovementNotFound(String),

    /// A move in a sequence was illegal at application time; the state has
    /// been rolled back to the start of the sequence.
    #[error("illegal move: vertex {vertex} -> class {to} ({reason})")]
    IllegalMove {
        vertex: u32,
        to: usize,
        reason: String,
    },

    /// `greedy_balanced_extend` found a vertex with no admissible class.
    #[error("no admissible class for vertex {0}")]
    StuckVertex(u32),

    /// The brute-force oracle refuses instances above its size cap.
    #[error("oracle cap exceeded: n = {0} > {1}")]
    OracleCapExceeded(usize, usize),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
