use thiserror::Error;

use crate::exactmath::PolyT;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {rows}x{cols}")]
    Dimension {
        expected: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("degree bound {given} is below the required {required}")]
    DegreeBound { given: usize, required: usize },

    #[error("the zero polynomial has no well-defined root set")]
    UndefinedRoots,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division by {divisor} leaves a nonzero remainder")]
    InexactDivision { divisor: PolyT },

    #[error("no modular forms of weight {0}")]
    EmptySpace(i64),

    #[error("linear system is singular (rank {rank} < {expected})")]
    Rank { rank: usize, expected: usize },

    #[error("series known only to O(q^{available}), O(q^{needed}) required")]
    Truncation { needed: usize, available: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
