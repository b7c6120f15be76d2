use thiserror::Error;

use crate::congruence::CheckRow;

/// Errors raised by the library.
///
/// Mathematical failures (a sequence that is not a trace sequence, a
/// character that breaks a congruence) are reported through
/// [`CongruenceReport`](crate::CongruenceReport) values, not through this type.
/// The one exception is [`Error::NotATraceSequence`], which carries the
/// failing rows so that callers of [`synthesize`](crate::synthesize) can show them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: expected {expected} entries in row {row}, found {found}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("exterior power index {index} out of range 1..={dim}")]
    ExteriorIndex { index: usize, dim: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{what} must be at least {min}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("not a trace sequence: {} congruence(s) fail", rows.len())]
    NotATraceSequence { rows: Vec<CheckRow> },

    #[error("synthesized matrix does not reproduce the input traces")]
    SelfCheck,

    #[error("malformed character table: {0}")]
    CharacterTable(String),

    #[error("invalid integer {token:?}")]
    ParseInteger { token: String },

    #[error("invalid rational {token:?}")]
    ParseRational { token: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
