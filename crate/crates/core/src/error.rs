use thiserror::Error;

use crate::algebra::Kind;
use crate::report::ViolationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix shape mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("kind mismatch: expected {expected}, got {found}")]
    KindMismatch { expected: Kind, found: Kind },

    #[error("product selector `{selector}` is not valid for {kind} algebras")]
    BadSelector { selector: String, kind: Kind },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("{what} is not supported for {kind} algebras")]
    Unsupported { what: String, kind: Kind },

    #[error("subspace is not a {side} ideal")]
    NotAnIdeal { side: String },

    #[error("input algebra fails its structure check ({} violations)", .0.len())]
    InvalidAlgebra(ViolationReport),

    #[error("operator check failed ({} violations)", .0.len())]
    OperatorCheckFailed(ViolationReport),

    #[error("action check failed ({} violations)", .0.len())]
    InvalidAction(ViolationReport),

    #[error("crossed module check failed ({} violations)", .0.len())]
    InvalidCrossedModule(ViolationReport),

    #[error("precondition `{name}` failed ({} violations)", .report.len())]
    Precondition {
        name: String,
        report: ViolationReport,
    },

    #[error("{what} produced an output failing its structure check ({} violations)", .report.len())]
    OutputCheckFailed {
        what: String,
        report: ViolationReport,
    },

    #[error("map is not injective (rank {rank} < {dim})")]
    NotInjective { rank: usize, dim: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("{path}: JSON parse error at line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{file}: {field}: {message}")]
    Schema {
        file: String,
        field: String,
        message: String,
    },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
