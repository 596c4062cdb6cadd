use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("precision too low: {0}")]
    InsufficientPrecision(String),

    #[error("pole at s = {0}")]
    Pole(String),

    #[error("argument outside the supported domain: {0}")]
    Domain(String),

    #[error("zeta parameter validation failed at s = {s}: runs differ by 10^{log10_diff:.1}")]
    ParameterValidation { s: String, log10_diff: f64 },

    #[error("Log((s-1)zeta(s)) is on the branch cut at s = {0}")]
    BranchCut(String),

    #[error("node table version mismatch: expected `{expected}`, found `{found}`")]
    VersionMismatch { expected: String, found: String },

    #[error("node table truncated: header declares {declared} entries, found {found}")]
    Truncated { declared: usize, found: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("combinatorial structure violated: {0}")]
    Structure(String),

    #[error("series truncation insufficient at |s| = {radius:.3}: {message}")]
    InsufficientTruncation { radius: f64, message: String },

    #[error("contour phase unwrap failed between samples {index} and {next}")]
    UnwrapFailure { index: usize, next: usize },

    #[error("contour aliasing check failed for n = {n}: sample doubling moved the result by 10^{log10_diff:.1}")]
    Aliasing { n: usize, log10_diff: f64 },

    #[error("Newton iteration did not converge after {steps} steps (|lambda| = 10^{log10_residual:.1})")]
    NonConvergence { steps: usize, log10_residual: f64 },

    #[error("derivative underflow at s = {0} (multiple zero?)")]
    DerivativeUnderflow(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
