//! Batch front door for the linguistic fuzzy-regression pipeline: survey
//! and config ingestion, orchestration, report and plot output, plus the
//! bundled case-study demo.

pub mod config;
pub mod demo;
pub mod lpfile;
pub mod pipeline;
pub mod plot;
pub mod reference;
pub mod report;
pub mod survey;

use std::fmt;

/// Errors surfaced by the CLI layer, categorized for exit codes:
/// parse/data problems exit 2, an infeasible regression exits 3, anything
/// else exits 4.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed input file.
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    /// Structurally valid input that the pipeline cannot accept
    /// (unknown terms, incomplete role maps, inconsistent groups).
    Data { message: String },
    /// The regression admits no interval-inclusion fit.
    Infeasible { message: String },
    /// Unexpected internal failure.
    Internal { message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Data { .. } => 2,
            CliError::Infeasible { .. } => 3,
            CliError::Internal { .. } => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse {
                path,
                line,
                column,
                message,
            } => write!(f, "{path}:{line}:{column}: {message}"),
            CliError::Data { message } => write!(f, "{message}"),
            CliError::Infeasible { message } => write!(f, "{message}"),
            CliError::Internal { message } => write!(f, "internal error: {message}"),
        }
    }
}

impl std::error::Error for CliError {}
