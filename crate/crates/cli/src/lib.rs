//! Library side of the `lspace` command-line tool: text grammar, JSON
//! encoding, command execution, and the embedded regression corpus.

pub mod commands;
pub mod corpus;
pub mod json;
pub mod render;
pub mod text;

use thiserror::Error;

pub use commands::{execute, Cli, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at column {column}: {message}\n  {input}\n  {marker}^", marker = " ".repeat(column.saturating_sub(1)))]
    Parse { input: String, column: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] lspace_core::Error),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Stable identifier used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        use lspace_core::Error as E;
        match self {
            CliError::Parse { .. } => "Parse",
            CliError::Usage(_) => "Usage",
            CliError::Json(_) => "Json",
            CliError::Io(_) => "Io",
            CliError::Core(e) => match e {
                E::ZeroDenominator => "ZeroDenominator",
                E::ParseRational(_) => "ParseRational",
                E::DegenerateEuler => "DegenerateEuler",
                E::DegenerateH1 => "DegenerateH1",
                E::UnsupportedFiberCount(_) => "UnsupportedFiberCount",
                E::InvalidDegenerate => "InvalidDegenerate",
                E::SlopeOutOfRange(_) => "SlopeOutOfRange",
                E::Determinant(_) => "Determinant",
                E::InvalidParameter(_) => "InvalidParameter",
                E::PreconditionFailed(_) => "PreconditionFailed",
                E::UnknownFamily(_) => "UnknownFamily",
            },
        }
    }
}
