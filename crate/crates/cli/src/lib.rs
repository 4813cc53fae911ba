//! Batch front end: JSON problem specs in, deterministic reports out.

pub mod json;
pub mod presets;
pub mod report;
pub mod run;
pub mod spec;

pub use report::Report;
pub use run::{materialize, run, seeded_cofibration, Options};
pub use spec::Command;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed spec; `pointer` is a JSON pointer into the merged spec.
    #[error("spec error at {pointer}: {message}")]
    Spec { pointer: String, message: String },
    #[error("usage error: {0}")]
    Usage(String),
}

impl CliError {
    pub fn spec(pointer: impl Into<String>, message: impl Into<String>) -> CliError {
        CliError::Spec { pointer: pointer.into(), message: message.into() }
    }
}
