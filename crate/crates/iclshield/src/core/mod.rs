//! Shared domain types: examples, datasets, demonstrations, and prompt
//! rendering. Everything here is immutable after construction and safe to
//! share across worker threads.

mod dataset;
mod demo;
mod prompt;

pub use dataset::{load_dataset, save_dataset, Dataset, Example};
pub use demo::{concat_demonstrations, ConcatMode, Demonstration, Provenance};
pub use prompt::{render_prompt, PromptTemplate, Query};

use thiserror::Error;

/// Errors raised by dataset ingestion and template handling.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed record at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("record at line {line}: output {output:?} is not in the declared label space")]
    OutputNotInLabelSpace { line: usize, output: String },
    #[error("invalid template: {0}")]
    InvalidTemplate(String),
    #[error("query ground truth must be non-empty")]
    EmptyGroundTruth,
    #[error("example input must be non-empty after trimming")]
    EmptyInput,
}
