//! Catalog loading, the full classification run and report output.

mod catalog;
mod classify;
mod report;

pub use catalog::{default_catalog, load_catalog, parse_catalog, Catalog, DEFAULT_CATALOG};
pub use classify::{run_classification, ClassificationReport, CoveringRecord, CrossCheckReport, PairResult};
pub use report::{
    emit_reports, render, render_cross_check, render_csv, render_dot, render_json, render_md, Format, CSV_HEADER,
};

use thiserror::Error;

use crate::buindex::IndexError;
use crate::covers::CoverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}: {check} check failed: {message}")]
    Semantic { line: usize, check: String, message: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("inconsistent classification: {0}")]
    Inconsistent(String),
}
