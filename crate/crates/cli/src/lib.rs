//! Matrix generators, residual metrics and the run/bench drivers behind the
//! `qrbench` binary.

pub mod bench;
pub mod matgen;
pub mod metrics;
pub mod report;
pub mod run;

pub use bench::{bench, loglog_slope, BenchSpec};
pub use matgen::{generate, Family, MatGenSpec};
pub use report::{RunReport, Task};
pub use run::{run, RunSpec};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Quat(#[from] quatqr::QuatError),
    #[error(transparent)]
    Qmat(#[from] quatqr::qmat::QmatError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
