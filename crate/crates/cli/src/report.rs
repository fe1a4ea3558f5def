use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Hess,
    #[serde(rename = "hessqr")]
    #[value(alias = "hessqr")]
    Qr,
    Schur,
    Eig,
}

impl Task {
    /// Label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Task::Hess => "hess",
            Task::Qr => "hessqr",
            Task::Schur => "schur",
            Task::Eig => "eig",
        }
    }

    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Task::Hess => &["h1", "h2", "h3"],
            Task::Qr => &["g2", "g1", "householder"],
            Task::Schur => &["split", "keep"],
            Task::Eig => &["francis"],
        }
    }

    pub fn default_method(self) -> &'static str {
        match self {
            Task::Hess => "h3",
            Task::Qr => "g2",
            Task::Schur => "split",
            Task::Eig => "francis",
        }
    }
}

/// Outcome of one decomposition. All residuals are recomputed from the
/// input and the returned factors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub task: Task,
    pub method: String,
    /// `None` when the matrix was read from a file.
    pub family: Option<String>,
    pub n: usize,
    pub seed: u64,
    pub wall_time_s: f64,
    /// `None` when no reference is available (eigenvalues of matrices larger
    /// than the oracle accepts).
    pub residual: Option<f64>,
    pub structure_violation: f64,
    pub unitarity: Option<f64>,
    pub op_count: Option<u64>,
    pub converged: bool,
    pub sweeps: usize,
    /// `(re, im)` pairs, eig task only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigenvalues: Option<Vec<(f64, f64)>>,
}

/// One CSV line, in the fixed column order.
#[derive(Serialize)]
pub(crate) struct CsvRow<'a> {
    task: Task,
    method: &'a str,
    n: usize,
    seed: u64,
    wall_time_s: f64,
    residual: Option<f64>,
    structure_violation: f64,
    op_count: Option<u64>,
    converged: bool,
    sweeps: usize,
}

impl<'a> From<&'a RunReport> for CsvRow<'a> {
    fn from(r: &'a RunReport) -> Self {
        CsvRow {
            task: r.task,
            method: &r.method,
            n: r.n,
            seed: r.seed,
            wall_time_s: r.wall_time_s,
            residual: r.residual,
            structure_violation: r.structure_violation,
            op_count: r.op_count,
            converged: r.converged,
            sweeps: r.sweeps,
        }
    }
}

pub const CSV_HEADER: &str =
    "task,method,n,seed,wall_time_s,residual,structure_violation,op_count,converged,sweeps";
