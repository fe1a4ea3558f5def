//! Timing sweeps over matrix orders.

use std::io::Write;

use crate::matgen::{generate, Family, MatGenSpec};
use crate::report::{CsvRow, RunReport, Task};
use crate::run::execute;
use crate::{CliError, Result};

/// Orders up to this size are timed as the minimum of three runs.
pub const REPEAT_LIMIT: usize = 256;

#[derive(Clone, Debug)]
pub struct BenchSpec {
    pub task: Task,
    pub methods: Vec<String>,
    /// Ascending.
    pub n_grid: Vec<usize>,
    pub seed: u64,
    pub family: Family,
    pub tol: f64,
    pub max_sweeps: Option<usize>,
}

/// Runs every `(method, n)` cell in order and writes one CSV row per cell to
/// `out` as it completes.
pub fn bench<W: Write>(spec: &BenchSpec, out: W) -> Result<Vec<RunReport>> {
    if spec.n_grid.is_empty() || spec.n_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("n grid must be non-empty and strictly ascending".into()));
    }
    if spec.methods.is_empty() {
        return Err(CliError::Usage("no methods given".into()));
    }
    let mut w = csv::Writer::from_writer(out);
    let mut reports = Vec::new();
    for method in &spec.methods {
        for &n in &spec.n_grid {
            let g = MatGenSpec { family: spec.family, n, seed: spec.seed };
            let q = generate(&g)?;
            let reps = if n <= REPEAT_LIMIT { 3 } else { 1 };
            let mut o = execute(spec.task, method, &q, spec.tol, spec.max_sweeps, reps)?;
            o.report.family = Some(spec.family.name().to_string());
            o.report.seed = spec.seed;
            w.serialize(CsvRow::from(&o.report))?;
            w.flush()?;
            reports.push(o.report);
        }
    }
    Ok(reports)
}

/// Least-squares slope of `log t` against `log n`.
pub fn loglog_slope(points: &[(usize, f64)]) -> f64 {
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
