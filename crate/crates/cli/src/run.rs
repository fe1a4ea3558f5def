//! Single decompositions with recomputed metrics.

use std::path::{Path, PathBuf};
use std::time::Instant;

use quatqr::{
    eigs_from_schur, hess_qr_with, hess_reduce, opcount, oracle_eigvals, qr_full, quaternion_schur_with,
    spectrum_distance, GivensVariant, HessMethod, PairPolicy, QuatMatrix, SchurOptions, StructureKind,
};

use crate::matgen::{generate, MatGenSpec};
use crate::metrics;
use crate::report::{RunReport, Task};
use crate::{CliError, Result};

#[derive(Clone, Debug)]
pub enum Input {
    Generated(MatGenSpec),
    File(PathBuf),
}

#[derive(Clone, Debug)]
pub struct RunSpec {
    pub task: Task,
    pub method: String,
    pub input: Input,
    pub tol: f64,
    pub max_sweeps: Option<usize>,
    /// Directory for the QMAT factors and `report.json`.
    pub out_dir: Option<PathBuf>,
}

/// Decomposition output plus its report.
pub struct Outcome {
    pub report: RunReport,
    pub factors: Vec<(&'static str, QuatMatrix)>,
}

pub fn load_input(input: &Input) -> Result<(QuatMatrix, Option<String>, u64)> {
    match input {
        Input::Generated(g) => Ok((generate(g)?, Some(g.family.name().to_string()), g.seed)),
        Input::File(p) => {
            let q = quatqr::qmat::load(p)?;
            if !q.is_square() {
                return Err(CliError::Usage(format!("{} is not square", p.display())));
            }
            Ok((q, None, 0))
        }
    }
}

pub fn run(spec: &RunSpec) -> Result<RunReport> {
    let (q, family, seed) = load_input(&spec.input)?;
    let mut out = execute(spec.task, &spec.method, &q, spec.tol, spec.max_sweeps, 1)?;
    out.report.family = family;
    out.report.seed = seed;
    if let Some(dir) = &spec.out_dir {
        write_artifacts(dir, &out)?;
    }
    Ok(out.report)
}

fn write_artifacts(dir: &Path, out: &Outcome) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, m) in &out.factors {
        quatqr::qmat::save(dir.join(format!("{name}.qmat")), m)?;
    }
    let f = std::fs::File::create(dir.join("report.json"))?;
    serde_json::to_writer_pretty(f, &out.report)?;
    Ok(())
}

fn check_method(task: Task, method: &str) -> Result<()> {
    if task.methods().contains(&method) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "unknown method {method:?} for {}; expected one of {}",
            task.label(),
            task.methods().join(", ")
        )))
    }
}

/// Runs the decomposition `reps` times; the report carries the fastest wall
/// time and the operation count of the first run.
pub fn execute(
    task: Task,
    method: &str,
    q: &QuatMatrix,
    tol: f64,
    max_sweeps: Option<usize>,
    reps: usize,
) -> Result<Outcome> {
    check_method(task, method)?;
    let reps = reps.max(1);
    let mut best = f64::INFINITY;
    let mut ops = None;
    let mut last = None;
    for k in 0..reps {
        let start = Instant::now();
        let (res, c) = opcount::measure(|| decompose(task, method, q, tol, max_sweeps));
        best = best.min(start.elapsed().as_secs_f64());
        if k == 0 && opcount::enabled() {
            ops = Some(c.total());
        }
        last = Some(res?);
    }
    let raw = last.expect("at least one repetition");
    let mut out = evaluate(task, method, q, raw)?;
    out.report.wall_time_s = best;
    out.report.op_count = ops;
    Ok(out)
}

enum Raw {
    Hess(quatqr::HessenbergResult),
    Qr(quatqr::QRResult),
    Schur(quatqr::SchurResult),
}

fn decompose(task: Task, method: &str, q: &QuatMatrix, tol: f64, max_sweeps: Option<usize>) -> Result<Raw> {
    Ok(match task {
        Task::Hess => {
            let m = match method {
                "h1" => HessMethod::ViaH1,
                "h2" => HessMethod::ViaH2,
                _ => HessMethod::ViaH3,
            };
            Raw::Hess(hess_reduce(q, m, true)?)
        }
        Task::Qr => Raw::Qr(match method {
            "householder" => qr_full(q)?,
            "g1" => hess_qr_with(q, GivensVariant::G1)?,
            _ => hess_qr_with(q, GivensVariant::G2)?,
        }),
        Task::Schur | Task::Eig => {
            let opts = SchurOptions {
                tol,
                max_sweeps,
                accumulate: task == Task::Schur,
                pairs: if method == "keep" { PairPolicy::KeepComplex } else { PairPolicy::Split },
            };
            Raw::Schur(quaternion_schur_with(q, &opts)?)
        }
    })
}

fn evaluate(task: Task, method: &str, q: &QuatMatrix, raw: Raw) -> Result<Outcome> {
    let mut report = RunReport {
        task,
        method: method.to_string(),
        family: None,
        n: q.rows(),
        seed: 0,
        wall_time_s: 0.0,
        residual: None,
        structure_violation: 0.0,
        unitarity: None,
        op_count: None,
        converged: true,
        sweeps: 0,
        eigenvalues: None,
    };
    let mut factors = Vec::new();
    match raw {
        Raw::Hess(r) => {
            let w = r.w.expect("accumulated");
            report.residual = Some(metrics::similarity_residual(q, &w, &r.h));
            report.unitarity = Some(metrics::unitarity(&w));
            report.structure_violation = if method == "h1" {
                metrics::quaternion_hessenberg_re(&r.h)
            } else {
                metrics::hessenberg_re(&r.h)
            };
            factors.push(("H", r.h));
            factors.push(("W", w));
        }
        Raw::Qr(f) => {
            report.residual = Some(metrics::factor_residual(q, &f.w, &f.r));
            report.unitarity = Some(metrics::unitarity(&f.w));
            report.structure_violation = if method == "g1" {
                metrics::below_diagonal(&f.r)
            } else {
                metrics::violation(&f.r, StructureKind::UpperJRSTriangular)
            };
            factors.push(("W", f.w));
            factors.push(("R", f.r));
        }
        Raw::Schur(s) => {
            report.converged = s.converged;
            report.sweeps = s.iterations;
            report.structure_violation = metrics::violation(&s.t, StructureKind::JRSSchur);
            if let Some(w) = &s.w {
                report.residual = Some(metrics::schur_residual(q, w, &s.t));
                report.unitarity = Some(metrics::unitarity(w));
            }
            if task == Task::Eig {
                if s.converged {
                    let ev = eigs_from_schur(&s)?;
                    if let Ok(reference) = oracle_eigvals(q) {
                        let d = spectrum_distance(&ev, &reference)?;
                        report.residual = Some(if q.fro_norm() > 0.0 { d / q.fro_norm() } else { d });
                    }
                    report.eigenvalues = Some(ev.iter().map(|e| (e.re, e.im)).collect());
                }
            } else {
                factors.push(("T", s.t));
                factors.push(("W", s.w.expect("accumulated")));
            }
        }
    }
    Ok(Outcome { report, factors })
}
