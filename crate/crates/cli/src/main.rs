use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use qrbench::run::{Input, RunSpec};
use qrbench::{bench, generate, BenchSpec, CliError, Family, MatGenSpec, RunReport, Task};

#[derive(Parser)]
#[command(name = "qrbench", version, about = "Quaternion Hessenberg, QR and Schur decompositions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a test matrix and write it as QMAT.
    Gen(Common),
    /// Hessenberg reduction (methods h1, h2, h3).
    Hess(Common),
    /// QR factorization (methods g2, g1, householder).
    Qr(Common),
    /// Schur decomposition (methods split, keep).
    Schur(Common),
    /// Standard eigenvalues (method francis).
    Eig(Common),
    /// Time a task over a grid of orders and emit CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, default_value_t = 64)]
    n: usize,
    #[arg(long, env = "QRBENCH_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    method: Option<String>,
    #[arg(long, default_value_t = 1e-14)]
    tol: f64,
    #[arg(long)]
    max_sweeps: Option<usize>,
    /// Read the input matrix from a QMAT file instead of generating it.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// QMAT file for `gen`, output directory for the other verbs.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "hess")]
    task: Task,
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, value_delimiter = ',', default_values_t = [64, 128, 256])]
    n: Vec<usize>,
    #[arg(long, env = "QRBENCH_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',')]
    method: Vec<String>,
    #[arg(long, default_value_t = 1e-14)]
    tol: f64,
    #[arg(long)]
    max_sweeps: Option<usize>,
    /// Defaults to standard output.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn default_family(task: Task) -> Family {
    match task {
        Task::Hess => Family::Toeplitz5_1,
        Task::Qr => Family::RandomHessenberg,
        Task::Schur | Task::Eig => Family::RandomDense,
    }
}

fn gen(c: &Common) -> anyhow::Result<()> {
    let spec = MatGenSpec {
        family: c.family.unwrap_or(Family::RandomDense),
        n: c.n,
        seed: c.seed,
    };
    let m = generate(&spec)?;
    match &c.out {
        Some(p) => quatqr::qmat::save(p, &m).with_context(|| format!("writing {}", p.display()))?,
        None => quatqr::qmat::write(std::io::stdout().lock(), &m)?,
    }
    Ok(())
}

fn task(task: Task, c: &Common) -> anyhow::Result<RunReport> {
    let input = match &c.input {
        Some(p) => Input::File(p.clone()),
        None => Input::Generated(MatGenSpec {
            family: c.family.unwrap_or(default_family(task)),
            n: c.n,
            seed: c.seed,
        }),
    };
    let spec = RunSpec {
        task,
        method: c.method.clone().unwrap_or_else(|| task.default_method().to_string()),
        input,
        tol: c.tol,
        max_sweeps: c.max_sweeps,
        out_dir: c.out.clone(),
    };
    let report = qrbench::run(&spec)?;
    let mut stdout = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &report)?;
    writeln!(stdout)?;
    Ok(report)
}

fn run_bench(b: &BenchArgs) -> anyhow::Result<Vec<RunReport>> {
    let methods = if b.method.is_empty() {
        vec![b.task.default_method().to_string()]
    } else {
        b.method.clone()
    };
    let spec = BenchSpec {
        task: b.task,
        methods,
        n_grid: b.n.clone(),
        seed: b.seed,
        family: b.family.unwrap_or(default_family(b.task)),
        tol: b.tol,
        max_sweeps: b.max_sweeps,
    };
    let reports = match &b.csv {
        Some(p) => {
            let f = std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?;
            bench(&spec, f)?
        }
        None => bench(&spec, std::io::stdout().lock())?,
    };
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.cmd {
        Cmd::Gen(c) => gen(c).map(|_| true),
        Cmd::Hess(c) => task(Task::Hess, c).map(|r| r.converged),
        Cmd::Qr(c) => task(Task::Qr, c).map(|r| r.converged),
        Cmd::Schur(c) => task(Task::Schur, c).map(|r| r.converged),
        Cmd::Eig(c) => task(Task::Eig, c).map(|r| r.converged),
        Cmd::Bench(b) => run_bench(b).map(|r| r.iter().all(|x| x.converged)),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("qrbench: iteration did not converge");
            ExitCode::from(2)
        }
        Err(e) => {
            match e.downcast_ref::<CliError>() {
                Some(CliError::Usage(msg)) => eprintln!("qrbench: usage: {msg}"),
                _ => eprintln!("qrbench: {e:#}"),
            }
            ExitCode::from(1)
        }
    }
}
