use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuatError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("{op} needs at least as many rows as columns, got {rows}x{cols}")]
    TooFewRows {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("zero vector has no well-defined reflection")]
    ZeroVector,
    #[error("target vector must be a real unit vector")]
    BadTarget,
    #[error("window {lo}..={hi} is invalid for a {n}x{n} matrix")]
    BadWindow { lo: usize, hi: usize, n: usize },
    #[error("subdiagonal entry ({row},{col}) is zero; window is not unreduced")]
    ReducedWindow { row: usize, col: usize },
    #[error("input is not {expected}: block B{block} entry ({row},{col}) has magnitude {magnitude:e}")]
    StructureViolation {
        expected: &'static str,
        block: usize,
        row: usize,
        col: usize,
        magnitude: f64,
    },
    #[error("matrix is not Hermitian (asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("oracle size cap exceeded: n = {n} > {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("oracle QR iteration failed to converge")]
    OracleDiverged,
    #[error("spectra have different sizes ({left} vs {right})")]
    SpectrumSize { left: usize, right: usize },
    #[error("small eigenproblem failed to converge")]
    SmallEigen,
    #[error("Schur iteration did not converge after {iterations} Francis steps")]
    NotConverged { iterations: usize },
}

pub type Result<T> = std::result::Result<T, QuatError>;
