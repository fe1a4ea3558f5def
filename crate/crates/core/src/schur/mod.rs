//! JRS-Schur decomposition `T = W^* Q W` by implicit double-shift QR.

mod francis;
pub(crate) mod small;

pub use francis::{francis_first_col, francis_step, trailing_shift, ShiftPair};

use num_complex::Complex64;

use crate::error::{QuatError, Result};
use crate::hessenberg::{hess_reduce, HessMethod};
use crate::matrix::QuatMatrix;
use crate::quaternion::Quaternion;
use crate::rotations::{make_givens, GivensVariant};
use crate::spectra::fold_conjugates;
use crate::structure::{check_structure, StructureKind};

/// How a converged 2x2 window is finished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairPolicy {
    /// Always triangularize with an eigenvector, so `T` is upper triangular.
    #[default]
    Split,
    /// Keep windows whose standard eigenvalues are both non-real as 2x2
    /// blocks; split the rest.
    KeepComplex,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchurOptions {
    /// Relative deflation tolerance.
    pub tol: f64,
    /// Budget of Francis steps; `None` means `30 n`.
    pub max_sweeps: Option<usize>,
    /// Accumulate `W` and keep the full `T` up to date.
    pub accumulate: bool,
    pub pairs: PairPolicy,
}

impl Default for SchurOptions {
    fn default() -> Self {
        Self {
            tol: 1e-14,
            max_sweeps: None,
            accumulate: true,
            pairs: PairPolicy::Split,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SchurResult {
    /// Quasi upper triangular. When `W` was not accumulated only the
    /// diagonal blocks are meaningful.
    pub t: QuatMatrix,
    pub w: Option<QuatMatrix>,
    /// Sizes of the diagonal blocks from top to bottom. A block larger than
    /// 2 is an unconverged window.
    pub blocks: Vec<usize>,
    /// Francis steps performed.
    pub iterations: usize,
    pub converged: bool,
}

/// Reduces `q` to Hessenberg form with [`HessMethod::ViaH3`] and runs
/// [`jrs_schur`], accumulating `W`.
pub fn quaternion_schur(q: &QuatMatrix, tol: f64, max_sweeps: Option<usize>) -> Result<SchurResult> {
    quaternion_schur_with(
        q,
        &SchurOptions {
            tol,
            max_sweeps,
            ..SchurOptions::default()
        },
    )
}

pub fn quaternion_schur_with(q: &QuatMatrix, opts: &SchurOptions) -> Result<SchurResult> {
    let hr = hess_reduce(q, HessMethod::ViaH3, opts.accumulate)?;
    run(hr.h, hr.w, opts)
}

/// Schur form of an upper JRS-Hessenberg matrix.
pub fn jrs_schur(h: &QuatMatrix, opts: &SchurOptions) -> Result<SchurResult> {
    let n = h.require_square()?;
    if !h.is_finite() {
        return Err(QuatError::NonFinite);
    }
    check_structure(h, StructureKind::UpperJRSHessenberg, 0.0)?
        .into_result(StructureKind::UpperJRSHessenberg)?;
    let w = opts.accumulate.then(|| QuatMatrix::identity(n));
    run(h.clone(), w, opts)
}

fn run(mut h: QuatMatrix, mut w: Option<QuatMatrix>, opts: &SchurOptions) -> Result<SchurResult> {
    let n = h.rows();
    let full = opts.accumulate;
    let budget = opts.max_sweeps.unwrap_or(30 * n);
    let norm = h.fro_norm();
    let mut steps = 0;
    let mut its = 0;
    let mut converged = true;
    let mut hi = n;

    while hi > 0 {
        let top = hi - 1;
        let lo = find_lo(&mut h, top, opts.tol, norm);
        if lo == top {
            hi -= 1;
            its = 0;
            continue;
        }
        if lo + 1 == top {
            resolve_pair(&mut h, w.as_mut(), lo, full, opts.pairs)?;
            hi -= 2;
            its = 0;
            continue;
        }
        if steps >= budget {
            converged = false;
            break;
        }
        let shift = if its > 0 && its % 10 == 0 {
            let s = h.get(top, top - 1).norm() + h.get(top - 1, top - 2).norm();
            ShiftPair::from_kappa(Complex64::new(s, 0.0))
        } else {
            trailing_shift(&h, top)?
        };
        francis::step(&mut h, lo, top, shift.t, shift.d, w.as_mut(), full)?;
        its += 1;
        steps += 1;
    }

    let blocks = block_sizes(&h);
    Ok(SchurResult {
        t: h,
        w,
        blocks,
        iterations: steps,
        converged,
    })
}

/// Start of the unreduced window ending at `hi`; negligible subdiagonal
/// entries found on the way are set to zero.
fn find_lo(h: &mut QuatMatrix, hi: usize, tol: f64, norm: f64) -> usize {
    let mut l = hi;
    while l > 0 {
        let s = h.get(l, l - 1).norm();
        if s == 0.0 {
            break;
        }
        let mut scale = h.get(l - 1, l - 1).norm() + h.get(l, l).norm();
        if scale == 0.0 {
            scale = norm;
        }
        if s < tol * scale {
            h.set(l, l - 1, Quaternion::ZERO);
            break;
        }
        l -= 1;
    }
    l
}

/// Finishes the 2x2 window at `lo`.
fn resolve_pair(
    h: &mut QuatMatrix,
    w: Option<&mut QuatMatrix>,
    lo: usize,
    full: bool,
    policy: PairPolicy,
) -> Result<()> {
    let n = h.rows();
    let b = h.submatrix(lo..lo + 2, lo..lo + 2);
    let vals = small::adjoint_eigenvalues(&b)?;
    let snap = 1e-13 * b.fro_norm();
    let std = fold_conjugates(&vals, snap);
    let real = std.iter().find(|e| e.im == 0.0);
    let lambda = match (real, policy) {
        (Some(e), _) => Complex64::new(e.re, 0.0),
        (None, PairPolicy::KeepComplex) => return Ok(()),
        (None, PairPolicy::Split) => Complex64::new(std[0].re, std[0].im),
    };
    let x = small::eigenvector(&b, lambda)?;
    let g = make_givens([x[0], x[1]], GivensVariant::G2)?;
    let (col_end, row_start) = if full { (n, 0) } else { (lo + 2, lo) };
    g.apply_left_adjoint(h, lo, lo + 1, lo..col_end);
    g.apply_right(h, lo, lo + 1, row_start..lo + 2);
    h.set(lo + 1, lo, Quaternion::ZERO);
    if let Some(w) = w {
        let m = w.rows();
        g.apply_right(w, lo, lo + 1, 0..m);
    }
    Ok(())
}

fn block_sizes(t: &QuatMatrix) -> Vec<usize> {
    let n = t.rows();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && !t.get(j + 1, j).is_zero() {
            j += 1;
        }
        out.push(j - i + 1);
        i = j + 1;
    }
    out
}
