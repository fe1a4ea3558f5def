//! QR factorizations `A = W R` with `R` upper triangular and real on the diagonal.

use crate::error::{QuatError, Result};
use crate::kernels;
use crate::matrix::QuatMatrix;
use crate::quaternion::Quaternion;
use crate::rotations::{make_givens, make_householder, Givens2, GivensVariant, HouseholderVariant};
use crate::structure::hessenberg_violation;

#[derive(Clone, Debug)]
pub struct QRResult {
    pub w: QuatMatrix,
    pub r: QuatMatrix,
}

/// Householder QR of an `m x n` matrix with `m >= n`. `W` is `m x m`.
pub fn qr_full(a: &QuatMatrix) -> Result<QRResult> {
    let (m, n) = a.shape();
    if m < n {
        return Err(QuatError::TooFewRows { op: "qr_full", rows: m, cols: n });
    }
    if !a.is_finite() {
        return Err(QuatError::NonFinite);
    }
    let mut r = a.clone();
    let mut w = QuatMatrix::identity(m);
    for c in 0..n {
        let y: Vec<Quaternion> = (c..m).map(|i| r.get(i, c)).collect();
        if y.iter().all(|q| q.is_zero()) {
            continue;
        }
        let mut e1 = vec![0.0; y.len()];
        e1[0] = 1.0;
        let u = make_householder(&y, HouseholderVariant::H2, &e1)?;
        let lead = u.image()[0];
        u.apply_left(&mut r, c..m, c + 1..n)?;
        r.set(c, c, lead);
        for i in c + 1..m {
            r.set(i, c, Quaternion::ZERO);
        }
        u.adjoint().apply_right(&mut w, 0..m, c..m)?;
    }
    Ok(QRResult { w, r })
}

/// Givens QR of an upper Hessenberg matrix (the subdiagonal may be non-real)
/// using G2 rotations.
pub fn hess_qr(h: &QuatMatrix) -> Result<QRResult> {
    hess_qr_with(h, GivensVariant::G2)
}

pub fn hess_qr_with(h: &QuatMatrix, variant: GivensVariant) -> Result<QRResult> {
    let n = h.require_square()?;
    let (r, rots) = factor_hessenberg(h, variant)?;
    let mut w = QuatMatrix::identity(n);
    for (s, g) in rots.iter().enumerate() {
        if let Some(g) = g {
            g.apply_right(&mut w, s, s + 1, 0..(s + 2).min(n));
        }
    }
    if let Some(g) = last_phase(&r, variant) {
        kernels::phase_col_right(&mut w.planes_mut(), n - 1, g, 0..n);
    }
    let mut r = r;
    finish_last(&mut r, variant);
    Ok(QRResult { w, r })
}

fn check_hessenberg(h: &QuatMatrix) -> Result<QuatMatrix> {
    if !h.is_finite() {
        return Err(QuatError::NonFinite);
    }
    let (worst, at) = hessenberg_violation(h);
    if worst > 1e-14 * h.fro_norm() {
        let (block, row, col) = at.expect("witness accompanies a violation");
        return Err(QuatError::StructureViolation {
            expected: "upper Hessenberg",
            block,
            row,
            col,
            magnitude: worst,
        });
    }
    let mut r = h.clone();
    let n = r.rows();
    for j in 0..n {
        for i in j + 2..n {
            r.set(i, j, Quaternion::ZERO);
        }
    }
    Ok(r)
}

/// Triangularizes in place; returns `R` (last diagonal entry not yet made
/// real) and the rotation used at each step.
fn factor_hessenberg(h: &QuatMatrix, variant: GivensVariant) -> Result<(QuatMatrix, Vec<Option<Givens2>>)> {
    let mut r = check_hessenberg(h)?;
    let n = r.rows();
    let mut rots = Vec::with_capacity(n.saturating_sub(1));
    for s in 0..n.saturating_sub(1) {
        let x = [r.get(s, s), r.get(s + 1, s)];
        let g = match make_givens(x, variant) {
            Ok(g) => g,
            Err(QuatError::ZeroVector) => {
                rots.push(None);
                continue;
            }
            Err(e) => return Err(e),
        };
        g.apply_left_adjoint(&mut r, s, s + 1, s + 1..n);
        let lead = match variant {
            GivensVariant::G2 => Quaternion::real((x[0].norm_sqr() + x[1].norm_sqr()).sqrt()),
            GivensVariant::G1 => g.apply_adjoint(x)[0],
        };
        r.set(s, s, lead);
        r.set(s + 1, s, Quaternion::ZERO);
        rots.push(Some(g));
    }
    Ok((r, rots))
}

/// Phase that makes the last diagonal entry real (G2 only).
fn last_phase(r: &QuatMatrix, variant: GivensVariant) -> Option<Quaternion> {
    let n = r.rows();
    if n == 0 || variant != GivensVariant::G2 {
        return None;
    }
    let q = r.get(n - 1, n - 1);
    if q.is_real() && q.w >= 0.0 || q.is_zero() {
        return None;
    }
    Some(q.phase())
}

fn finish_last(r: &mut QuatMatrix, variant: GivensVariant) {
    let n = r.rows();
    if last_phase(r, variant).is_some() {
        let q = r.get(n - 1, n - 1);
        r.set(n - 1, n - 1, Quaternion::real(q.norm()));
    }
}

/// `iters` steps of `H <- R W` where `H = W R` by [`hess_qr`].
pub fn qr_iteration_unshifted(h: &QuatMatrix, iters: usize) -> Result<QuatMatrix> {
    let n = h.require_square()?;
    let mut cur = h.clone();
    for _ in 0..iters {
        let (mut r, rots) = factor_hessenberg(&cur, GivensVariant::G2)?;
        let phase = last_phase(&r, GivensVariant::G2);
        finish_last(&mut r, GivensVariant::G2);
        for (s, g) in rots.iter().enumerate() {
            if let Some(g) = g {
                g.apply_right(&mut r, s, s + 1, 0..(s + 2).min(n));
            }
        }
        if let Some(g) = phase {
            kernels::phase_col_right(&mut r.planes_mut(), n - 1, g, 0..n);
        }
        cur = r;
    }
    Ok(cur)
}
