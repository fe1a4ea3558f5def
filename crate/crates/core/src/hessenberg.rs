//! Unitary similarity reduction `H = W^* Q W` to upper Hessenberg form.

use crate::error::Result;
use crate::kernels;
use crate::matrix::QuatMatrix;
use crate::opcount;
use crate::quaternion::Quaternion;
use crate::rotations::{jrs_givens4, make_householder, HouseholderVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HessMethod {
    /// Quaternion Householder per column; the subdiagonal stays quaternion.
    ViaH1,
    /// `ViaH1` followed by phase rotations that make the subdiagonal real.
    ViaH2,
    /// Per-entry phases then a real Householder shared by the four blocks.
    ViaH3,
}

#[derive(Clone, Debug)]
pub struct HessenbergResult {
    pub h: QuatMatrix,
    pub w: Option<QuatMatrix>,
    pub method: HessMethod,
    /// Real parts of the subdiagonal, `h(i+1, i)` for `i = 0..n-1`.
    pub subdiag: Vec<f64>,
}

pub fn hess_reduce(q: &QuatMatrix, method: HessMethod, accumulate: bool) -> Result<HessenbergResult> {
    let n = q.require_square()?;
    if !q.is_finite() {
        return Err(crate::QuatError::NonFinite);
    }
    let mut h = q.clone();
    let mut w = accumulate.then(|| QuatMatrix::identity(n));
    match method {
        HessMethod::ViaH1 => via_h1(&mut h, w.as_mut())?,
        HessMethod::ViaH2 => {
            via_h1(&mut h, w.as_mut())?;
            realify_subdiagonal(&mut h, w.as_mut());
        }
        HessMethod::ViaH3 => via_h3(&mut h, w.as_mut()),
    }
    let subdiag = (1..n).map(|i| h.block(0)[(i, i - 1)]).collect();
    Ok(HessenbergResult { h, w, method, subdiag })
}

fn via_h1(h: &mut QuatMatrix, mut w: Option<&mut QuatMatrix>) -> Result<()> {
    let n = h.rows();
    for c in 0..n.saturating_sub(2) {
        let y: Vec<Quaternion> = (c + 1..n).map(|i| h.get(i, c)).collect();
        if y[1..].iter().all(|q| q.is_zero()) {
            continue;
        }
        let mut e1 = vec![0.0; y.len()];
        e1[0] = 1.0;
        let u = make_householder(&y, HouseholderVariant::H1, &e1)?;
        let lead = u.image()[0];
        // H1 is Hermitian, so the same transform acts on both sides.
        u.apply_left(h, c + 1..n, c + 1..n)?;
        u.apply_right(h, 0..n, c + 1..n)?;
        h.set(c + 1, c, lead);
        for i in c + 2..n {
            h.set(i, c, Quaternion::ZERO);
        }
        if let Some(w) = w.as_deref_mut() {
            u.apply_right(w, 1..n, c + 1..n)?;
        }
    }
    Ok(())
}

/// Makes every subdiagonal entry real and nonnegative with diagonal phase
/// similarities.
fn realify_subdiagonal(h: &mut QuatMatrix, mut w: Option<&mut QuatMatrix>) {
    let n = h.rows();
    for c in 0..n.saturating_sub(1) {
        let e = h.get(c + 1, c);
        if e.is_real() && e.w >= 0.0 {
            continue;
        }
        let g = jrs_givens4(e).phase();
        let mut p = h.planes_mut();
        kernels::phase_rows_left(&mut p, &[(c + 1, g.conj())], c + 1..n);
        kernels::phase_col_right(&mut p, c + 1, g, 0..n);
        h.set(c + 1, c, Quaternion::real(e.norm()));
        if let Some(w) = w.as_deref_mut() {
            kernels::phase_col_right(&mut w.planes_mut(), c + 1, g, 1..n);
        }
    }
}

fn via_h3(h: &mut QuatMatrix, mut w: Option<&mut QuatMatrix>) {
    let n = h.rows();
    for c in 0..n.saturating_sub(1) {
        // Phases that make column c real and nonnegative below the diagonal.
        let mut z = Vec::with_capacity(n - c - 1);
        let mut phases = Vec::new();
        for t in c + 1..n {
            let e = h.get(t, c);
            z.push(e.norm());
            if !(e.is_real() && e.w >= 0.0) && !e.is_zero() {
                phases.push((t, jrs_givens4(e).phase()));
            }
        }
        opcount::record(4 * z.len() as u64, 3 * z.len() as u64, 0, z.len() as u64);
        {
            let left: Vec<_> = phases.iter().map(|&(t, g)| (t, g.conj())).collect();
            let mut p = h.planes_mut();
            kernels::phase_rows_left(&mut p, &left, c + 1..n);
            for &(t, g) in &phases {
                kernels::phase_col_right(&mut p, t, g, 0..n);
            }
        }
        if let Some(w) = w.as_deref_mut() {
            let mut p = w.planes_mut();
            for &(t, g) in &phases {
                kernels::phase_col_right(&mut p, t, g, 1..n);
            }
        }
        for (t, &zt) in (c + 1..n).zip(&z) {
            h.set(t, c, Quaternion::real(zt));
        }
        if c + 2 >= n {
            continue;
        }
        let (v, beta, norm) = kernels::real_house_nonneg(&z);
        if beta == 0.0 {
            continue;
        }
        {
            let mut p = h.planes_mut();
            kernels::real_reflector_left(&mut p, &v, beta, c + 1, c + 1..n);
            kernels::real_reflector_right(&mut p, &v, beta, 0..n, c + 1);
        }
        h.set(c + 1, c, Quaternion::real(norm));
        for i in c + 2..n {
            h.set(i, c, Quaternion::ZERO);
        }
        if let Some(w) = w.as_deref_mut() {
            kernels::real_reflector_right(&mut w.planes_mut(), &v, beta, 1..n, c + 1);
        }
    }
}

/// Reduces a Hermitian matrix to a real symmetric tridiagonal `T0` with
/// `W^* Q W = T0`.
pub fn tridiag_hermitian(q: &QuatMatrix) -> Result<(nalgebra::DMatrix<f64>, QuatMatrix)> {
    let n = q.require_square()?;
    let asym = q.sub(&q.adjoint())?;
    let mut worst: f64 = 0.0;
    for b in asym.blocks() {
        worst = worst.max(b.amax());
    }
    if worst > 8.0 * f64::EPSILON * q.fro_norm() {
        return Err(crate::QuatError::NotHermitian { asymmetry: worst });
    }
    let r = hess_reduce(q, HessMethod::ViaH3, true)?;
    let mut t = nalgebra::DMatrix::zeros(n, n);
    for i in 0..n {
        t[(i, i)] = r.h.block(0)[(i, i)];
        if i + 1 < n {
            let s = r.subdiag[i];
            t[(i + 1, i)] = s;
            t[(i, i + 1)] = s;
        }
    }
    Ok((t, r.w.expect("accumulated")))
}
