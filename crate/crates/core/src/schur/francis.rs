//! Implicit double-shift Francis steps on upper JRS-Hessenberg matrices.

use num_complex::Complex64;

use crate::error::{QuatError, Result};
use crate::kernels;
use crate::matrix::{Planes, QuatMatrix};
use crate::opcount;
use crate::quaternion::Quaternion;
use crate::spectra::fold_conjugates;

use super::small::adjoint_eigenvalues;

/// Real coefficients of the shift polynomial `z^2 - t z + d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ShiftPair {
    pub t: f64,
    pub d: f64,
    /// The standard eigenvalue the shift targets.
    pub kappa: Complex64,
}

impl ShiftPair {
    pub fn from_kappa(kappa: Complex64) -> Self {
        Self {
            t: 2.0 * kappa.re,
            d: kappa.norm_sqr(),
            kappa,
        }
    }
}

/// Shift from the trailing 2x2 block `h[hi-1..=hi, hi-1..=hi]`: the standard
/// eigenvalue of smallest modulus (ties go to the larger imaginary part).
pub fn trailing_shift(h: &QuatMatrix, hi: usize) -> Result<ShiftPair> {
    if hi == 0 || hi >= h.rows() {
        return Err(QuatError::BadWindow { lo: hi.saturating_sub(1), hi, n: h.rows() });
    }
    let b = h.submatrix(hi - 1..hi + 1, hi - 1..hi + 1);
    let vals = fold_conjugates(&adjoint_eigenvalues(&b)?, 0.0);
    let best = vals
        .iter()
        .min_by(|a, b| {
            let (ma, mb) = (a.modulus(), b.modulus());
            ma.partial_cmp(&mb)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(b.im.partial_cmp(&a.im).unwrap_or(std::cmp::Ordering::Equal))
        })
        .ok_or(QuatError::SmallEigen)?;
    Ok(ShiftPair::from_kappa(Complex64::new(best.re, best.im)))
}

/// First column of `H^2 - t H + d I` restricted to the window starting at
/// `lo`; only its first three entries are nonzero.
pub fn francis_first_col(h: &QuatMatrix, lo: usize, t: f64, d: f64) -> Result<[Quaternion; 3]> {
    if lo + 2 >= h.rows() {
        return Err(QuatError::BadWindow { lo, hi: lo + 2, n: h.rows() });
    }
    let h11 = h.get(lo, lo);
    let h12 = h.get(lo, lo + 1);
    let h21 = h.get(lo + 1, lo);
    let h22 = h.get(lo + 1, lo + 1);
    let h32 = h.get(lo + 2, lo + 1);
    opcount::qmul(5);
    opcount::record(8, 4 * 3 + 1, 0, 0);
    Ok([
        h11 * h11 + h12 * h21 - h11 * t + Quaternion::real(d),
        h21 * h11 + h22 * h21 - h21 * t,
        h32 * h21,
    ])
}

/// One Francis step on the window `lo..=hi` (at least 3x3, unreduced).
/// Updates the full rows and columns of `h` and, if given, the columns of `w`.
pub fn francis_step(
    h: &mut QuatMatrix,
    lo: usize,
    hi: usize,
    shift: ShiftPair,
    w: Option<&mut QuatMatrix>,
) -> Result<()> {
    let n = h.require_square()?;
    if hi >= n || hi < lo + 2 {
        return Err(QuatError::BadWindow { lo, hi, n });
    }
    for i in lo + 1..=hi {
        if h.get(i, i - 1).is_zero() {
            return Err(QuatError::ReducedWindow { row: i, col: i - 1 });
        }
    }
    if let Some(w) = &w {
        if w.cols() != n {
            return Err(QuatError::DimensionMismatch {
                op: "francis_step",
                left: h.shape(),
                right: w.shape(),
            });
        }
    }
    step(h, lo, hi, shift.t, shift.d, w, true)
}

pub(crate) fn step(
    h: &mut QuatMatrix,
    lo: usize,
    hi: usize,
    t: f64,
    d: f64,
    mut w: Option<&mut QuatMatrix>,
    full: bool,
) -> Result<()> {
    let n = h.rows();
    let col_end = if full { n } else { hi + 1 };
    let row_start = if full { 0 } else { lo };
    let x = francis_first_col(h, lo, t, d)?;

    for k in lo..hi {
        let nr = 3.min(hi - k + 1);
        let y: Vec<Quaternion> = if k == lo {
            x[..nr].to_vec()
        } else {
            (0..nr).map(|i| h.get(k + i, k - 1)).collect()
        };
        let mut z = [0.0; 3];
        let mut left = Vec::with_capacity(3);
        let mut right = Vec::with_capacity(3);
        for (i, q) in y.iter().enumerate() {
            z[i] = q.norm();
            if !q.is_zero() && !(q.is_real() && q.w >= 0.0) {
                let g = *q / z[i];
                left.push((k + i, g.conj()));
                right.push((k + i, g));
            }
        }
        opcount::record(4 * nr as u64, 3 * nr as u64, 4 * right.len() as u64, nr as u64);
        let (v, beta, sigma) = kernels::real_house_nonneg(&z[..nr]);
        let cols = if k == lo { lo } else { k }..col_end;
        let rows = row_start..(k + nr + 1).min(hi + 1);
        {
            let mut p = h.planes_mut();
            apply_both(&mut p, &left, &right, &v, beta, k, cols, rows);
        }
        if k > lo {
            h.set(k, k - 1, Quaternion::real(sigma));
            for i in 1..nr {
                h.set(k + i, k - 1, Quaternion::ZERO);
            }
        }
        if let Some(w) = w.as_deref_mut() {
            let mut p = w.planes_mut();
            let all = 0..p.ld;
            apply_both(&mut p, &[], &right, &v, beta, k, 0..0, all);
        }
    }

    // The last right update leaves h[hi, hi-1] non-real.
    let e = h.get(hi, hi - 1);
    if !(e.is_real() && e.w >= 0.0) && !e.is_zero() {
        let ne = e.norm();
        let g = e / ne;
        opcount::record(4, 3, 4, 1);
        {
            let mut p = h.planes_mut();
            kernels::phase_rows_left(&mut p, &[(hi, g.conj())], hi..col_end);
            kernels::phase_col_right(&mut p, hi, g, row_start..hi + 1);
        }
        h.set(hi, hi - 1, Quaternion::real(ne));
        if let Some(w) = w {
            let mut p = w.planes_mut();
            let all = 0..p.ld;
            kernels::phase_col_right(&mut p, hi, g, all);
        }
    }
    Ok(())
}

/// Applies `U^* = P D^*` from the left on `cols` and `U = D P` from the right
/// on `rows`, where `D` holds the phases and `P = I - beta v v^T` acts on
/// indices `k..k+v.len()`.
#[allow(clippy::too_many_arguments)]
fn apply_both(
    p: &mut Planes,
    left: &[(usize, Quaternion)],
    right: &[(usize, Quaternion)],
    v: &[f64],
    beta: f64,
    k: usize,
    cols: std::ops::Range<usize>,
    rows: std::ops::Range<usize>,
) {
    if !cols.is_empty() {
        kernels::phase_rows_left(p, left, cols.clone());
        kernels::real_reflector_left(p, v, beta, k, cols);
    }
    if !rows.is_empty() {
        for &(c, g) in right {
            kernels::phase_col_right(p, c, g, rows.clone());
        }
        kernels::real_reflector_right(p, v, beta, rows, k);
    }
}
