//! Reference eigenvalues from the complex adjoint, computed with a plain
//! complex Hessenberg reduction and single-shift QR. Shares no code with the
//! structured solvers.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{fold_conjugates, StdEigenvalue};
use crate::error::{QuatError, Result};
use crate::matrix::QuatMatrix;

/// Largest `n` accepted by [`oracle_eigvals`].
pub const ORACLE_CAP: usize = 128;

pub fn oracle_eigvals(q: &QuatMatrix) -> Result<Vec<StdEigenvalue>> {
    oracle_eigvals_capped(q, ORACLE_CAP)
}

pub fn oracle_eigvals_capped(q: &QuatMatrix, cap: usize) -> Result<Vec<StdEigenvalue>> {
    let n = q.require_square()?;
    if n > cap {
        return Err(QuatError::OracleCap { n, cap });
    }
    if !q.is_finite() {
        return Err(QuatError::NonFinite);
    }
    let vals = complex_eigenvalues(q.complex_adjoint())?;
    Ok(fold_conjugates(&vals, 1e-13 * q.fro_norm()))
}

fn complex_eigenvalues(mut a: DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    let n = a.nrows();
    reduce_hessenberg(&mut a);
    let norm = a.norm();
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(n);
    let mut hi = n;
    let mut its = 0;
    let mut total = 0;
    while hi > 0 {
        let top = hi - 1;
        let mut l = top;
        while l > 0 {
            let s = a[(l, l - 1)].norm();
            let mut scale = a[(l - 1, l - 1)].norm() + a[(l, l)].norm();
            if scale == 0.0 {
                scale = norm;
            }
            if s <= f64::EPSILON * scale {
                a[(l, l - 1)] = zero;
                break;
            }
            l -= 1;
        }
        if l == top {
            out.push(a[(top, top)]);
            hi -= 1;
            its = 0;
            continue;
        }
        its += 1;
        total += 1;
        if its > 60 || total > 60 * n {
            return Err(QuatError::OracleDiverged);
        }
        let mu = if its % 10 == 0 {
            let s = a[(top, top - 1)].re.abs() + if top >= l + 2 { a[(top - 1, top - 2)].re.abs() } else { 0.0 };
            a[(top, top)] + s
        } else {
            wilkinson(a[(top - 1, top - 1)], a[(top - 1, top)], a[(top, top - 1)], a[(top, top)])
        };
        qr_sweep(&mut a, l, top, mu);
    }
    Ok(out)
}

fn reduce_hessenberg(a: &mut DMatrix<Complex64>) {
    let n = a.nrows();
    for k in 0..n.saturating_sub(2) {
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let xn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xn == 0.0 {
            continue;
        }
        let x0 = v[0];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        v[0] = x0 + phase * xn;
        let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in v.iter_mut() {
            *z /= vn;
        }
        // A <- (I - 2 v v^H) A (I - 2 v v^H) on the trailing part.
        for j in k..n {
            let mut s = Complex64::new(0.0, 0.0);
            for (i, vi) in v.iter().enumerate() {
                s += vi.conj() * a[(k + 1 + i, j)];
            }
            for (i, vi) in v.iter().enumerate() {
                a[(k + 1 + i, j)] -= *vi * s * 2.0;
            }
        }
        for i in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for (j, vj) in v.iter().enumerate() {
                s += a[(i, k + 1 + j)] * vj;
            }
            for (j, vj) in v.iter().enumerate() {
                a[(i, k + 1 + j)] -= s * vj.conj() * 2.0;
            }
        }
        for i in k + 2..n {
            a[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Eigenvalue of `[[a, b], [c, d]]` closer to `d`.
fn wilkinson(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m1 = (a + d) * 0.5 + disc;
    let m2 = (a + d) * 0.5 - disc;
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// One implicit single-shift QR sweep on rows/columns `l..=hi`.
fn qr_sweep(a: &mut DMatrix<Complex64>, l: usize, hi: usize, mu: Complex64) {
    let mut x = a[(l, l)] - mu;
    let mut y = a[(l + 1, l)];
    for k in l..hi {
        if k > l {
            x = a[(k, k - 1)];
            y = a[(k + 1, k - 1)];
        }
        let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
        if r == 0.0 {
            continue;
        }
        let (c, s) = if x.norm() == 0.0 {
            (0.0, y.conj() / y.norm())
        } else {
            let ph = x / x.norm();
            (x.norm() / r, ph * y.conj() / r)
        };
        // Rows k, k+1 <- G [row_k; row_k+1] with G = [[c, s], [-conj(s), c]].
        let j0 = if k > l { k - 1 } else { l };
        for j in j0..=hi {
            let p = a[(k, j)];
            let q = a[(k + 1, j)];
            a[(k, j)] = p * c + s * q;
            a[(k + 1, j)] = -s.conj() * p + q * c;
        }
        // Columns k, k+1 <- [col_k, col_k+1] G^H.
        let i1 = (k + 2).min(hi);
        for i in l..=i1 {
            let p = a[(i, k)];
            let q = a[(i, k + 1)];
            a[(i, k)] = p * c + q * s.conj();
            a[(i, k + 1)] = -p * s + q * c;
        }
        if k > l {
            a[(k + 1, k - 1)] = Complex64::new(0.0, 0.0);
        }
    }
}
