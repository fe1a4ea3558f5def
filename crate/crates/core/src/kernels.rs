//! In-place update kernels on the raw block planes. Each kernel records the
//! real operations it performs.

use std::ops::Range;

use crate::matrix::Planes;
use crate::opcount;
use crate::quaternion::Quaternion;

/// `A(t, j) <- g_t * A(t, j)` for every listed row and `j` in `cols`.
pub(crate) fn phase_rows_left(p: &mut Planes, rows: &[(usize, Quaternion)], cols: Range<usize>) {
    if rows.is_empty() || cols.is_empty() {
        return;
    }
    for j in cols.clone() {
        for &(t, g) in rows {
            let a = p.get(t, j);
            p.set(t, j, g * a);
        }
    }
    opcount::qmul((rows.len() * cols.len()) as u64);
}

/// `A(i, col) <- A(i, col) * g` for `i` in `rows`.
pub(crate) fn phase_col_right(p: &mut Planes, col: usize, g: Quaternion, rows: Range<usize>) {
    let ld = p.ld;
    let base = col * ld;
    let [p0, p1, p2, p3] = &mut p.p;
    for i in rows.clone() {
        let k = base + i;
        let a = Quaternion::new(p0[k], p1[k], p2[k], p3[k]) * g;
        p0[k] = a.w;
        p1[k] = a.x;
        p2[k] = a.y;
        p3[k] = a.z;
    }
    opcount::qmul(rows.len() as u64);
}

/// `A(row0.., cols) <- (I - beta v v^T) A(row0.., cols)` on all four planes.
pub(crate) fn real_reflector_left(p: &mut Planes, v: &[f64], beta: f64, row0: usize, cols: Range<usize>) {
    let m = v.len();
    if beta == 0.0 || m == 0 || cols.is_empty() {
        return;
    }
    let ld = p.ld;
    for plane in p.p.iter_mut() {
        for j in cols.clone() {
            let col = &mut plane[j * ld + row0..j * ld + row0 + m];
            let mut s = 0.0;
            for (a, vi) in col.iter().zip(v) {
                s += vi * a;
            }
            s *= beta;
            for (a, vi) in col.iter_mut().zip(v) {
                *a -= vi * s;
            }
        }
    }
    let k = 4 * cols.len() as u64;
    let m = m as u64;
    opcount::record(k * (2 * m + 1), k * (2 * m - 1), 0, 0);
}

/// `A(rows, col0..) <- A(rows, col0..) (I - beta v v^T)` on all four planes.
pub(crate) fn real_reflector_right(p: &mut Planes, v: &[f64], beta: f64, rows: Range<usize>, col0: usize) {
    let m = v.len();
    if beta == 0.0 || m == 0 || rows.is_empty() {
        return;
    }
    let ld = p.ld;
    let mut s = vec![0.0; rows.len()];
    for plane in p.p.iter_mut() {
        s.iter_mut().for_each(|x| *x = 0.0);
        for (c, vc) in v.iter().enumerate() {
            let col = &plane[(col0 + c) * ld + rows.start..(col0 + c) * ld + rows.end];
            for (si, a) in s.iter_mut().zip(col) {
                *si += a * vc;
            }
        }
        for si in s.iter_mut() {
            *si *= beta;
        }
        for (c, vc) in v.iter().enumerate() {
            let col = &mut plane[(col0 + c) * ld + rows.start..(col0 + c) * ld + rows.end];
            for (a, si) in col.iter_mut().zip(&s) {
                *a -= si * vc;
            }
        }
    }
    let k = 4 * rows.len() as u64;
    let m = m as u64;
    opcount::record(k * (2 * m + 1), k * (2 * m - 1), 0, 0);
}

/// `A(row0.., cols) <- (I - beta u u^*) A(row0.., cols)`.
pub(crate) fn quat_reflector_left(
    p: &mut Planes,
    u: &[Quaternion],
    beta: f64,
    row0: usize,
    cols: Range<usize>,
) {
    let m = u.len();
    if beta == 0.0 || m == 0 || cols.is_empty() {
        return;
    }
    for j in cols.clone() {
        let mut s = Quaternion::ZERO;
        for (i, ui) in u.iter().enumerate() {
            s += ui.conj() * p.get(row0 + i, j);
        }
        s = s * beta;
        for (i, ui) in u.iter().enumerate() {
            let a = p.get(row0 + i, j);
            p.set(row0 + i, j, a - *ui * s);
        }
    }
    let k = cols.len() as u64;
    let m = m as u64;
    opcount::qmul(k * 2 * m);
    opcount::qadd(k * (2 * m - 1));
    opcount::record(4 * k, 0, 0, 0);
}

/// `A(rows, col0..) <- A(rows, col0..) (I - beta u u^*)`.
pub(crate) fn quat_reflector_right(
    p: &mut Planes,
    u: &[Quaternion],
    beta: f64,
    rows: Range<usize>,
    col0: usize,
) {
    let m = u.len();
    if beta == 0.0 || m == 0 || rows.is_empty() {
        return;
    }
    let mut s = vec![Quaternion::ZERO; rows.len()];
    for (c, uc) in u.iter().enumerate() {
        for (si, i) in s.iter_mut().zip(rows.clone()) {
            *si += p.get(i, col0 + c) * *uc;
        }
    }
    for si in s.iter_mut() {
        *si = *si * beta;
    }
    for (c, uc) in u.iter().enumerate() {
        let uh = uc.conj();
        for (si, i) in s.iter().zip(rows.clone()) {
            let a = p.get(i, col0 + c);
            p.set(i, col0 + c, a - *si * uh);
        }
    }
    let k = rows.len() as u64;
    let m = m as u64;
    opcount::qmul(k * 2 * m);
    opcount::qadd(k * (2 * m - 1));
    opcount::record(4 * k, 0, 0, 0);
}

/// `[A(r1, j); A(r2, j)] <- M [A(r1, j); A(r2, j)]` for `j` in `cols`.
pub(crate) fn rot_rows_left(p: &mut Planes, m: [[Quaternion; 2]; 2], r1: usize, r2: usize, cols: Range<usize>) {
    for j in cols.clone() {
        let a = p.get(r1, j);
        let b = p.get(r2, j);
        p.set(r1, j, m[0][0] * a + m[0][1] * b);
        p.set(r2, j, m[1][0] * a + m[1][1] * b);
    }
    let k = cols.len() as u64;
    opcount::qmul(4 * k);
    opcount::qadd(2 * k);
}

/// `[A(i, c1), A(i, c2)] <- [A(i, c1), A(i, c2)] M` for `i` in `rows`.
pub(crate) fn rot_cols_right(p: &mut Planes, m: [[Quaternion; 2]; 2], c1: usize, c2: usize, rows: Range<usize>) {
    for i in rows.clone() {
        let a = p.get(i, c1);
        let b = p.get(i, c2);
        p.set(i, c1, a * m[0][0] + b * m[1][0]);
        p.set(i, c2, a * m[0][1] + b * m[1][1]);
    }
    let k = rows.len() as u64;
    opcount::qmul(4 * k);
    opcount::qadd(2 * k);
}

/// Real Householder vector for a vector with `z[0] >= 0`, mapping `z` to
/// `(||z||, 0, ..)`. Returns `(v, beta, norm)` with `v[0] = 1`; `beta = 0`
/// when `z` is already aligned with `e1`.
pub(crate) fn real_house_nonneg(z: &[f64]) -> (Vec<f64>, f64, f64) {
    let m = z.len();
    let tail: f64 = z[1..].iter().map(|x| x * x).sum();
    let norm = (z[0] * z[0] + tail).sqrt();
    opcount::record(m as u64, m.saturating_sub(1) as u64, 0, 1);
    if tail == 0.0 {
        return (vec![0.0; m], 0.0, z[0].abs());
    }
    // v0 = z0 - norm, computed without cancellation.
    let v0 = -tail / (z[0] + norm);
    let mut v = Vec::with_capacity(m);
    v.push(1.0);
    v.extend(z[1..].iter().map(|x| x / v0));
    let beta = 2.0 * v0 * v0 / (v0 * v0 + tail);
    opcount::record(3, 3, m as u64 + 1, 0);
    (v, beta, norm)
}
