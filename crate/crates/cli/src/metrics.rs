//! Residuals recomputed from inputs and outputs.

use quatqr::{check_structure, QuatMatrix, StructureKind};

fn rel(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

fn tril_norm(b: &nalgebra::DMatrix<f64>, k: usize) -> f64 {
    let n = b.nrows();
    let mut s = 0.0;
    for j in 0..b.ncols() {
        for i in j + k..n {
            s += b[(i, j)] * b[(i, j)];
        }
    }
    s.sqrt()
}

/// `(||tril(H0,-2)|| + sum_s ||tril(Hs,-1)||) / ||H||`.
pub fn hessenberg_re(h: &QuatMatrix) -> f64 {
    let mut num = tril_norm(h.block(0), 2);
    for b in 1..4 {
        num += tril_norm(h.block(b), 1);
    }
    rel(num, h.fro_norm())
}

/// Same measure for a quaternion Hessenberg target, where the whole
/// subdiagonal may be non-real.
pub fn quaternion_hessenberg_re(h: &QuatMatrix) -> f64 {
    let num: f64 = (0..4).map(|b| tril_norm(h.block(b), 2)).sum();
    rel(num, h.fro_norm())
}

/// `||Q W - W H|| / ||Q||`.
pub fn similarity_residual(q: &QuatMatrix, w: &QuatMatrix, h: &QuatMatrix) -> f64 {
    let d = (q * w).sub(&(w * h)).expect("square factors");
    rel(d.fro_norm(), q.fro_norm())
}

/// `||A - W R|| / ||A||`.
pub fn factor_residual(a: &QuatMatrix, w: &QuatMatrix, r: &QuatMatrix) -> f64 {
    rel(a.sub(&(w * r)).expect("conforming factors").fro_norm(), a.fro_norm())
}

/// `||Q - W T W^*|| / ||Q||`.
pub fn schur_residual(q: &QuatMatrix, w: &QuatMatrix, t: &QuatMatrix) -> f64 {
    let back = &(w * t) * &w.adjoint();
    rel(q.sub(&back).expect("square factors").fro_norm(), q.fro_norm())
}

/// `||W^* W - I||`.
pub fn unitarity(w: &QuatMatrix) -> f64 {
    (&w.adjoint() * w)
        .sub(&QuatMatrix::identity(w.cols()))
        .expect("square")
        .fro_norm()
}

/// Largest entry outside the profile of `kind`, with no tolerance.
pub fn violation(m: &QuatMatrix, kind: StructureKind) -> f64 {
    check_structure(m, kind, 0.0).map(|r| r.violation).unwrap_or(f64::INFINITY)
}

/// Largest entry strictly below the diagonal.
pub fn below_diagonal(m: &QuatMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for j in 0..m.cols() {
        for i in j + 1..m.rows() {
            worst = worst.max(m.get(i, j).norm());
        }
    }
    worst
}
