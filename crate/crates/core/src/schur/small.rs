//! Eigen-data of small quaternion blocks through their complex adjoint.

use nalgebra::linalg::{Schur, SVD};
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{QuatError, Result};
use crate::matrix::QuatMatrix;
use crate::quaternion::Quaternion;

/// All `2k` eigenvalues of the complex adjoint of a `k x k` block.
pub(crate) fn adjoint_eigenvalues(b: &QuatMatrix) -> Result<Vec<Complex64>> {
    let chi = b.complex_adjoint();
    let dim = chi.nrows();
    let s = Schur::try_new(chi, f64::EPSILON, 100 * dim.max(1)).ok_or(QuatError::SmallEigen)?;
    let (_, t) = s.unpack();
    Ok((0..dim).map(|i| t[(i, i)]).collect())
}

/// A unit quaternion vector `x` with `B x = x lambda` for a complex
/// eigenvalue `lambda` of the adjoint of `B`.
pub(crate) fn eigenvector(b: &QuatMatrix, lambda: Complex64) -> Result<Vec<Quaternion>> {
    let k = b.rows();
    let mut m = b.complex_adjoint();
    for i in 0..2 * k {
        m[(i, i)] -= lambda;
    }
    let svd = SVD::try_new(m, false, true, f64::EPSILON, 200).ok_or(QuatError::SmallEigen)?;
    let vt: DMatrix<Complex64> = svd.v_t.ok_or(QuatError::SmallEigen)?;
    let (imin, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &s)| if s < acc.1 { (i, s) } else { acc });
    // Adjoint eigenvector [a; b] corresponds to x = a - conj(b) j.
    let x: Vec<Quaternion> = (0..k)
        .map(|i| {
            let a = vt[(imin, i)].conj();
            let c = vt[(imin, i + k)].conj();
            Quaternion::new(a.re, a.im, -c.re, c.im)
        })
        .collect();
    let nx = x.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
    if nx == 0.0 || !nx.is_finite() {
        return Err(QuatError::SmallEigen);
    }
    Ok(x.into_iter().map(|q| q / nx).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvector_satisfies_right_eigen_equation() {
        let b = QuatMatrix::from_fn(2, 2, |i, j| {
            Quaternion::new(1.0 + i as f64, 0.3 * j as f64, -0.7, 0.2 + (i * j) as f64)
        });
        for lam in adjoint_eigenvalues(&b).unwrap() {
            let x = eigenvector(&b, lam).unwrap();
            let l = Quaternion::new(lam.re, lam.im, 0.0, 0.0);
            for i in 0..2 {
                let bx = b.get(i, 0) * x[0] + b.get(i, 1) * x[1];
                assert!((bx - x[i] * l).norm() < 1e-12);
            }
        }
    }
}
