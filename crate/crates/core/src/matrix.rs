//! Dense quaternion matrices stored as four real blocks.
//!
//! `Q = B0 + B1 i + B2 j + B3 k`, each block a column-major `DMatrix<f64>`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::ops::{Mul, Range};

use crate::error::{QuatError, Result};
use crate::quaternion::Quaternion;

#[derive(Clone, Debug, PartialEq)]
pub struct QuatMatrix {
    blocks: [DMatrix<f64>; 4],
}

impl QuatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let z = DMatrix::zeros(rows, cols);
        Self {
            blocks: [z.clone(), z.clone(), z.clone(), z],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.blocks[0].fill_with_identity();
        m
    }

    pub fn from_blocks(blocks: [DMatrix<f64>; 4]) -> Result<Self> {
        let shape = blocks[0].shape();
        for b in &blocks[1..] {
            if b.shape() != shape {
                return Err(QuatError::DimensionMismatch {
                    op: "from_blocks",
                    left: shape,
                    right: b.shape(),
                });
            }
        }
        Ok(Self { blocks })
    }

    /// A matrix with a real part only.
    pub fn from_real(b0: DMatrix<f64>) -> Self {
        let (r, c) = b0.shape();
        let z = DMatrix::zeros(r, c);
        Self {
            blocks: [b0, z.clone(), z.clone(), z],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_diagonal(d: &[Quaternion]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &q) in d.iter().enumerate() {
            m.set(i, i, q);
        }
        m
    }

    pub fn column_vector(v: &[Quaternion]) -> Self {
        Self::from_fn(v.len(), 1, |i, _| v[i])
    }

    pub fn rows(&self) -> usize {
        self.blocks[0].nrows()
    }

    pub fn cols(&self) -> usize {
        self.blocks[0].ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.blocks[0].shape()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows())
        } else {
            Err(QuatError::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Quaternion {
        let b = &self.blocks;
        Quaternion::new(b[0][(i, j)], b[1][(i, j)], b[2][(i, j)], b[3][(i, j)])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        self.blocks[0][(i, j)] = q.w;
        self.blocks[1][(i, j)] = q.x;
        self.blocks[2][(i, j)] = q.y;
        self.blocks[3][(i, j)] = q.z;
    }

    pub fn block(&self, k: usize) -> &DMatrix<f64> {
        &self.blocks[k]
    }

    pub fn block_mut(&mut self, k: usize) -> &mut DMatrix<f64> {
        &mut self.blocks[k]
    }

    pub fn blocks(&self) -> &[DMatrix<f64>; 4] {
        &self.blocks
    }

    pub fn into_blocks(self) -> [DMatrix<f64>; 4] {
        self.blocks
    }

    pub fn column(&self, j: usize) -> Vec<Quaternion> {
        (0..self.rows()).map(|i| self.get(i, j)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|v| v.is_finite()))
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> QuatMatrix {
        let (r0, c0) = (rows.start, cols.start);
        QuatMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> QuatMatrix {
        let b = &self.blocks;
        QuatMatrix {
            blocks: [
                b[0].transpose(),
                -b[1].transpose(),
                -b[2].transpose(),
                -b[3].transpose(),
            ],
        }
    }

    /// Quaternion matrix product via sixteen real block products.
    pub fn mat_mul(&self, other: &QuatMatrix) -> Result<QuatMatrix> {
        if self.cols() != other.rows() {
            return Err(QuatError::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let a = &self.blocks;
        let b = &other.blocks;
        // (a, b, sign) triples contributing to each output block.
        const TERMS: [[(usize, usize, f64); 4]; 4] = [
            [(0, 0, 1.0), (1, 1, -1.0), (2, 2, -1.0), (3, 3, -1.0)],
            [(0, 1, 1.0), (1, 0, 1.0), (2, 3, 1.0), (3, 2, -1.0)],
            [(0, 2, 1.0), (1, 3, -1.0), (2, 0, 1.0), (3, 1, 1.0)],
            [(0, 3, 1.0), (1, 2, 1.0), (2, 1, -1.0), (3, 0, 1.0)],
        ];
        let mut out = QuatMatrix::zeros(self.rows(), other.cols());
        for (k, terms) in TERMS.iter().enumerate() {
            let c = &mut out.blocks[k];
            for &(p, q, s) in terms {
                c.gemm(s, &a[p], &b[q], 1.0);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QuatMatrix) -> Result<QuatMatrix> {
        self.zip_blocks(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &QuatMatrix) -> Result<QuatMatrix> {
        self.zip_blocks(other, "sub", |a, b| a - b)
    }

    fn zip_blocks(
        &self,
        other: &QuatMatrix,
        op: &'static str,
        f: impl Fn(&DMatrix<f64>, &DMatrix<f64>) -> DMatrix<f64>,
    ) -> Result<QuatMatrix> {
        if self.shape() != other.shape() {
            return Err(QuatError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let a = &self.blocks;
        let b = &other.blocks;
        Ok(QuatMatrix {
            blocks: [f(&a[0], &b[0]), f(&a[1], &b[1]), f(&a[2], &b[2]), f(&a[3], &b[3])],
        })
    }

    pub fn scale(&self, s: f64) -> QuatMatrix {
        let b = &self.blocks;
        QuatMatrix {
            blocks: [&b[0] * s, &b[1] * s, &b[2] * s, &b[3] * s],
        }
    }

    pub fn fro_norm(&self) -> f64 {
        self.blocks.iter().map(|b| b.norm_squared()).sum::<f64>().sqrt()
    }

    /// The 4m x 4n real counterpart with block rows
    /// `[B0 B2 B1 B3; -B2 B0 B3 -B1; -B1 -B3 B0 B2; -B3 B1 -B2 B0]`.
    pub fn expand_counterpart(&self) -> DMatrix<f64> {
        let (m, n) = self.shape();
        // (block index, sign) at each block position.
        const LAYOUT: [[(usize, f64); 4]; 4] = [
            [(0, 1.0), (2, 1.0), (1, 1.0), (3, 1.0)],
            [(2, -1.0), (0, 1.0), (3, 1.0), (1, -1.0)],
            [(1, -1.0), (3, -1.0), (0, 1.0), (2, 1.0)],
            [(3, -1.0), (1, 1.0), (2, -1.0), (0, 1.0)],
        ];
        let mut out = DMatrix::zeros(4 * m, 4 * n);
        for (bi, row) in LAYOUT.iter().enumerate() {
            for (bj, &(k, s)) in row.iter().enumerate() {
                out.view_mut((bi * m, bj * n), (m, n))
                    .copy_from(&(&self.blocks[k] * s));
            }
        }
        out
    }

    /// The 2m x 2n complex adjoint `[C D; -conj(D) conj(C)]` where
    /// `Q = C + D j`, `C = B0 + B1 i`, `D = B2 + B3 i`.
    pub fn complex_adjoint(&self) -> DMatrix<Complex64> {
        let (m, n) = self.shape();
        let b = &self.blocks;
        DMatrix::from_fn(2 * m, 2 * n, |i, j| {
            let (bi, ii) = (i / m, i % m);
            let (bj, jj) = (j / n, j % n);
            let c = Complex64::new(b[0][(ii, jj)], b[1][(ii, jj)]);
            let d = Complex64::new(b[2][(ii, jj)], b[3][(ii, jj)]);
            match (bi, bj) {
                (0, 0) => c,
                (0, 1) => d,
                (1, 0) => -d.conj(),
                _ => c.conj(),
            }
        })
    }

    /// Column-major planes of the four blocks, for kernels.
    pub(crate) fn planes_mut(&mut self) -> Planes<'_> {
        let ld = self.rows();
        let [b0, b1, b2, b3] = &mut self.blocks;
        Planes {
            p: [b0.as_mut_slice(), b1.as_mut_slice(), b2.as_mut_slice(), b3.as_mut_slice()],
            ld,
        }
    }
}

impl Mul for &QuatMatrix {
    type Output = QuatMatrix;

    /// Panics on shape mismatch; see [`QuatMatrix::mat_mul`].
    fn mul(self, rhs: &QuatMatrix) -> QuatMatrix {
        self.mat_mul(rhs).expect("quaternion matrix product shape mismatch")
    }
}

/// Mutable view of the four blocks as raw column-major slices.
pub(crate) struct Planes<'a> {
    pub p: [&'a mut [f64]; 4],
    pub ld: usize,
}

impl Planes<'_> {
    #[inline(always)]
    pub fn get(&self, i: usize, j: usize) -> Quaternion {
        let k = i + j * self.ld;
        Quaternion::new(self.p[0][k], self.p[1][k], self.p[2][k], self.p[3][k])
    }

    #[inline(always)]
    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        let k = i + j * self.ld;
        self.p[0][k] = q.w;
        self.p[1][k] = q.x;
        self.p[2][k] = q.y;
        self.p[3][k] = q.z;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(m: usize, n: usize, seed: f64) -> QuatMatrix {
        QuatMatrix::from_fn(m, n, |i, j| {
            let t = seed + (i * 7 + j * 3) as f64;
            Quaternion::new(t.sin(), (1.3 * t).cos(), (0.7 * t).sin(), (2.1 * t).cos())
        })
    }

    #[test]
    fn mat_mul_matches_entrywise_definition() {
        let a = sample(3, 4, 0.1);
        let b = sample(4, 2, 0.9);
        let c = a.mat_mul(&b).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                let mut s = Quaternion::ZERO;
                for k in 0..4 {
                    s += a.get(i, k) * b.get(k, j);
                }
                assert!((s - c.get(i, j)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn mat_mul_rejects_bad_shapes() {
        let a = sample(3, 4, 0.1);
        assert!(matches!(
            a.mat_mul(&a),
            Err(QuatError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn counterpart_of_unit_i() {
        let m = QuatMatrix::from_fn(1, 1, |_, _| Quaternion::I);
        let e = m.expand_counterpart();
        let expect = DMatrix::from_row_slice(
            4,
            4,
            &[
                0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, -1.0, //
                -1.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 0.0, 0.0,
            ],
        );
        assert_eq!(e, expect);
    }

    #[test]
    fn adjoint_is_conjugate_transpose() {
        let a = sample(2, 3, 0.4);
        let h = a.adjoint();
        assert_eq!(h.shape(), (3, 2));
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(h.get(j, i), a.get(i, j).conj());
            }
        }
    }

    #[test]
    fn complex_adjoint_of_j() {
        let m = QuatMatrix::from_fn(1, 1, |_, _| Quaternion::J);
        let c = m.complex_adjoint();
        assert_eq!(c[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(c[(1, 0)], Complex64::new(-1.0, 0.0));
        assert_eq!(c[(0, 0)], Complex64::new(0.0, 0.0));
    }
}
