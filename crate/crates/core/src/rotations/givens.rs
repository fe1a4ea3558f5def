use std::ops::Range;

use nalgebra::Matrix4;

use crate::error::{QuatError, Result};
use crate::kernels;
use crate::matrix::QuatMatrix;
use crate::opcount;
use crate::quaternion::Quaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GivensVariant {
    /// `[[conj(c), s], [-conj(s), c]]`; leaves a unit-quaternion factor in the leading slot.
    G1,
    /// Image is exactly `[||x||, 0]`.
    G2,
}

/// A 2x2 unitary quaternion matrix `G` with `G^* x = [r, 0]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Givens2 {
    g: [[Quaternion; 2]; 2],
    variant: GivensVariant,
}

impl Givens2 {
    pub fn identity(variant: GivensVariant) -> Self {
        Self {
            g: [[Quaternion::ONE, Quaternion::ZERO], [Quaternion::ZERO, Quaternion::ONE]],
            variant,
        }
    }

    pub fn variant(&self) -> GivensVariant {
        self.variant
    }

    pub fn matrix(&self) -> [[Quaternion; 2]; 2] {
        self.g
    }

    pub fn adjoint_matrix(&self) -> [[Quaternion; 2]; 2] {
        let g = &self.g;
        [[g[0][0].conj(), g[1][0].conj()], [g[0][1].conj(), g[1][1].conj()]]
    }

    pub fn to_quat_matrix(&self) -> QuatMatrix {
        QuatMatrix::from_fn(2, 2, |i, j| self.g[i][j])
    }

    /// `G^* x`.
    pub fn apply_adjoint(&self, x: [Quaternion; 2]) -> [Quaternion; 2] {
        let h = self.adjoint_matrix();
        [h[0][0] * x[0] + h[0][1] * x[1], h[1][0] * x[0] + h[1][1] * x[1]]
    }

    /// Rows `r1, r2` of `A` (over `cols`) are replaced by `G^*` times them.
    pub fn apply_left_adjoint(&self, a: &mut QuatMatrix, r1: usize, r2: usize, cols: Range<usize>) {
        kernels::rot_rows_left(&mut a.planes_mut(), self.adjoint_matrix(), r1, r2, cols);
    }

    /// Columns `c1, c2` of `A` (over `rows`) are replaced by them times `G`.
    pub fn apply_right(&self, a: &mut QuatMatrix, c1: usize, c2: usize, rows: Range<usize>) {
        kernels::rot_cols_right(&mut a.planes_mut(), self.g, c1, c2, rows);
    }
}

/// Builds the 2x2 unitary `G` with `G^* x = [r, 0]`.
///
/// For G2, `r = ||x||`. For G1, `r = sigma ||x||` with `sigma = 1` when the
/// entries of `x` are linearly dependent over the reals and `x1/|x1|`
/// otherwise.
pub fn make_givens(x: [Quaternion; 2], variant: GivensVariant) -> Result<Givens2> {
    let [x1, x2] = x;
    if !x1.is_finite() || !x2.is_finite() {
        return Err(QuatError::NonFinite);
    }
    let n1 = x1.norm_sqr();
    let n2 = x2.norm_sqr();
    let nx = (n1 + n2).sqrt();
    opcount::record(8, 7, 0, 1);
    if nx == 0.0 {
        return Err(QuatError::ZeroVector);
    }
    match variant {
        GivensVariant::G2 => Ok(make_g2(x1, x2, n1, n2, nx)),
        GivensVariant::G1 => Ok(make_g1(x1, x2, n1, n2, nx)),
    }
}

fn make_g2(x1: Quaternion, x2: Quaternion, n1: f64, n2: f64, nx: f64) -> Givens2 {
    if x2.is_zero() {
        let a1 = n1.sqrt();
        opcount::record(0, 0, 4, 1);
        return Givens2 {
            g: [[x1 / a1, Quaternion::ZERO], [Quaternion::ZERO, Quaternion::ONE]],
            variant: GivensVariant::G2,
        };
    }
    let inv = 1.0 / nx;
    let g11 = x1 * inv;
    let g21 = x2 * inv;
    let (g12, g22);
    if n1 <= n2 {
        // g12 = |g21|, g22 = -|g21| g21^{-*} conj(g11) = -(g21 conj(g11)) / |g21|
        let a = n2.sqrt() * inv;
        g12 = Quaternion::real(a);
        g22 = -(g21 * g11.conj()) / a;
    } else {
        let a = n1.sqrt() * inv;
        g22 = Quaternion::real(a);
        g12 = -(g11 * g21.conj()) / a;
    }
    let real_factor = x1.is_real() || x2.is_real();
    if real_factor {
        opcount::record(8 + 1 + 4, 0, 1 + 4, 1);
    } else {
        opcount::qmul(1);
        opcount::record(8 + 1, 0, 1 + 4, 1);
    }
    Givens2 {
        g: [[g11, g12], [g21, g22]],
        variant: GivensVariant::G2,
    }
}

fn make_g1(x1: Quaternion, x2: Quaternion, n1: f64, n2: f64, nx: f64) -> Givens2 {
    let dot = x1.w * x2.w + x1.x * x2.x + x1.y * x2.y + x1.z * x2.z;
    let gram = n1 * n2 - dot * dot;
    let dependent = gram <= 16.0 * f64::EPSILON * n1 * n2;
    opcount::record(4 + 3, 3 + 1, 0, 0);
    let sigma = if dependent {
        Quaternion::ONE
    } else {
        opcount::record(0, 0, 4, 1);
        x1 / n1.sqrt()
    };
    let c = sigma * x1.conj() / nx;
    let s = -(sigma * x2.conj()) / nx;
    opcount::qmul(2);
    opcount::record(0, 0, 8, 0);
    Givens2 {
        g: [[c.conj(), s], [-s.conj(), c]],
        variant: GivensVariant::G1,
    }
}

/// Per-entry phase rotation: `conj(g) q = |q|` for the unit quaternion `g = q/|q|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JrsGivens4 {
    phase: Quaternion,
}

impl JrsGivens4 {
    pub fn phase(&self) -> Quaternion {
        self.phase
    }

    /// `conj(g) q`.
    pub fn apply(&self, q: Quaternion) -> Quaternion {
        self.phase.conj() * q
    }

    /// Orthogonal 4x4 matrix of left multiplication by `conj(g)` acting on
    /// coefficient vectors `(w, x, y, z)`.
    pub fn matrix(&self) -> Matrix4<f64> {
        let p = self.phase.conj();
        Matrix4::new(
            p.w, -p.x, -p.y, -p.z, //
            p.x, p.w, -p.z, p.y, //
            p.y, p.z, p.w, -p.x, //
            p.z, -p.y, p.x, p.w,
        )
    }
}

/// Phase rotation that makes `q` real and nonnegative; the identity for `q = 0`.
pub fn jrs_givens4(q: Quaternion) -> JrsGivens4 {
    let n = q.norm();
    opcount::record(4, 3, 0, 1);
    if n == 0.0 {
        return JrsGivens4 { phase: Quaternion::ONE };
    }
    opcount::record(0, 0, 4, 0);
    JrsGivens4 { phase: q / n }
}
