use std::ops::Range;

use crate::error::{QuatError, Result};
use crate::kernels;
use crate::matrix::QuatMatrix;
use crate::opcount;
use crate::quaternion::Quaternion;

/// Quaternion Householder constructions.
///
/// With `R = I - beta u u^*` (`u` unit, `beta` in {0, 2}):
/// `H1 = R`, `H2 = conj(xi) R`, `H3 = R G`, `H4 = G R`, where `G` is a
/// diagonal of unit quaternions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HouseholderVariant {
    H1,
    H2,
    H3,
    H4,
}

#[derive(Clone, Debug)]
pub struct HouseholderQ {
    variant: HouseholderVariant,
    u: Vec<Quaternion>,
    beta: f64,
    scalar: Quaternion,
    phases: Vec<Quaternion>,
    image: Vec<Quaternion>,
    adjoint: bool,
}

#[derive(Clone, Copy)]
enum Factor {
    Reflector,
    Scalar(Quaternion),
    Diag,
}

impl HouseholderQ {
    pub fn variant(&self) -> HouseholderVariant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Unit reflector vector (empty when the reflector part is the identity).
    pub fn vector(&self) -> &[Quaternion] {
        &self.u
    }

    /// Diagonal phases `G` (all ones for H1 and H2).
    pub fn phases(&self) -> &[Quaternion] {
        &self.phases
    }

    /// The image `U y` of the constructing vector.
    pub fn image(&self) -> &[Quaternion] {
        &self.image
    }

    pub fn is_adjoint(&self) -> bool {
        self.adjoint
    }

    /// The conjugate transpose of this transform.
    pub fn adjoint(&self) -> HouseholderQ {
        HouseholderQ {
            adjoint: !self.adjoint,
            ..self.clone()
        }
    }

    /// Dense `len x len` form.
    pub fn to_matrix(&self) -> QuatMatrix {
        let mut m = QuatMatrix::identity(self.len());
        let n = self.len();
        self.apply_left(&mut m, 0..n, 0..n).expect("square identity fits");
        m
    }

    fn factors(&self) -> Vec<Factor> {
        let f = match self.variant {
            HouseholderVariant::H1 => vec![Factor::Reflector],
            HouseholderVariant::H2 => vec![Factor::Scalar(self.scalar), Factor::Reflector],
            HouseholderVariant::H3 => vec![Factor::Reflector, Factor::Diag],
            HouseholderVariant::H4 => vec![Factor::Diag, Factor::Reflector],
        };
        if self.adjoint {
            f.into_iter()
                .rev()
                .map(|x| match x {
                    Factor::Scalar(s) => Factor::Scalar(s.conj()),
                    other => other,
                })
                .collect()
        } else {
            f
        }
    }

    fn phase(&self, l: usize) -> Quaternion {
        if self.adjoint {
            self.phases[l].conj()
        } else {
            self.phases[l]
        }
    }

    fn check(&self, a: &QuatMatrix, rows: &Range<usize>, cols: &Range<usize>, along: usize) -> Result<()> {
        if along != self.len() || rows.end > a.rows() || cols.end > a.cols() {
            return Err(QuatError::DimensionMismatch {
                op: "apply_householder",
                left: (rows.len(), cols.len()),
                right: (self.len(), self.len()),
            });
        }
        Ok(())
    }

    /// `A(rows, cols) <- U A(rows, cols)`, or `U^*` for an adjoint transform.
    pub fn apply_left(&self, a: &mut QuatMatrix, rows: Range<usize>, cols: Range<usize>) -> Result<()> {
        self.check(a, &rows, &cols, rows.len())?;
        let r0 = rows.start;
        let mut p = a.planes_mut();
        for f in self.factors().into_iter().rev() {
            match f {
                Factor::Reflector => {
                    if self.beta != 0.0 {
                        kernels::quat_reflector_left(&mut p, &self.u, self.beta, r0, cols.clone());
                    }
                }
                Factor::Scalar(s) => {
                    if s != Quaternion::ONE {
                        let list: Vec<_> = rows.clone().map(|t| (t, s)).collect();
                        kernels::phase_rows_left(&mut p, &list, cols.clone());
                    }
                }
                Factor::Diag => {
                    let list: Vec<_> = (0..self.len())
                        .map(|l| (r0 + l, self.phase(l)))
                        .filter(|&(_, g)| g != Quaternion::ONE)
                        .collect();
                    kernels::phase_rows_left(&mut p, &list, cols.clone());
                }
            }
        }
        Ok(())
    }

    /// `A(rows, cols) <- A(rows, cols) U`, or `U^*` for an adjoint transform.
    pub fn apply_right(&self, a: &mut QuatMatrix, rows: Range<usize>, cols: Range<usize>) -> Result<()> {
        self.check(a, &rows, &cols, cols.len())?;
        let c0 = cols.start;
        let mut p = a.planes_mut();
        for f in self.factors() {
            match f {
                Factor::Reflector => {
                    if self.beta != 0.0 {
                        kernels::quat_reflector_right(&mut p, &self.u, self.beta, rows.clone(), c0);
                    }
                }
                Factor::Scalar(s) => {
                    if s != Quaternion::ONE {
                        for c in cols.clone() {
                            kernels::phase_col_right(&mut p, c, s, rows.clone());
                        }
                    }
                }
                Factor::Diag => {
                    for l in 0..self.len() {
                        let g = self.phase(l);
                        if g != Quaternion::ONE {
                            kernels::phase_col_right(&mut p, c0 + l, g, rows.clone());
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn vec_norm(y: &[Quaternion]) -> f64 {
    opcount::record(4 * y.len() as u64, (4 * y.len()).saturating_sub(1) as u64, 0, 1);
    y.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
}

/// `sum_l y_l v_l` for real `v`.
fn weighted_sum(y: &[Quaternion], v: &[f64]) -> Quaternion {
    opcount::record(4 * y.len() as u64, 4 * y.len().saturating_sub(1) as u64, 0, 0);
    y.iter().zip(v).fold(Quaternion::ZERO, |s, (q, &vl)| s + *q * vl)
}

fn normalized(d: Vec<Quaternion>) -> Vec<Quaternion> {
    let nd = vec_norm(&d);
    opcount::record(0, 0, 4 * d.len() as u64, 0);
    d.into_iter().map(|q| q / nd).collect()
}

/// Builds a unitary `U` with `U y = x`, where `x` is a multiple of the real
/// unit vector `v` determined by the variant:
/// H1 gives `alpha v` with `alpha = -(a/|a|) ||y||`, `a = y^T v`;
/// H2, H3 and H4 give `||y|| v`.
///
/// If `y` already equals `||y|| v` to working precision the transform is the
/// identity.
pub fn make_householder(y: &[Quaternion], variant: HouseholderVariant, v: &[f64]) -> Result<HouseholderQ> {
    let m = y.len();
    if m == 0 || v.len() != m {
        return Err(QuatError::DimensionMismatch {
            op: "make_householder",
            left: (m, 1),
            right: (v.len(), 1),
        });
    }
    if y.iter().any(|q| !q.is_finite()) || v.iter().any(|x| !x.is_finite()) {
        return Err(QuatError::NonFinite);
    }
    let vn = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (vn - 1.0).abs() > 1e-12 {
        return Err(QuatError::BadTarget);
    }
    let ny = vec_norm(y);
    if ny == 0.0 {
        return Err(QuatError::ZeroVector);
    }

    let ones = vec![Quaternion::ONE; m];
    let mut h = HouseholderQ {
        variant,
        u: Vec::new(),
        beta: 0.0,
        scalar: Quaternion::ONE,
        phases: ones,
        image: y.to_vec(),
        adjoint: false,
    };

    let target: Vec<Quaternion> = v.iter().map(|&vl| Quaternion::real(ny * vl)).collect();
    let gap: f64 = y
        .iter()
        .zip(&target)
        .map(|(a, b)| (*a - *b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    if gap <= f64::EPSILON * ny {
        return Ok(h);
    }

    // y = a v exactly: H2 and H4 reduce to a pure phase.
    if matches!(variant, HouseholderVariant::H2 | HouseholderVariant::H4) {
        let a = weighted_sum(y, v);
        if y.iter().zip(v).all(|(q, &vl)| *q == a * vl) {
            let g = a.conj() / a.norm();
            opcount::record(4, 3, 4, 1);
            if variant == HouseholderVariant::H2 {
                h.scalar = g;
            } else {
                for (ph, &vl) in h.phases.iter_mut().zip(v) {
                    if vl != 0.0 {
                        *ph = g;
                    }
                }
            }
            h.image = target;
            return Ok(h);
        }
    }

    match variant {
        HouseholderVariant::H1 | HouseholderVariant::H4 => {
            let a = weighted_sum(y, v);
            let na = a.norm();
            let alpha = if na > 0.0 { -(a / na) * ny } else { Quaternion::real(ny) };
            let x: Vec<Quaternion> = v.iter().map(|&vl| alpha * vl).collect();
            let d: Vec<Quaternion> = y.iter().zip(&x).map(|(p, q)| *p - *q).collect();
            opcount::record(4 * m as u64 + 5, 4 * m as u64 + 3, 4, 1);
            h.u = normalized(d);
            h.beta = 2.0;
            if variant == HouseholderVariant::H4 {
                let na = alpha.norm();
                let g = alpha.conj() / na;
                opcount::record(4, 3, 4, 1);
                for (ph, &vl) in h.phases.iter_mut().zip(v) {
                    if vl != 0.0 {
                        *ph = g;
                    }
                }
                h.image = target;
            } else {
                h.image = x;
            }
        }
        HouseholderVariant::H2 => {
            let a = weighted_sum(y, v);
            let na = a.norm();
            let xi = if na > 0.0 { -(a / na) } else { Quaternion::ONE };
            let d: Vec<Quaternion> = y.iter().zip(&target).map(|(p, q)| *p - xi * *q).collect();
            opcount::qmul(m as u64);
            opcount::record(4, 3 + 4 * m as u64, 4, 1);
            h.u = normalized(d);
            h.beta = 2.0;
            h.scalar = xi.conj();
            h.image = target;
        }
        HouseholderVariant::H3 => {
            let z: Vec<f64> = y.iter().map(|q| q.norm()).collect();
            for (ph, q) in h.phases.iter_mut().zip(y) {
                let nq = q.norm();
                if nq > 0.0 && !(q.is_real() && q.w > 0.0) {
                    *ph = q.conj() / nq;
                }
            }
            opcount::record(8 * m as u64, 3 * m as u64, 4 * m as u64, m as u64);
            // d = z - ||y|| v, with the component along v formed without cancellation.
            let zv: f64 = z.iter().zip(v).map(|(a, b)| a * b).sum();
            let perp: Vec<f64> = z.iter().zip(v).map(|(a, b)| a - zv * b).collect();
            let perp2: f64 = perp.iter().map(|x| x * x).sum();
            let along = if zv > 0.0 { -perp2 / (zv + ny) } else { zv - ny };
            let d: Vec<f64> = perp.iter().zip(v).map(|(p, b)| p + along * b).collect();
            let nd = d.iter().map(|x| x * x).sum::<f64>().sqrt();
            opcount::record(7 * m as u64, 6 * m as u64, 1, 1);
            if nd > f64::EPSILON * ny {
                h.u = d.iter().map(|x| Quaternion::real(x / nd)).collect();
                h.beta = 2.0;
                opcount::record(0, 0, m as u64, 0);
            }
            h.image = target;
        }
    }
    Ok(h)
}
