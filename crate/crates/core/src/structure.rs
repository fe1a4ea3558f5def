//! Structural profile checks on the four real blocks.

use crate::error::{QuatError, Result};
use crate::matrix::QuatMatrix;

/// Zero/nonzero profiles that the factorizations produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// B0 upper Hessenberg, B1..B3 upper triangular.
    UpperJRSHessenberg,
    /// Upper JRS-Hessenberg with every subdiagonal entry of B0 nonzero.
    UnreducedUpperJRSHessenberg,
    /// B0 upper triangular, B1..B3 strictly upper triangular (real diagonal).
    UpperJRSTriangular,
    /// B0 quasi upper triangular (no two consecutive nonzero subdiagonals),
    /// B1..B3 upper triangular.
    JRSSchur,
    /// B0 symmetric tridiagonal, B1..B3 zero.
    HermitianTridiagonalReal,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::UpperJRSHessenberg => "upper JRS-Hessenberg",
            Self::UnreducedUpperJRSHessenberg => "unreduced upper JRS-Hessenberg",
            Self::UpperJRSTriangular => "upper JRS-triangular",
            Self::JRSSchur => "JRS-Schur",
            Self::HermitianTridiagonalReal => "real symmetric tridiagonal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StructureReport {
    pub ok: bool,
    /// Largest magnitude found where the profile demands zero (or symmetry).
    pub violation: f64,
    /// `(block, row, col)` of the worst offender, if any check failed.
    pub witness: Option<(usize, usize, usize)>,
}

impl StructureReport {
    /// Converts a failed report into an error for routines with structural preconditions.
    pub(crate) fn into_result(self, kind: StructureKind) -> Result<()> {
        match (self.ok, self.witness) {
            (true, _) => Ok(()),
            (false, Some((block, row, col))) => Err(QuatError::StructureViolation {
                expected: kind.name(),
                block,
                row,
                col,
                magnitude: self.violation,
            }),
            (false, None) => Err(QuatError::StructureViolation {
                expected: kind.name(),
                block: 0,
                row: 0,
                col: 0,
                magnitude: self.violation,
            }),
        }
    }
}

struct Tracker {
    worst: f64,
    witness: Option<(usize, usize, usize)>,
}

impl Tracker {
    fn see(&mut self, v: f64, at: (usize, usize, usize)) {
        if v > self.worst || (v.is_nan() && !self.worst.is_nan()) {
            self.worst = v;
            self.witness = Some(at);
        }
    }
}

/// Entries with magnitude at most `tol * fro_norm(a)` count as structural zeros.
pub fn check_structure(a: &QuatMatrix, kind: StructureKind, tol: f64) -> Result<StructureReport> {
    let n = a.require_square()?;
    let thresh = tol * a.fro_norm();
    let mut t = Tracker {
        worst: 0.0,
        witness: None,
    };
    let b = a.blocks();

    // Lowest nonzero subdiagonal offset allowed in B0 and in B1..B3.
    let (low0, low_imag) = match kind {
        StructureKind::UpperJRSHessenberg
        | StructureKind::UnreducedUpperJRSHessenberg
        | StructureKind::JRSSchur => (1, 0),
        StructureKind::UpperJRSTriangular => (0, -1),
        StructureKind::HermitianTridiagonalReal => (1, i64::MIN),
    };
    for j in 0..n {
        for i in 0..n {
            let below = i as i64 - j as i64;
            if below > low0 {
                t.see(b[0][(i, j)].abs(), (0, i, j));
            }
            for (k, bk) in b.iter().enumerate().skip(1) {
                if low_imag == i64::MIN || below > low_imag {
                    t.see(bk[(i, j)].abs(), (k, i, j));
                }
            }
        }
    }

    let mut extra_fail: Option<(usize, usize, usize)> = None;
    match kind {
        StructureKind::UnreducedUpperJRSHessenberg => {
            for i in 1..n {
                if b[0][(i, i - 1)].abs() <= thresh {
                    extra_fail.get_or_insert((0, i, i - 1));
                }
            }
        }
        StructureKind::JRSSchur => {
            for i in 2..n {
                let s1 = b[0][(i - 1, i - 2)].abs();
                let s2 = b[0][(i, i - 1)].abs();
                if s1 > thresh && s2 > thresh {
                    t.see(s1.min(s2), (0, i, i - 1));
                }
            }
        }
        StructureKind::HermitianTridiagonalReal => {
            for j in 0..n {
                for i in 0..n {
                    if i.abs_diff(j) > 1 {
                        t.see(b[0][(i, j)].abs(), (0, i, j));
                    } else if i > j {
                        t.see((b[0][(i, j)] - b[0][(j, i)]).abs(), (0, i, j));
                    }
                }
            }
        }
        _ => {}
    }

    let ok = t.worst <= thresh && extra_fail.is_none();
    Ok(StructureReport {
        ok,
        violation: t.worst,
        witness: if ok { None } else { extra_fail.or(t.witness) },
    })
}

/// Largest entry below the first subdiagonal in any block (quaternion
/// Hessenberg profile, subdiagonal may be non-real).
pub(crate) fn hessenberg_violation(a: &QuatMatrix) -> (f64, Option<(usize, usize, usize)>) {
    let n = a.rows();
    let mut t = Tracker {
        worst: 0.0,
        witness: None,
    };
    for (k, bk) in a.blocks().iter().enumerate() {
        for j in 0..n {
            for i in (j + 2)..n {
                t.see(bk[(i, j)].abs(), (k, i, j));
            }
        }
    }
    (t.worst, t.witness)
}
