//! Standard eigenvalues: representatives `a + b i` with `b >= 0` of each
//! similarity class.

mod matching;
mod oracle;

pub use matching::spectrum_distance;
pub use oracle::{oracle_eigvals, oracle_eigvals_capped, ORACLE_CAP};

use num_complex::Complex64;

use crate::error::Result;
use crate::hessenberg::{hess_reduce, HessMethod};
use crate::quaternion::Quaternion;
use crate::schur::{self, SchurOptions, SchurResult};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StdEigenvalue {
    pub re: f64,
    /// Always nonnegative.
    pub im: f64,
}

impl StdEigenvalue {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im: im.abs() }
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub values: Vec<StdEigenvalue>,
    pub converged: bool,
    pub iterations: usize,
}

/// The standard representative of the class of `q`: `w + |(x, y, z)| i`.
pub fn standardize(q: Quaternion) -> StdEigenvalue {
    StdEigenvalue::new(q.w, q.imag_norm())
}

/// Orders eigenvalues by real part, then imaginary part.
pub fn sort_values(v: &mut [StdEigenvalue]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Folds the `2m` eigenvalues of a complex adjoint (closed under
/// conjugation up to rounding) into `m` standard eigenvalues. Each value is
/// matched with the remaining one nearest to its conjugate and the pair is
/// averaged. Imaginary parts up to `snap` become exactly zero.
pub fn fold_conjugates(vals: &[Complex64], snap: f64) -> Vec<StdEigenvalue> {
    let mut order: Vec<usize> = (0..vals.len()).collect();
    order.sort_by(|&a, &b| {
        vals[a]
            .re
            .total_cmp(&vals[b].re)
            .then(vals[a].im.abs().total_cmp(&vals[b].im.abs()))
    });
    let mut used = vec![false; vals.len()];
    let mut out = Vec::with_capacity(vals.len() / 2);
    for &i in &order {
        if used[i] {
            continue;
        }
        used[i] = true;
        let target = vals[i].conj();
        let partner = order
            .iter()
            .copied()
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (vals[a] - target).norm().total_cmp(&(vals[b] - target).norm()));
        let (re, im) = match partner {
            Some(j) => {
                used[j] = true;
                (
                    0.5 * (vals[i].re + vals[j].re),
                    0.5 * (vals[i].im.abs() + vals[j].im.abs()),
                )
            }
            None => (vals[i].re, vals[i].im.abs()),
        };
        out.push(StdEigenvalue::new(re, if im <= snap { 0.0 } else { im }));
    }
    sort_values(&mut out);
    out
}

/// Standard eigenvalues read off the diagonal blocks of a converged Schur form.
pub fn eigs_from_schur(s: &SchurResult) -> Result<Vec<StdEigenvalue>> {
    if !s.converged {
        return Err(crate::QuatError::NotConverged { iterations: s.iterations });
    }
    let t = &s.t;
    let mut out = Vec::with_capacity(t.rows());
    let mut i = 0;
    for &b in &s.blocks {
        if b == 1 {
            out.push(standardize(t.get(i, i)));
        } else {
            let blk = t.submatrix(i..i + b, i..i + b);
            let vals = schur::small::adjoint_eigenvalues(&blk)?;
            out.extend(fold_conjugates(&vals, 1e-13 * blk.fro_norm()));
        }
        i += b;
    }
    sort_values(&mut out);
    Ok(out)
}

/// Standard eigenvalues by Hessenberg reduction and Francis iteration,
/// without accumulating the unitary factor. If the iteration runs out of
/// budget the report has `converged == false` and no values.
pub fn eigvals(q: &crate::QuatMatrix, tol: f64, max_sweeps: Option<usize>) -> Result<SpectrumReport> {
    let hr = hess_reduce(q, HessMethod::ViaH3, false)?;
    let opts = SchurOptions {
        tol,
        max_sweeps,
        accumulate: false,
        ..SchurOptions::default()
    };
    let s = schur::jrs_schur(&hr.h, &opts)?;
    Ok(SpectrumReport {
        values: if s.converged { eigs_from_schur(&s)? } else { Vec::new() },
        converged: s.converged,
        iterations: s.iterations,
    })
}
