//! Test matrix families.

use nalgebra::DMatrix;
use quatqr::{francis_first_col, make_householder, trailing_shift, HouseholderVariant, QuatMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Family {
    /// Four Toeplitz blocks built from `C = [n, 1, .., n-1]`.
    Toeplitz5_1,
    RandomDense,
    /// Upper JRS-Hessenberg with random real subdiagonal.
    RandomHessenberg,
    /// Random JRS-Hessenberg after the bulge-introducing similarity of a
    /// Francis step.
    BrokenHessenberg,
    Hermitian,
    /// Zero real part, imaginary parts in `[0, 1]`.
    PureImaginary,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Toeplitz5_1 => "toeplitz5_1",
            Family::RandomDense => "random_dense",
            Family::RandomHessenberg => "random_hessenberg",
            Family::BrokenHessenberg => "broken_hessenberg",
            Family::Hermitian => "hermitian",
            Family::PureImaginary => "pure_imaginary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatGenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

pub fn generate(spec: &MatGenSpec) -> Result<QuatMatrix> {
    let n = spec.n;
    if n < 2 {
        return Err(CliError::Usage(format!("matrix order must be at least 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = match spec.family {
        Family::Toeplitz5_1 => toeplitz5_1(n),
        Family::RandomDense => uniform(n, &mut rng),
        Family::RandomHessenberg => random_hessenberg(n, &mut rng),
        Family::BrokenHessenberg => broken_hessenberg(n, &mut rng)?,
        Family::Hermitian => {
            let a = uniform(n, &mut rng);
            a.add(&a.adjoint())?.scale(0.5)
        }
        Family::PureImaginary => {
            let b = |r: &mut ChaCha8Rng| DMatrix::from_fn(n, n, |_, _| r.random_range(0.0..=1.0));
            let (b1, b2, b3) = (b(&mut rng), b(&mut rng), b(&mut rng));
            QuatMatrix::from_blocks([DMatrix::zeros(n, n), b1, b2, b3])?
        }
    };
    Ok(m)
}

fn uniform(n: usize, rng: &mut ChaCha8Rng) -> QuatMatrix {
    let mut blocks = (0..4).map(|_| DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0)));
    let b: [DMatrix<f64>; 4] = std::array::from_fn(|_| blocks.next().expect("four blocks"));
    QuatMatrix::from_blocks(b).expect("equal shapes")
}

/// Toeplitz matrix with first column `c` and first row `r`; `c[0]` wins on
/// the diagonal.
fn toeplitz(c: &[f64], r: &[f64]) -> DMatrix<f64> {
    let n = c.len();
    DMatrix::from_fn(n, n, |i, j| if i >= j { c[i - j] } else { r[j - i] })
}

fn toeplitz5_1(n: usize) -> QuatMatrix {
    // C = [n, 1, 2, .., n, n] truncated to n entries, R = C(n:-1:1).
    let full: Vec<f64> = std::iter::once(n as f64)
        .chain((1..=n).map(|k| k as f64))
        .chain(std::iter::once(n as f64))
        .collect();
    let c = &full[..n];
    let r: Vec<f64> = c.iter().rev().copied().collect();
    QuatMatrix::from_blocks([toeplitz(c, &r), toeplitz(&r, &r), toeplitz(c, c), toeplitz(&r, c)])
        .expect("equal shapes")
}

fn random_hessenberg(n: usize, rng: &mut ChaCha8Rng) -> QuatMatrix {
    let mut m = uniform(n, rng);
    for b in 0..4 {
        let blk = m.block_mut(b);
        for j in 0..n {
            let first = if b == 0 { j + 2 } else { j + 1 };
            for i in first..n {
                blk[(i, j)] = 0.0;
            }
        }
    }
    m
}

fn broken_hessenberg(n: usize, rng: &mut ChaCha8Rng) -> Result<QuatMatrix> {
    let mut h = random_hessenberg(n, rng);
    if n < 3 {
        return Ok(h);
    }
    let sh = trailing_shift(&h, n - 1)?;
    let f = francis_first_col(&h, 0, sh.t, sh.d)?;
    if f.iter().all(|q| q.is_zero()) {
        return Ok(h);
    }
    let p = make_householder(&f, HouseholderVariant::H2, &[1.0, 0.0, 0.0])?;
    p.apply_left(&mut h, 0..3, 0..n)?;
    p.adjoint().apply_right(&mut h, 0..n, 0..3)?;
    Ok(h)
}

/// Largest entry magnitude that makes `h` fail to be quaternion upper
/// Hessenberg.
pub fn below_subdiagonal(h: &QuatMatrix) -> f64 {
    let n = h.rows();
    let mut worst: f64 = 0.0;
    for j in 0..n {
        for i in j + 2..n {
            worst = worst.max(h.get(i, j).norm());
        }
    }
    worst
}
