#![allow(dead_code)]

use quatqr::{qr_full, QuatMatrix, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn quat(r: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        r.random_range(-1.0..1.0),
        r.random_range(-1.0..1.0),
        r.random_range(-1.0..1.0),
        r.random_range(-1.0..1.0),
    )
}

pub fn dense(n: usize, seed: u64) -> QuatMatrix {
    let mut r = rng(seed);
    QuatMatrix::from_fn(n, n, |_, _| quat(&mut r))
}

/// Random upper Hessenberg with real positive subdiagonal.
pub fn jrs_hessenberg(n: usize, seed: u64) -> QuatMatrix {
    let mut r = rng(seed);
    QuatMatrix::from_fn(n, n, |i, j| {
        if i > j + 1 {
            Quaternion::ZERO
        } else if i == j + 1 {
            Quaternion::real(r.random_range(0.1..1.0))
        } else {
            quat(&mut r)
        }
    })
}

/// Random upper Hessenberg with quaternion subdiagonal.
pub fn quat_hessenberg(n: usize, seed: u64) -> QuatMatrix {
    let mut r = rng(seed);
    QuatMatrix::from_fn(n, n, |i, j| if i > j + 1 { Quaternion::ZERO } else { quat(&mut r) })
}

pub fn unitary(n: usize, seed: u64) -> QuatMatrix {
    qr_full(&dense(n, seed)).unwrap().w
}

pub fn hermitian(n: usize, seed: u64) -> QuatMatrix {
    let a = dense(n, seed);
    a.add(&a.adjoint()).unwrap().scale(0.5)
}

pub fn rel(a: &QuatMatrix, b: &QuatMatrix) -> f64 {
    a.sub(b).unwrap().fro_norm() / b.fro_norm().max(f64::MIN_POSITIVE)
}

/// `||W^* W - I||_F`.
pub fn unitarity_defect(w: &QuatMatrix) -> f64 {
    (&w.adjoint() * w).sub(&QuatMatrix::identity(w.cols())).unwrap().fro_norm()
}
