mod common;

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use quatqr::{qmat, QuatMatrix, Quaternion};

const EPS: f64 = f64::EPSILON;

fn arb_quat() -> impl Strategy<Value = Quaternion> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn arb_matrix(m: usize, n: usize) -> impl Strategy<Value = QuatMatrix> {
    prop::collection::vec(arb_quat(), m * n)
        .prop_map(move |v| QuatMatrix::from_fn(m, n, |i, j| v[i * n + j]))
}

fn arb_dims() -> impl Strategy<Value = (usize, usize)> {
    (1usize..5, 1usize..5)
}

/// Block permutation with signs; `pattern[r] = (c, s)` puts `s I` at block (r, c).
fn block_perm(n: usize, pattern: [(usize, f64); 4]) -> DMatrix<f64> {
    let mut p = DMatrix::zeros(4 * n, 4 * n);
    for (r, &(c, s)) in pattern.iter().enumerate() {
        for k in 0..n {
            p[(r * n + k, c * n + k)] = s;
        }
    }
    p
}

fn jrs(n: usize) -> [DMatrix<f64>; 3] {
    [
        block_perm(n, [(2, -1.0), (3, -1.0), (0, 1.0), (1, 1.0)]),
        block_perm(n, [(1, -1.0), (0, 1.0), (3, 1.0), (2, -1.0)]),
        block_perm(n, [(3, -1.0), (2, 1.0), (1, -1.0), (0, 1.0)]),
    ]
}

fn adjoint_spectrum(q: &QuatMatrix) -> Vec<Complex64> {
    let (_, t) = nalgebra::Schur::new(q.complex_adjoint()).unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

#[test]
fn product_of_units() {
    assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
    let a = Quaternion::new(1.0, 1.0, 0.0, 0.0);
    let b = Quaternion::new(1.0, 0.0, 1.0, 0.0);
    assert_eq!(a * b, Quaternion::new(1.0, 1.0, 1.0, 1.0));
    let q = Quaternion::new(0.3, -2.0, 1.5, 4.0);
    assert_eq!(q * Quaternion::ONE, q);
}

#[test]
fn scalar_matrix_product() {
    let i = QuatMatrix::from_diagonal(&[Quaternion::I]);
    let j = QuatMatrix::from_diagonal(&[Quaternion::J]);
    assert_eq!(i.mat_mul(&j).unwrap().get(0, 0), Quaternion::K);
    assert_eq!(i.adjoint().get(0, 0), -Quaternion::I);
}

#[test]
fn small_expansions() {
    assert_eq!(QuatMatrix::identity(1).expand_counterpart(), DMatrix::identity(4, 4));
    let ca = QuatMatrix::identity(1).complex_adjoint();
    assert_eq!(ca, DMatrix::identity(2, 2));
    let q = QuatMatrix::from_diagonal(&[Quaternion::new(1.0, 1.0, 1.0, 1.0)]);
    assert!((q.fro_norm() - 2.0).abs() < 4.0 * EPS);
    assert!((QuatMatrix::identity(7).fro_norm() - 7f64.sqrt()).abs() < 4.0 * EPS);
    assert_eq!(QuatMatrix::zeros(3, 2).fro_norm(), 0.0);
}

#[test]
fn complex_adjoint_of_i_has_conjugate_spectrum() {
    let q = QuatMatrix::from_diagonal(&[Quaternion::I]);
    let mut ims: Vec<f64> = adjoint_spectrum(&q).iter().map(|z| z.im).collect();
    ims.sort_by(f64::total_cmp);
    assert_eq!(ims, vec![-1.0, 1.0]);
}

#[test]
fn complex_adjoint_spectrum_is_conjugate_closed() {
    for n in [1, 4, 11, 20] {
        let q = common::dense(n, 40 + n as u64);
        let ev = adjoint_spectrum(&q);
        for z in &ev {
            let best = ev.iter().map(|w| (w - z.conj()).norm()).fold(f64::INFINITY, f64::min);
            assert!(best < 1e-10, "n={n}: no partner for {z}");
        }
    }
}

#[test]
fn qmat_single_entry_fixture() {
    let m = qmat::from_str("QMAT 1 1 1\n0\n\n1\n\n0\n\n0\n").unwrap();
    assert_eq!(m.get(0, 0), Quaternion::I);
}

proptest! {
    #[test]
    fn counterpart_is_a_homomorphism((m, k) in arb_dims(), n in 1usize..5, seed in any::<u64>()) {
        let a = common::dense(m.max(k), seed).submatrix(0..m, 0..k);
        let b = common::dense(k.max(n), seed ^ 0x9e37).submatrix(0..k, 0..n);
        let ab = a.mat_mul(&b).unwrap().expand_counterpart();
        let prod = a.expand_counterpart() * b.expand_counterpart();
        let bound = 8.0 * k as f64 * EPS * a.fro_norm() * b.fro_norm();
        prop_assert!((ab - prod).norm() <= bound);
    }

    #[test]
    fn counterpart_is_jrs_symmetric(a in (1usize..4, 1usize..4).prop_flat_map(|(m, n)| arb_matrix(m, n))) {
        let e = a.expand_counterpart();
        let pm = jrs(a.rows());
        let pn = jrs(a.cols());
        for (p, q) in pm.iter().zip(pn.iter()) {
            prop_assert_eq!(p * &e * q.transpose(), e.clone());
        }
    }

    #[test]
    fn adjoint_is_transpose_of_counterpart(a in (1usize..4, 1usize..4).prop_flat_map(|(m, n)| arb_matrix(m, n))) {
        prop_assert_eq!(a.adjoint().expand_counterpart(), a.expand_counterpart().transpose());
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn counterpart_norm_is_twice(a in (1usize..5, 1usize..5).prop_flat_map(|(m, n)| arb_matrix(m, n))) {
        let f = a.fro_norm();
        prop_assert!((a.expand_counterpart().norm() / 2.0 - f).abs() <= 4.0 * EPS * f);
    }

    #[test]
    fn complex_adjoint_is_a_homomorphism(a in arb_matrix(3, 3), b in arb_matrix(3, 3)) {
        let lhs = a.mat_mul(&b).unwrap().complex_adjoint();
        let rhs = a.complex_adjoint() * b.complex_adjoint();
        prop_assert!((lhs - rhs).norm() <= 1e-14 * 24.0);
    }

    #[test]
    fn identity_is_neutral(a in arb_matrix(3, 4)) {
        prop_assert_eq!(a.mat_mul(&QuatMatrix::identity(4)).unwrap(), a.clone());
        prop_assert_eq!(QuatMatrix::identity(3).mat_mul(&a).unwrap(), a);
    }

    #[test]
    fn qmat_round_trip(a in (1usize..5, 1usize..5).prop_flat_map(|(m, n)| arb_matrix(m, n))) {
        let s = qmat::to_string(&a);
        let back = qmat::from_str(&s).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(qmat::to_string(&back), s);
    }
}
