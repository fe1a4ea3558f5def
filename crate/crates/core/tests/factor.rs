mod common;

use quatqr::{
    check_structure, hess_qr, hess_qr_with, hess_reduce, oracle_eigvals, opcount, qr_full, qr_iteration_unshifted,
    spectrum_distance, GivensVariant, HessMethod, QuatError, QuatMatrix, Quaternion, StructureKind,
};

const EPS: f64 = f64::EPSILON;

fn real_diag_nonneg(r: &QuatMatrix) -> bool {
    (0..r.cols().min(r.rows())).all(|i| {
        let d = r.get(i, i);
        d.is_real() && d.w >= 0.0
    })
}

#[test]
fn householder_qr_reconstructs() {
    for (m, n, seed) in [(6, 4, 1), (9, 9, 2), (20, 3, 3), (1, 1, 4)] {
        let a = common::dense(m, seed).submatrix(0..m, 0..n);
        let f = qr_full(&a).unwrap();
        assert!(common::rel(&(&f.w * &f.r), &a) <= 100.0 * n as f64 * EPS);
        assert!(common::unitarity_defect(&f.w) <= 100.0 * m as f64 * EPS);
        assert!(real_diag_nonneg(&f.r));
        for j in 0..n {
            for i in j + 1..m {
                assert_eq!(f.r.get(i, j), Quaternion::ZERO);
            }
        }
    }
    assert!(matches!(qr_full(&QuatMatrix::zeros(2, 3)), Err(QuatError::TooFewRows { .. })));
}

#[test]
fn hessenberg_qr_is_triangular() {
    for n in [2, 5, 30] {
        for h in [common::jrs_hessenberg(n, n as u64), common::quat_hessenberg(n, 50 + n as u64)] {
            let f = hess_qr(&h).unwrap();
            assert!(common::rel(&(&f.w * &f.r), &h) <= 100.0 * n as f64 * EPS);
            assert!(common::unitarity_defect(&f.w) <= 100.0 * n as f64 * EPS);
            let s = check_structure(&f.r, StructureKind::UpperJRSTriangular, 0.0).unwrap();
            assert!(s.ok, "{s:?}");
            assert!(real_diag_nonneg(&f.r));
        }
    }
}

#[test]
fn fast_givens_variant_also_factors() {
    let h = common::quat_hessenberg(12, 8);
    let f = hess_qr_with(&h, GivensVariant::G1).unwrap();
    assert!(common::rel(&(&f.w * &f.r), &h) <= 1200.0 * EPS);
    assert!(common::unitarity_defect(&f.w) <= 1200.0 * EPS);
    for j in 0..12 {
        for i in j + 1..12 {
            assert_eq!(f.r.get(i, j), Quaternion::ZERO);
        }
    }
}

#[test]
fn hessenberg_qr_rejects_full_matrix() {
    match hess_qr(&common::dense(4, 2)) {
        Err(QuatError::StructureViolation { row, col, .. }) => assert!(row >= col + 2),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn quaternion_and_real_subdiagonal_give_same_r_magnitudes() {
    for seed in 0..5 {
        let q = common::dense(10, 70 + seed);
        let h1 = hess_reduce(&q, HessMethod::ViaH1, false).unwrap().h;
        let h2 = hess_reduce(&q, HessMethod::ViaH2, false).unwrap().h;
        let r1 = hess_qr(&h1).unwrap().r;
        let r2 = hess_qr(&h2).unwrap().r;
        for i in 0..10 {
            assert!((r1.get(i, i).norm() - r2.get(i, i).norm()).abs() <= 1e-10);
        }
    }
}

#[test]
fn unshifted_iteration_keeps_structure_and_spectrum() {
    let h = common::jrs_hessenberg(10, 42);
    let reference = oracle_eigvals(&h).unwrap();
    let mut cur = h.clone();
    for _ in 0..15 {
        cur = qr_iteration_unshifted(&cur, 1).unwrap();
        let s = check_structure(&cur, StructureKind::UpperJRSHessenberg, 0.0).unwrap();
        assert!(s.ok, "{s:?}");
        let d = spectrum_distance(&oracle_eigvals(&cur).unwrap(), &reference).unwrap();
        let scale: f64 = reference.iter().map(|e| e.modulus()).fold(1.0, f64::max);
        assert!(d <= 1e-9 * scale * 10.0, "{d:e}");
    }
    assert_eq!(qr_iteration_unshifted(&QuatMatrix::identity(4), 7).unwrap(), QuatMatrix::identity(4));
}

#[test]
fn hessenberg_qr_cost_is_quadratic() {
    if !opcount::enabled() {
        return;
    }
    let n = 50;
    let h = common::jrs_hessenberg(n, 1);
    let (_, c) = opcount::measure(|| hess_qr(&h).unwrap());
    assert!((c.total() as f64) <= 1.15 * 120.0 * (n * n) as f64, "{} flops", c.total());
}
