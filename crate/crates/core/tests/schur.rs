mod common;

use nalgebra::DMatrix;
use num_complex::Complex64;
use quatqr::{
    check_structure, eigs_from_schur, francis_first_col, francis_step, jrs_schur, oracle_eigvals, qr_full,
    quaternion_schur, quaternion_schur_with, spectrum_distance, trailing_shift, tridiag_hermitian, PairPolicy,
    QuatError, QuatMatrix, Quaternion, SchurOptions, SchurResult, ShiftPair, StdEigenvalue, StructureKind,
};

const EPS: f64 = f64::EPSILON;

fn backward(q: &QuatMatrix, s: &SchurResult) -> f64 {
    let w = s.w.as_ref().unwrap();
    let back = &(w * &s.t) * &w.adjoint();
    back.sub(q).unwrap().fro_norm() / q.fro_norm()
}

fn real(rows: usize, cols: usize, v: &[f64]) -> QuatMatrix {
    QuatMatrix::from_real(DMatrix::from_row_slice(rows, cols, v))
}

#[test]
fn backward_stable_and_structured() {
    for n in [1, 2, 3, 8, 32, 64] {
        for seed in 0..3 {
            let q = common::dense(n, 1000 * n as u64 + seed);
            let s = quaternion_schur(&q, 1e-14, None).unwrap();
            assert!(s.converged);
            let bound = 200.0 * n as f64 * EPS;
            assert!(backward(&q, &s) <= bound, "n={n} seed={seed}");
            assert!(common::unitarity_defect(s.w.as_ref().unwrap()) <= bound);
            let r = check_structure(&s.t, StructureKind::JRSSchur, 0.0).unwrap();
            assert!(r.ok, "{r:?}");
            assert_eq!(s.blocks.iter().sum::<usize>(), n);
        }
    }
}

#[test]
fn twenty_by_twenty_matches_oracle() {
    let q = common::dense(20, 77);
    let s = quaternion_schur(&q, 1e-14, None).unwrap();
    assert!(s.converged);
    let got = eigs_from_schur(&s).unwrap();
    let want = oracle_eigvals(&q).unwrap();
    let scale: f64 = want.iter().map(|e| e.modulus()).sum();
    assert!(spectrum_distance(&got, &want).unwrap() <= 1e-8 * scale);
    assert!(got.iter().all(|e| e.im >= -1e-12));
}

#[test]
fn eigen_only_mode_agrees() {
    let q = common::dense(15, 3);
    let full = quaternion_schur(&q, 1e-14, None).unwrap();
    let lean = quaternion_schur_with(
        &q,
        &SchurOptions {
            accumulate: false,
            ..SchurOptions::default()
        },
    )
    .unwrap();
    assert!(lean.w.is_none() && lean.converged);
    let d = spectrum_distance(&eigs_from_schur(&full).unwrap(), &eigs_from_schur(&lean).unwrap()).unwrap();
    assert!(d <= 1e-10 * q.fro_norm());
}

#[test]
fn hermitian_gives_real_diagonal() {
    let q = common::hermitian(8, 21);
    let s = quaternion_schur(&q, 1e-14, None).unwrap();
    assert!(s.converged && s.blocks.iter().all(|&b| b == 1));
    let nq = q.fro_norm();
    for i in 0..8 {
        assert!(s.t.get(i, i).imag_norm() <= 1e-10 * nq);
        for j in i + 1..8 {
            assert!(s.t.get(i, j).norm() <= 1e-10 * nq);
        }
    }
    let mut ours: Vec<f64> = (0..8).map(|i| s.t.get(i, i).w).collect();
    let (t0, _) = tridiag_hermitian(&q).unwrap();
    let mut theirs: Vec<f64> = t0.symmetric_eigenvalues().iter().copied().collect();
    ours.sort_by(f64::total_cmp);
    theirs.sort_by(f64::total_cmp);
    for (a, b) in ours.iter().zip(&theirs) {
        assert!((a - b).abs() <= 1e-10 * nq);
    }
}

#[test]
fn unit_imaginaries_standardize_to_i() {
    let q = QuatMatrix::from_diagonal(&[Quaternion::I, Quaternion::J, Quaternion::K]);
    let s = quaternion_schur(&q, 1e-14, None).unwrap();
    for e in eigs_from_schur(&s).unwrap() {
        assert!(e.re.abs() < 1e-15 && (e.im - 1.0).abs() < 1e-15);
    }
}

#[test]
fn unitary_gives_unit_modulus_diagonal() {
    for seed in 0..3 {
        let u = common::unitary(16, 300 + seed);
        let s = quaternion_schur(&u, 1e-14, None).unwrap();
        assert!(s.converged);
        for i in 0..16 {
            assert!((s.t.get(i, i).norm() - 1.0).abs() <= 1e-9);
        }
    }
}

#[test]
fn real_rotation_block() {
    let h = real(2, 2, &[0.0, 1.0, -1.0, 0.0]);
    let keep = SchurOptions {
        pairs: PairPolicy::KeepComplex,
        ..SchurOptions::default()
    };
    let s = jrs_schur(&h, &keep).unwrap();
    assert_eq!((s.blocks.clone(), s.t.clone()), (vec![2], h.clone()));
    for e in eigs_from_schur(&s).unwrap() {
        assert!(e.re.abs() < 1e-15 && (e.im - 1.0).abs() < 4.0 * EPS);
    }
}

#[test]
fn upper_triangular_needs_no_steps() {
    let h = real(3, 3, &[1.0, 2.0, 3.0, 0.0, 4.0, 5.0, 0.0, 0.0, 6.0]);
    let s = jrs_schur(&h, &SchurOptions::default()).unwrap();
    assert_eq!(s.iterations, 0);
    assert_eq!(s.blocks, vec![1, 1, 1]);
    assert_eq!(s.t, h);
}

#[test]
fn cyclic_permutation_converges() {
    // Plain Francis shifts stall on this matrix.
    let h = real(3, 3, &[0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    let s = jrs_schur(&h, &SchurOptions::default()).unwrap();
    assert!(s.converged);
    let got = eigs_from_schur(&s).unwrap();
    let r = 3f64.sqrt() / 2.0;
    let want = [StdEigenvalue::new(1.0, 0.0), StdEigenvalue::new(-0.5, r), StdEigenvalue::new(-0.5, r)];
    assert!(spectrum_distance(&got, &want).unwrap() < 1e-12);
}

#[test]
fn exhausted_budget_returns_partial_result() {
    let q = common::dense(12, 9);
    let s = quaternion_schur(&q, 1e-14, Some(0)).unwrap();
    assert!(!s.converged);
    assert_eq!(s.iterations, 0);
    assert!(s.blocks.iter().any(|&b| b > 2));
    assert!(backward(&q, &s) <= 100.0 * 12.0 * EPS);
    assert!(matches!(eigs_from_schur(&s), Err(QuatError::NotConverged { .. })));
}

#[test]
fn deflation_is_monotone() {
    let h = common::jrs_hessenberg(10, 5);
    let mut last = 0;
    for k in 0..40 {
        let s = jrs_schur(
            &h,
            &SchurOptions {
                max_sweeps: Some(k),
                ..SchurOptions::default()
            },
        )
        .unwrap();
        let q: usize = s.blocks.iter().rev().take_while(|&&b| b <= 2).sum();
        assert!(q >= last, "step {k}: {q} < {last}");
        last = q;
        if s.converged {
            assert_eq!(q, 10);
            return;
        }
    }
    panic!("no convergence in 40 steps");
}

#[test]
fn shift_examples() {
    let cases: [(QuatMatrix, f64, f64); 3] = [
        (real(2, 2, &[2.0, 0.0, 0.0, 1.0]), 2.0, 1.0),
        (real(2, 2, &[0.0, 1.0, -1.0, 0.0]), 0.0, 1.0),
        (QuatMatrix::from_diagonal(&[Quaternion::I, Quaternion::I * 3.0]), 0.0, 1.0),
    ];
    for (b, t, d) in cases {
        let s = trailing_shift(&b, 1).unwrap();
        assert!((s.t - t).abs() < 1e-14 && (s.d - d).abs() < 1e-14, "{s:?}");
    }
    let k = Complex64::new(0.3, -1.7);
    let (a, b) = (ShiftPair::from_kappa(k), ShiftPair::from_kappa(k.conj()));
    assert_eq!((a.t, a.d), (b.t, b.d));
}

#[test]
fn first_column_matches_dense_polynomial() {
    let h = common::quat_hessenberg(5, 17);
    let (t, d) = (0.7, 1.9);
    let h2 = &h * &h;
    let poly = h2.sub(&h.scale(t)).unwrap().add(&QuatMatrix::identity(5).scale(d)).unwrap();
    let f = francis_first_col(&h, 0, t, d).unwrap();
    for i in 0..5 {
        let want = poly.get(i, 0);
        let got = f.get(i).copied().unwrap_or(Quaternion::ZERO);
        assert!((got - want).norm() < 1e-14, "row {i}");
    }
    let f = francis_first_col(&QuatMatrix::identity(4), 0, 2.0, 1.0).unwrap();
    assert_eq!(f, [Quaternion::ZERO; 3]);
    let ch = real(3, 3, &[1.0, 2.0, 0.5, 3.0, 4.0, 0.5, 0.0, 0.7, 0.5]);
    let f = francis_first_col(&ch, 0, 5.0, -2.0).unwrap();
    assert!(f[0].norm() < 1e-14 && f[1].norm() < 1e-14);
}

#[test]
fn francis_step_agrees_with_explicit_double_shift() {
    for seed in 0..5 {
        let n = 7;
        let h = common::jrs_hessenberg(n, 60 + seed);
        let sh = trailing_shift(&h, n - 1).unwrap();
        let m = (&h * &h)
            .sub(&h.scale(sh.t))
            .unwrap()
            .add(&QuatMatrix::identity(n).scale(sh.d))
            .unwrap();
        let z = qr_full(&m).unwrap().w;
        let explicit = &(&z.adjoint() * &h) * &z;
        let mut implicit = h.clone();
        let mut w = QuatMatrix::identity(n);
        francis_step(&mut implicit, 0, n - 1, sh, Some(&mut w)).unwrap();
        let back = &(&w * &implicit) * &w.adjoint();
        assert!(common::rel(&back, &h) <= 100.0 * n as f64 * EPS);
        // Entries of the last rows depend on the conditioning of the shift
        // polynomial; the leading columns are compared tightly.
        for j in 0..n - 2 {
            for i in 0..n {
                let d = (implicit.get(i, j).norm() - explicit.get(i, j).norm()).abs();
                assert!(d <= 1e-8 * h.fro_norm(), "seed {seed} ({i},{j}): {d:e}");
            }
        }
    }
}

#[test]
fn francis_steps_keep_hessenberg_structure() {
    let mut h = common::jrs_hessenberg(10, 8);
    for _ in 0..30 {
        let sh = trailing_shift(&h, 9).unwrap();
        if (1..10).any(|i| h.get(i, i - 1).norm() < 1e-300) {
            break;
        }
        francis_step(&mut h, 0, 9, sh, None).unwrap();
        let r = check_structure(&h, StructureKind::UpperJRSHessenberg, 0.0).unwrap();
        assert!(r.ok, "{r:?}");
    }
}

#[test]
fn francis_step_on_companion_matrix() {
    // roots 1, 2, 3
    let mut h = real(3, 3, &[6.0, -11.0, 6.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
    // The first shift is 0 (nilpotent trailing block), so the fast phase
    // starts late; the fourth step lands far below the threshold.
    let mut best = f64::INFINITY;
    for _ in 0..4 {
        let sh = trailing_shift(&h, 2).unwrap();
        francis_step(&mut h, 0, 2, sh, None).unwrap();
        best = h.get(2, 1).norm().min(h.get(1, 0).norm());
        if best < 1e-12 {
            break;
        }
    }
    assert!(best < 1e-12, "{best:e}");
    let e = oracle_eigvals(&h).unwrap();
    let want = [1.0, 2.0, 3.0].map(|x| StdEigenvalue::new(x, 0.0));
    assert!(spectrum_distance(&e, &want).unwrap() < 1e-10);
}

#[test]
fn francis_step_rejects_bad_windows() {
    let mut h = common::jrs_hessenberg(6, 1);
    let sh = ShiftPair::from_kappa(Complex64::new(1.0, 0.0));
    assert!(matches!(francis_step(&mut h, 0, 1, sh, None), Err(QuatError::BadWindow { .. })));
    h.set(3, 2, Quaternion::ZERO);
    assert!(matches!(francis_step(&mut h, 0, 5, sh, None), Err(QuatError::ReducedWindow { row: 3, col: 2 })));
}
