use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrbench::{generate, Family, MatGenSpec};
use quatqr::{eigvals, hess_qr, hess_reduce, quaternion_schur, HessMethod, QuatMatrix};

const ORDERS: [usize; 3] = [32, 64, 128];

fn input(family: Family, n: usize) -> QuatMatrix {
    generate(&MatGenSpec { family, n, seed: 1 }).expect("n >= 2")
}

fn hessenberg(c: &mut Criterion) {
    let mut g = c.benchmark_group("hess_reduce");
    for n in ORDERS {
        let q = input(Family::RandomDense, n);
        for (name, m) in [("h1", HessMethod::ViaH1), ("h2", HessMethod::ViaH2), ("h3", HessMethod::ViaH3)] {
            g.bench_with_input(BenchmarkId::new(name, n), &q, |b, q| {
                b.iter(|| hess_reduce(black_box(q), m, true).unwrap())
            });
        }
    }
    g.finish();
}

fn hessenberg_qr(c: &mut Criterion) {
    let mut g = c.benchmark_group("hess_qr");
    for n in [64, 256, 512] {
        let h = input(Family::RandomHessenberg, n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| b.iter(|| hess_qr(black_box(h)).unwrap()));
    }
    g.finish();
}

fn schur(c: &mut Criterion) {
    let mut g = c.benchmark_group("schur");
    g.sample_size(10);
    for n in ORDERS {
        let q = input(Family::RandomDense, n);
        g.bench_with_input(BenchmarkId::new("full", n), &q, |b, q| {
            b.iter(|| quaternion_schur(black_box(q), 1e-14, None).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("eigvals", n), &q, |b, q| {
            b.iter(|| eigvals(black_box(q), 1e-14, None).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, hessenberg, hessenberg_qr, schur);
criterion_main!(benches);
