use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dcliff::operators as op;
use dcliff::quaternion_dirac as qd;
use dcliff::rational::rat;
use dcliff::{fischer, FamilySign, MixedVariant, Sign, Strategy};
use dcliff_bench::{homogeneous, quaternion};

fn dirac(c: &mut Criterion) {
    let mut group = c.benchmark_group("dirac");
    for n in [2, 3, 4] {
        let p = homogeneous(n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| op::dirac(black_box(p), Sign::Plus))
        });
    }
    group.finish();
}

fn monogenic_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("monogenic_kernel");
    group.sample_size(20);
    for k in [1, 2, 3] {
        group.bench_with_input(BenchmarkId::new("n3", k), &k, |b, &k| {
            b.iter(|| fischer::monogenic_kernel(k, 3, &rat(1, 2), FamilySign::Minus, Sign::Plus).unwrap())
        });
    }
    group.finish();
}

fn decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("fischer_decompose");
    group.sample_size(10);
    for k in [2, 3] {
        let p = homogeneous(3, k);
        group.bench_with_input(BenchmarkId::new("graded", k), &p, |b, p| {
            b.iter(|| fischer::fischer_decompose(black_box(p), Strategy::Graded).unwrap())
        });
    }
    group.finish();
}

fn quaternionic(c: &mut Criterion) {
    let f = quaternion(3, MixedVariant::MinusPlus.family());
    c.bench_function("mixed_dirac", |b| b.iter(|| qd::mixed_dirac(MixedVariant::MinusPlus, black_box(&f))));
    c.bench_function("laplacian_factorization", |b| b.iter(|| qd::verify_laplacian_factorization(black_box(&f))));
}

criterion_group!(benches, dirac, monogenic_kernel, decompose, quaternionic);
criterion_main!(benches);
