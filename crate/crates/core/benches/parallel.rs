//! Sequential versus rayon paths for the data-parallel kernels.
//!
//! The parallel variants only exist with the `parallel` feature; without it
//! the suite measures the sequential kernels alone.

use std::hint::black_box;
use std::path::Path;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sigmasum::expr::{evaluate_str, Config};
use sigmasum::{closure, corpus, linalg, series, AnnPoly, Field, Scalar, Series};

const Q: Field = Field::Rationals;

fn dense_series(order: usize) -> Series {
    let x = evaluate_str("alg((1-s)*T^3+T-2; 1)", &Config { order, field: Q }).unwrap();
    x.expansion().clone()
}

fn bench_series_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("series_mul");
    for order in [64, 256] {
        let x = dense_series(order);
        group.bench_with_input(BenchmarkId::new("sequential", order), &x, |b, x| {
            b.iter(|| series::mul_sequential(black_box(x), black_box(x)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", order), &x, |b, x| {
            b.iter(|| series::mul_parallel(black_box(x), black_box(x)))
        });
    }
    group.finish();
}

fn sylvester_like(n: usize) -> Vec<Vec<AnnPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = ((i * 7 + j * 3) % 5) as i64 - 2;
                    AnnPoly::from_i64(Q, &[&[k, 1], &[(i + j) as i64 % 3]])
                })
                .collect()
        })
        .collect()
}

fn bench_bareiss(c: &mut Criterion) {
    let mut group = c.benchmark_group("bareiss");
    group.sample_size(10);
    let m = sylvester_like(8);
    group.bench_function("sequential", |b| b.iter(|| linalg::det_bareiss_sequential(Q, black_box(m.clone()))));
    group.bench_function("dispatch", |b| b.iter(|| linalg::det_bareiss(Q, black_box(m.clone()))));
    group.finish();
}

fn bench_nullspace(c: &mut Criterion) {
    let x = dense_series(64);
    let rows: Vec<Vec<Scalar>> = (0..48).map(|i| (0..24).map(|j| x.coeff((i + j) % 64).clone()).collect()).collect();
    c.bench_function("nullspace_48x24", |b| b.iter(|| linalg::nullspace(Q, black_box(&rows), 24)));
}

fn bench_resultant(c: &mut Criterion) {
    let y = evaluate_str("alg((s-1)*T^2+T-(s+s^2); 1)", &Config::default()).unwrap();
    c.bench_function("sum_resultant_quadratics", |b| b.iter(|| closure::sum_resultant(black_box(y.ann()), black_box(y.ann()))));
}

fn bench_corpus(c: &mut Criterion) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let cases = corpus::load_dir(&dir).unwrap();
    let cfg = Config { order: 32, field: Q };
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| corpus::run_cases_sequential(black_box(&cases), &cfg)));
    group.bench_function("dispatch", |b| b.iter(|| corpus::run_cases(black_box(&cases), &cfg)));
    group.finish();
}

criterion_group!(benches, bench_series_mul, bench_bareiss, bench_nullspace, bench_resultant, bench_corpus);
criterion_main!(benches);
