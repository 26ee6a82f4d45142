use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperwave_core::continuous::{y_seq, Sequence};
use hyperwave_core::discrete::{y_dplus, DiscreteSpec};
use hyperwave_core::numerics::{gauss_2f1, ln_gamma, Hyp2F1Params};
use hyperwave_core::operators::{apply_casimir, inner_product};
use hyperwave_core::{EvalOptions, SeriesSpec};
use num_complex::Complex64;

fn gamma(c: &mut Criterion) {
    let mut g = c.benchmark_group("ln_gamma");
    for z in [Complex64::new(0.5, 1.0), Complex64::new(12.5, -30.0), Complex64::new(-7.3, 0.4)] {
        g.bench_with_input(BenchmarkId::from_parameter(z), &z, |b, &z| b.iter(|| ln_gamma(black_box(z))));
    }
    g.finish();
}

fn hypergeometric(c: &mut Criterion) {
    let opts = EvalOptions::default();
    let mut g = c.benchmark_group("gauss_2f1");
    for z in [0.3, 0.9, 0.999, -50.0] {
        let p = Hyp2F1Params::new(Complex64::new(0.75, 0.5), Complex64::new(0.25, 0.5), Complex64::new(0.5, 0.0), z);
        g.bench_with_input(BenchmarkId::from_parameter(z), &p, |b, &p| b.iter(|| gauss_2f1(black_box(p), &opts)));
    }
    g.finish();
}

fn functions(c: &mut Criterion) {
    let opts = EvalOptions::default();
    let mut g = c.benchmark_group("evaluate");
    for m in [1.0, 4.0, 10.0] {
        g.bench_with_input(BenchmarkId::new("y_dplus k=0", m), &m, |b, &m| {
            b.iter(|| y_dplus(0.0, m, black_box(1.3), black_box(0.4)))
        });
    }
    for m in [0, 3, 8] {
        g.bench_with_input(BenchmarkId::new("y_seq seq1 lambda=1", m), &m, |b, &m| {
            b.iter(|| y_seq(Sequence::One, m, 1.0, black_box(1.3), black_box(0.4), &opts))
        });
    }
    g.finish();
}

fn operators(c: &mut Criterion) {
    let opts = EvalOptions::default();
    let spec: SeriesSpec = DiscreteSpec::dplus(1.0, 3.0).unwrap().into();
    let f = spec.surface(opts);
    c.bench_function("apply_casimir D+ k=1 m=3", |b| b.iter(|| apply_casimir(&f, black_box(0.7), black_box(0.2), &opts)));
    let g = spec.surface(opts);
    c.bench_function("inner_product D+ k=1 m=3", |b| b.iter(|| inner_product(black_box(&f), &g, &opts)));
}

criterion_group!(benches, gamma, hypergeometric, functions, operators);
criterion_main!(benches);
