use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hmeb_bench::instance;
use hmeb_core::{lp_type_solve, min_ball_bisection, MetricKind};
use std::hint::black_box;

fn lp_type(c: &mut Criterion) {
    let mut group = c.benchmark_group("lp_type");
    group.sample_size(20);
    for n in [100, 1000, 10000] {
        let inst = instance(n as u64, 8, n, MetricKind::Hilbert);
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| black_box(lp_type_solve(inst).unwrap()))
        });
    }
    group.finish();
}

fn bisection(c: &mut Criterion) {
    let mut group = c.benchmark_group("bisection");
    group.sample_size(10);
    for kind in MetricKind::ALL {
        let inst = instance(7, 8, 100, kind);
        group.bench_with_input(
            BenchmarkId::from_parameter(kind.name()),
            &inst,
            |b, inst| b.iter(|| black_box(min_ball_bisection(inst).unwrap())),
        );
    }
    group.finish();
}

criterion_group!(benches, lp_type, bisection);
criterion_main!(benches);
