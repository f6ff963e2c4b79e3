use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hmeb_bench::scene;
use hmeb_core::{ball, distance, MetricKind};
use std::hint::black_box;

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance");
    for m in [4, 16, 64] {
        let (omega, pts) = scene(m as u64, m, 64);
        for kind in MetricKind::ALL {
            group.bench_with_input(BenchmarkId::new(kind.name(), m), &m, |b, _| {
                b.iter(|| {
                    let mut acc = 0.0;
                    for w in pts.windows(2) {
                        acc += distance(&omega, kind, w[0], w[1]).unwrap();
                    }
                    black_box(acc)
                })
            });
        }
    }
    group.finish();
}

fn balls(c: &mut Criterion) {
    let mut group = c.benchmark_group("ball");
    for m in [4, 16, 64] {
        let (omega, pts) = scene(100 + m as u64, m, 1);
        for kind in MetricKind::ALL {
            group.bench_with_input(BenchmarkId::new(kind.name(), m), &m, |b, _| {
                b.iter(|| black_box(ball(&omega, kind, pts[0], 0.7).unwrap()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, distances, balls);
criterion_main!(benches);
