use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superlie::par;
use superlie::partition::Partition;
use superlie::tableau::{stat_table, MajKind, DEFAULT_BUDGET};
use superlie::verify::{run_suite, Suite, SuiteBounds};

fn tableau_statistics(c: &mut Criterion) {
    let mut group = c.benchmark_group("stat_table");
    group.sample_size(10);
    for shape in ["(4,3,2)", "(4,3,2,1)"] {
        let lambda: Partition = shape.parse().unwrap();
        group.bench_with_input(BenchmarkId::new("parallel", shape), &lambda, |b, l| {
            b.iter(|| black_box(stat_table(l, MajKind::Maj, DEFAULT_BUDGET).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("sequential", shape), &lambda, |b, l| {
            b.iter(|| par::sequential(|| black_box(stat_table(l, MajKind::Maj, DEFAULT_BUDGET).unwrap())))
        });
    }
    group.finish();
}

fn verify_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (suite, size) in [(Suite::Hook, 8), (Suite::Kw, 8), (Suite::Symmetry, 8)] {
        let bounds = SuiteBounds { size, q_cap: 12 };
        group.bench_function(BenchmarkId::new("parallel", suite.name()), |b| {
            b.iter(|| black_box(run_suite(suite, bounds).unwrap()))
        });
        group.bench_function(BenchmarkId::new("sequential", suite.name()), |b| {
            b.iter(|| par::sequential(|| black_box(run_suite(suite, bounds).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, tableau_statistics, verify_suites);
criterion_main!(benches);
