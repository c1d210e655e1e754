use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use magnus_forest::dendriform::{closed_magnus_series, ladder_log_oracle, TreeSeries};
use magnus_forest::numeric::{closed_tree_omega_parts, mps_omega_parts, prelie_omega_parts};
use magnus_forest::path::default_path;
use magnus_forest::perm::{PermSeries, Permutation};
use magnus_forest::RootedTree;

fn full_series(n: usize) -> TreeSeries {
    TreeSeries::from_terms(
        n,
        (1..=n / 2)
            .flat_map(RootedTree::enumerate)
            .map(|t| (t, magnus_forest::rational::int(1))),
    )
}

fn star(c: &mut Criterion) {
    let mut g = c.benchmark_group("tree_star");
    for n in [4usize, 6, 8] {
        let x = full_series(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| black_box(x.star(x).unwrap()))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("perm_star");
    for n in [4usize, 6] {
        let x = PermSeries::from_terms(
            n,
            (1..=n / 2)
                .flat_map(Permutation::all)
                .map(|p| (p, magnus_forest::rational::int(1))),
        );
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| black_box(x.star(x).unwrap()))
        });
    }
    g.finish();
}

fn closed_series(c: &mut Criterion) {
    let mut g = c.benchmark_group("magnus_series");
    for n in [5usize, 7] {
        g.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| {
            b.iter(|| black_box(closed_magnus_series(n)))
        });
        g.bench_with_input(BenchmarkId::new("log_oracle", n), &n, |b, &n| {
            b.iter(|| black_box(ladder_log_oracle(n).unwrap()))
        });
    }
    g.finish();
}

fn numeric_routes(c: &mut Criterion) {
    let a = default_path();
    let mut g = c.benchmark_group("numeric_omega");
    g.sample_size(20);
    for n in [3usize, 4, 5] {
        g.bench_with_input(BenchmarkId::new("mps", n), &n, |b, &n| {
            b.iter(|| black_box(mps_omega_parts(&a, n, false).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("mps_parallel", n), &n, |b, &n| {
            b.iter(|| black_box(mps_omega_parts(&a, n, true).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("trees", n), &n, |b, &n| {
            b.iter(|| black_box(closed_tree_omega_parts(&a, n).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("prelie", n), &n, |b, &n| {
            b.iter(|| black_box(prelie_omega_parts(&a, n).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, star, closed_series, numeric_routes);
criterion_main!(benches);
