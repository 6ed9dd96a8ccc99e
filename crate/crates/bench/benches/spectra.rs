use aalpha_core::generators::gnp;
use aalpha_core::invariants::clique_number;
use aalpha_core::spectra::{build_a_alpha, sym_eigensystem, sym_eigenvalues};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for n in [8, 16, 32, 64] {
        let m = build_a_alpha(&gnp(n, 0.3, 7).unwrap(), 0.5).unwrap();
        group.bench_with_input(BenchmarkId::new("eigenvalues", n), &m, |b, m| {
            b.iter(|| sym_eigenvalues(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("eigensystem", n), &m, |b, m| {
            b.iter(|| sym_eigensystem(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn cliques(c: &mut Criterion) {
    let mut group = c.benchmark_group("clique_number");
    for n in [20, 40, 60] {
        let g = gnp(n, 0.5, 11).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| clique_number(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, jacobi, cliques);
criterion_main!(benches);
