use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hurwitz_core::belyi::{enumerate_fatgraphs, lattice_count, GraphMode};
use hurwitz_core::recursion::{pruned_simple_polynomial, Engine, RecursionForm};
use hurwitz_core::symgroup::count_simple;
use hurwitz_core::Budget;

fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("recursion");
    for (g, mu) in [(0usize, vec![3usize, 3, 2, 2]), (1, vec![4, 3]), (2, vec![5])] {
        group.bench_with_input(BenchmarkId::new("cold", format!("g{g}-{mu:?}")), &(g, mu), |b, (g, mu)| {
            b.iter(|| Engine::new(RecursionForm::Corrected).pruned(1, *g, black_box(mu)))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("oracle/pruned g1 (2,2)", |b| {
        b.iter(|| count_simple(1, black_box(&[2, 2]), true, &budget).unwrap())
    });
}

fn reconstruction(c: &mut Criterion) {
    // Polynomials are cached after the first call, so this measures lookup.
    c.bench_function("polynomial/(0,5) cached", |b| b.iter(|| pruned_simple_polynomial(0, 5).unwrap()));
}

fn fatgraphs(c: &mut Criterion) {
    let budget = Budget::default();
    c.bench_function("fatgraphs/pruned g0 (4,3,3)", |b| {
        b.iter(|| enumerate_fatgraphs(0, black_box(&[4, 3, 3]), GraphMode::Pruned, &budget).unwrap())
    });
    c.bench_function("lattice/g1 (10)", |b| b.iter(|| lattice_count(1, black_box(&[10]), &budget).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = recursion, oracle, reconstruction, fatgraphs
}
criterion_main!(benches);
