use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mcv_bench::{complete, corpus_sample, fig1, ladder};
use mcv_core::{brute_force_mcvs, enumerate_mcvs, EnumerationOptions, SelectionOrder};
use std::hint::black_box;

fn fig1_bench(c: &mut Criterion) {
    let g = fig1();
    let opts = EnumerationOptions::default();
    c.bench_function("fig1/corrected", |b| b.iter(|| enumerate_mcvs(black_box(&g), &opts)));
    c.bench_function("fig1/oracle", |b| b.iter(|| brute_force_mcvs(black_box(&g))));
}

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete");
    for n in [6, 9, 12] {
        let g = complete(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| enumerate_mcvs(g, &EnumerationOptions::default()))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("ladder");
    for len in [4, 8, 12] {
        let g = ladder(len);
        group.bench_with_input(BenchmarkId::from_parameter(len), &g, |b, g| {
            b.iter(|| enumerate_mcvs(g, &EnumerationOptions::default()))
        });
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let graphs = corpus_sample(50);
    let random = EnumerationOptions::default().with_order(SelectionOrder::Random(3));
    let mut group = c.benchmark_group("corpus50");
    group.bench_function("corrected", |b| {
        b.iter(|| graphs.iter().map(|g| enumerate_mcvs(g, &random).mcvs.len()).sum::<usize>())
    });
    group.bench_function("oracle", |b| {
        b.iter(|| graphs.iter().map(|g| brute_force_mcvs(g).unwrap().mcvs.len()).sum::<usize>())
    });
    group.finish();
}

criterion_group!(benches, fig1_bench, families, corpus);
criterion_main!(benches);
