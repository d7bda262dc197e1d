use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nsg_core::{
    brute_force_sem, enumerate_all, enumerate_class, enumerate_class_setform,
    enumerate_irreducible_kunz, KunzVector,
};
use std::hint::black_box;

fn irreducibles(c: &mut Criterion) {
    let mut g = c.benchmark_group("irreducible");
    for f in [20usize, 30, 40] {
        g.bench_with_input(BenchmarkId::from_parameter(f), &f, |b, &f| {
            b.iter(|| enumerate_irreducible_kunz(black_box(f)).count())
        });
    }
    g.finish();
}

fn full_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_all");
    for f in [16usize, 20, 24] {
        g.bench_with_input(BenchmarkId::from_parameter(f), &f, |b, &f| {
            b.iter(|| enumerate_all(black_box(f)).count())
        });
    }
    g.finish();
}

fn class_paths(c: &mut Criterion) {
    let f = 18;
    let xs: Vec<KunzVector> = enumerate_irreducible_kunz(f).collect();
    let ss: Vec<_> = xs.iter().map(KunzVector::to_semigroup).collect();
    let mut g = c.benchmark_group("classes_f18");
    g.bench_function("kunz", |b| {
        b.iter(|| {
            xs.iter()
                .map(|x| enumerate_class(x).unwrap().count())
                .sum::<usize>()
        })
    });
    g.bench_function("setform", |b| {
        b.iter(|| {
            ss.iter()
                .map(|s| enumerate_class_setform(s).unwrap().len())
                .sum::<usize>()
        })
    });
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for f in [16usize, 20] {
        g.bench_with_input(BenchmarkId::from_parameter(f), &f, |b, &f| {
            b.iter(|| brute_force_sem(black_box(f)).unwrap().total)
        });
    }
    g.finish();
}

criterion_group!(benches, irreducibles, full_enumeration, class_paths, oracle);
criterion_main!(benches);
