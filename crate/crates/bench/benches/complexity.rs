use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use kabelian::complexity::complexity_upto;
use kabelian::{k_abelian_complexity, k_abelian_eq, k_abelian_eq_naive, profile, Level, WindowPolicy, WordSpec};
use kabelian_bench::corpus;

fn expand(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand");
    let length = 1 << 16;
    group.throughput(Throughput::Elements(length as u64));
    for spec in [WordSpec::ThueMorse, WordSpec::Fibonacci, WordSpec::u_word(vec![3]).unwrap()] {
        group.bench_function(spec.to_string(), |b| b.iter(|| spec.expand(black_box(length)).unwrap()));
    }
    group.finish();
}

fn equivalence(c: &mut Criterion) {
    let mut group = c.benchmark_group("equivalence");
    let words = corpus(64);
    let (u, v) = (&words[0].1, &words[1].1);
    for k in [2, 4] {
        group.bench_with_input(BenchmarkId::new("key", k), &k, |b, &k| b.iter(|| k_abelian_eq(u, v, k)));
        group.bench_with_input(BenchmarkId::new("naive", k), &k, |b, &k| b.iter(|| k_abelian_eq_naive(u, v, k)));
    }
    group.finish();
}

/// All class counts for n <= 256 on one prefix: one sliding pass per n
/// against a single suffix-array scan.
fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("counting");
    group.sample_size(10);
    let n_max = 256;
    for (name, w) in corpus(1 << 14) {
        group.bench_function(BenchmarkId::new("sliding", name), |b| {
            b.iter(|| {
                (1..=n_max)
                    .map(|n| k_abelian_complexity(&w, Level::Finite(2), n).unwrap())
                    .sum::<usize>()
            })
        });
        group.bench_function(BenchmarkId::new("index", name), |b| {
            b.iter(|| complexity_upto(&w, Level::Finite(2), n_max).unwrap().iter().sum::<usize>())
        });
    }
    group.finish();
}

fn profiles(c: &mut Criterion) {
    let mut group = c.benchmark_group("profile");
    group.sample_size(10);
    let policy = WindowPolicy::default();
    for n_max in [256, 1024] {
        group.bench_with_input(BenchmarkId::new("thue-morse-k2", n_max), &n_max, |b, &n| {
            b.iter(|| profile(&WordSpec::ThueMorse, Level::Finite(2), n, &policy).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, expand, equivalence, counting, profiles);
criterion_main!(benches);
