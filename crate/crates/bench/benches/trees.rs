use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use markov_deform::arith::BigInt;
use markov_deform::bridge::bridge_check_tree;
use markov_deform::castling::{
    figure4_search, figure4_targets, markov_subtree_scan, t_markov_tree, CastlingTuple,
    FIGURE4_MAX_DEGREE, FIGURE4_MAX_LEN,
};
use markov_deform::markov::{markov_tree, q_markov_tree};
use std::hint::black_box;

fn triple_trees(c: &mut Criterion) {
    let mut g = c.benchmark_group("tree");
    for depth in [6, 8] {
        g.bench_with_input(BenchmarkId::new("markov", depth), &depth, |b, &d| {
            b.iter(|| markov_tree(black_box(d)))
        });
        g.bench_with_input(BenchmarkId::new("qmarkov", depth), &depth, |b, &d| {
            b.iter(|| q_markov_tree(black_box(d)))
        });
        g.bench_with_input(BenchmarkId::new("tmarkov", depth), &depth, |b, &d| {
            b.iter(|| t_markov_tree(black_box(d)))
        });
    }
    g.finish();
}

fn searches(c: &mut Criterion) {
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    let targets = figure4_targets();
    g.bench_function("figure4", |b| {
        b.iter(|| figure4_search(&targets, FIGURE4_MAX_DEGREE, FIGURE4_MAX_LEN))
    });
    let seed = CastlingTuple::new(BigInt::from(3), vec![1.into(), 1.into(), 2.into()]).unwrap();
    let budget = BigInt::from(1_000_000);
    g.bench_function("markov_scan_1e6", |b| {
        b.iter(|| markov_subtree_scan(&seed, black_box(&budget)).unwrap())
    });
    g.bench_function("bridge_depth_6", |b| {
        b.iter(|| bridge_check_tree(black_box(6)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, triple_trees, searches);
criterion_main!(benches);
