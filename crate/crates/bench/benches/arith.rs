use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use markov_deform::arith::{parse_rational, IntPoly};
use markov_deform::contfrac::{CFNegative, CFRegular};
use markov_deform::markov::{cohn_matrix_q, q_markov_value};
use markov_deform::qrat::{q_rational_negative, q_rational_regular};
use std::hint::black_box;

fn q_rationals(c: &mut Criterion) {
    let mut g = c.benchmark_group("q_rational");
    for frac in ["7/5", "89/55", "1597/987"] {
        let x = parse_rational(frac).unwrap();
        let reg = CFRegular::from_rational(&x).unwrap();
        let neg = CFNegative::from_rational(&x).unwrap();
        g.bench_with_input(BenchmarkId::new("regular", frac), &reg, |b, cf| {
            b.iter(|| q_rational_regular(black_box(cf)))
        });
        g.bench_with_input(BenchmarkId::new("negative", frac), &neg, |b, cf| {
            b.iter(|| q_rational_negative(black_box(cf)))
        });
    }
    g.finish();
}

fn cohn_traces(c: &mut Criterion) {
    let mut g = c.benchmark_group("q_markov_value");
    for word in ["a^2bab", "abab^2ab^2", "a^2ba^2baba^2bab"] {
        let w = word.parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(word), &w, |b, w| {
            b.iter(|| q_markov_value(black_box(w)).unwrap())
        });
    }
    g.finish();
    let w = "a^2ba^2baba^2bab".parse().unwrap();
    c.bench_function("cohn_matrix_q", |b| b.iter(|| cohn_matrix_q(black_box(&w))));
}

fn poly_mul(c: &mut Criterion) {
    let p = IntPoly::from_i64s(&[-1, -1, 1]).pow(40);
    let q = IntPoly::from_i64s(&[1, -2, 0, 1, -1]).pow(20);
    c.bench_function("intpoly_mul_deg80", |b| {
        b.iter(|| black_box(&p) * black_box(&q))
    });
    c.bench_function("intpoly_gcd_deg80", |b| {
        b.iter(|| black_box(&p).gcd(black_box(&q)))
    });
}

criterion_group!(benches, q_rationals, cohn_traces, poly_mul);
criterion_main!(benches);
