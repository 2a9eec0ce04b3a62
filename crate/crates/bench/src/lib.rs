//! Criterion groups for the three exact routes and the quadrature oracle.

use criterion::{black_box, BenchmarkId, Criterion};

use salpeter::basis::QuantumNumbers;
use salpeter::kramers::first_order_method1;
use salpeter::laguerre_me::{first_order_method2, second_order_method2};
use salpeter::oracle::{gauss_laguerre, quad_expectation, sum_over_states_check};
use salpeter::rational::rat;
use salpeter::{epsilon1_general, epsilon2_general, ladder2d, level_table, FockState2D, Precision};

fn states() -> [QuantumNumbers; 3] {
    [(3, 0, 0), (3, 10, 7), (10, 25, 25)].map(|(d, n, l)| QuantumNumbers::new(d, n, l).unwrap())
}

fn label(q: &QuantumNumbers) -> String {
    format!("d{}_n{}_l{}", q.d(), q.twice_n() / 2, q.l())
}

pub fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("first_order");
    for q in states() {
        group.bench_with_input(BenchmarkId::new("closed_form", label(&q)), &q, |b, q| b.iter(|| epsilon1_general(black_box(q))));
        group.bench_with_input(BenchmarkId::new("kramers", label(&q)), &q, |b, q| b.iter(|| first_order_method1(black_box(q))));
        group.bench_with_input(BenchmarkId::new("laguerre", label(&q)), &q, |b, q| b.iter(|| first_order_method2(black_box(q))));
    }
    group.finish();

    let mut group = c.benchmark_group("second_order");
    for q in states() {
        group.bench_with_input(BenchmarkId::new("closed_form", label(&q)), &q, |b, q| b.iter(|| epsilon2_general(black_box(q))));
        group.bench_with_input(BenchmarkId::new("laguerre", label(&q)), &q, |b, q| b.iter(|| second_order_method2(black_box(q))));
    }
    group.finish();
}

pub fn ladder(c: &mut Criterion) {
    let mut group = c.benchmark_group("ladder2d");
    for (level, m) in [(0, 0), (10, 4), (40, 0)] {
        let s = FockState2D::new(level, m).unwrap();
        let id = format!("N{level}_m{m}");
        group.bench_with_input(BenchmarkId::new("first_order", &id), &s, |b, &s| b.iter(|| ladder2d::first_order_2d(black_box(s))));
        group.bench_with_input(BenchmarkId::new("second_order", &id), &s, |b, &s| b.iter(|| ladder2d::second_order_2d(black_box(s))));
    }
    group.finish();
}

pub fn spectrum(c: &mut Criterion) {
    let lambda = rat(1, 1000);
    c.bench_function("level_table_d10_N40", |b| b.iter(|| level_table(black_box(40), 10, &lambda).unwrap()));
}

pub fn quadrature(c: &mut Criterion) {
    let p = Precision::default();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("rule_40_nodes_uncached", |b| {
        let mut alpha = 0i64;
        // a fresh alpha each iteration defeats the rule cache
        b.iter(|| {
            alpha += 1;
            gauss_laguerre(&rat(alpha, 1), 40, p.bits()).unwrap()
        })
    });
    let q = QuantumNumbers::new(5, 4, 3).unwrap();
    group.bench_function("eta4_expectation_d5_n4_l3", |b| b.iter(|| quad_expectation(black_box(&q), 4, p).unwrap()));
    group.bench_function("sum_over_states_d5_n4_l3", |b| b.iter(|| sum_over_states_check(black_box(&q), 8, p).unwrap()));
    group.finish();
}
