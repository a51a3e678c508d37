//! Benchmarks for the arithmetic kernel and the elimination pipelines.

use criterion::{criterion_group, criterion_main, Criterion};

use canny_bench::{fixture, random_poly};
use canny_core::{macaulay_resultant, pres, sylvester_resultant, VarSet, DEFAULT_SEED};

fn poly_multiplication(c: &mut Criterion) {
    let vs = VarSet::of(&["x1", "x2", "y"]);
    let a = random_poly(&vs, 8, 60, 1);
    let b = random_poly(&vs, 8, 60, 2);
    c.bench_function("poly_mul_sparse_60_terms", |bch| bch.iter(|| &a * &b));
}

fn sylvester_on_the_intro_system(c: &mut Criterion) {
    let sys = fixture("intro");
    c.bench_function("sylvester_intro", |bch| {
        bch.iter(|| sylvester_resultant(&sys).unwrap())
    });
}

fn macaulay_on_three_lines(c: &mut Criterion) {
    let sys = fixture("lines3");
    c.bench_function("macaulay_lines3", |bch| {
        bch.iter(|| macaulay_resultant(&sys).unwrap())
    });
}

fn pres_on_the_embedded_fixture(c: &mut Criterion) {
    let sys = fixture("embedded");
    c.bench_function("pres_embedded", |bch| {
        bch.iter(|| pres(&sys, 2, DEFAULT_SEED, 10).unwrap())
    });
}

criterion_group!(
    benches,
    poly_multiplication,
    sylvester_on_the_intro_system,
    macaulay_on_three_lines,
    pres_on_the_embedded_fixture
);
criterion_main!(benches);
