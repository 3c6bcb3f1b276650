use std::hint::black_box;

use cantor_core::random::{random_core, random_group_element, random_transducer};
use cantor_core::{
    compose, fixtures, invert, is_bisynchronizing, minimize, order_in_on, outer_class_equal, sync_level, Alphabet,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn minimization(c: &mut Criterion) {
    let a = Alphabet::new(3, 2).unwrap();
    let mut group = c.benchmark_group("minimize");
    for states in [4, 8, 16] {
        let t = random_transducer(a, states, 2, 11).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(states), &t, |b, t| b.iter(|| minimize(black_box(t))));
    }
    group.finish();
}

fn canonical_forms(c: &mut Criterion) {
    let t = minimize(&fixtures::balanced_binary()).unwrap();
    c.bench_function("canonical_form/balanced_binary", |b| b.iter(|| black_box(&t).canonical_form()));
}

fn synchronization(c: &mut Criterion) {
    let mut group = c.benchmark_group("sync_level");
    for states in [8, 32, 64] {
        let t = random_core(2, states, 2, 5).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(states), &t, |b, t| b.iter(|| sync_level(black_box(t))));
    }
    group.finish();
}

fn group_operations(c: &mut Criterion) {
    let a = Alphabet::new(3, 2).unwrap();
    let g = random_group_element(a, 6, 1).unwrap();
    let h = random_group_element(a, 6, 2).unwrap();
    let phi = fixtures::two_root_ternary();
    c.bench_function("compose/prefix_maps", |b| b.iter(|| compose(black_box(&g), black_box(&h))));
    c.bench_function("invert/two_root_ternary", |b| b.iter(|| invert(black_box(&phi))));
    c.bench_function("is_bisynchronizing/two_root_ternary", |b| b.iter(|| is_bisynchronizing(black_box(&phi))));
}

fn outer_classes(c: &mut Criterion) {
    let a = Alphabet::new(3, 2).unwrap();
    let phi = fixtures::two_root_ternary();
    let g = random_group_element(a, 4, 3).unwrap();
    let phi_g = compose(&phi, &g).unwrap();
    c.bench_function("outer_class_equal/coset", |b| b.iter(|| outer_class_equal(black_box(&phi), black_box(&phi_g))));
    let involution = fixtures::binary_involution();
    c.bench_function("order_in_on/involution", |b| b.iter(|| order_in_on(black_box(&involution), 8)));
}

criterion_group!(benches, minimization, canonical_forms, synchronization, group_operations, outer_classes);
criterion_main!(benches);
