use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use trialab::crossed::{check_crossed_module, crossed_from_ideal};
use trialab::functors::{t_from_leibniz, t_from_triassoc, Variant};
use trialab::linalg::{int, unit_vector, Subspace};
use trialab::operators::{default_grid, search_operators};
use trialab::structure::check_structure;
use trialab::{fixtures, OperatorKind};

fn structure(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_structure");
    for (name, a) in [
        ("leibniz3", fixtures::leibniz3()),
        ("tri2", fixtures::tri2()),
        ("ternary2", fixtures::ternary2()),
        ("t_leibniz3", t_from_leibniz(&fixtures::leibniz3()).unwrap()),
        ("t_tri2", t_from_triassoc(&fixtures::tri2(), Variant::Main).unwrap()),
    ] {
        g.bench_function(name, |b| b.iter(|| check_structure(black_box(&a))));
    }
    g.finish();
}

fn crossed(c: &mut Criterion) {
    let l = fixtures::leibniz3();
    let cm = crossed_from_ideal(&l, &Subspace::span(3, &[unit_vector(3, 0), unit_vector(3, 1)]).unwrap()).unwrap();
    c.bench_function("check_crossed_module/leibniz3", |b| b.iter(|| check_crossed_module(black_box(&cm)).unwrap()));
}

fn search(c: &mut Criterion) {
    let grid = default_grid();
    let mut g = c.benchmark_group("search_operators");
    g.sample_size(10);
    let tri = fixtures::tri2();
    g.bench_function("tri2/nijenhuis", |b| {
        b.iter(|| search_operators(black_box(&tri), &OperatorKind::Nijenhuis, &grid, false).unwrap())
    });
    let l = fixtures::leibniz_dim2_catalog().remove(0);
    g.bench_function("leibniz2/rota-baxter-0", |b| {
        b.iter(|| search_operators(black_box(&l), &OperatorKind::RotaBaxter(int(0)), &grid, false).unwrap())
    });
    g.finish();
}

criterion_group!(benches, structure, crossed, search);
criterion_main!(benches);
