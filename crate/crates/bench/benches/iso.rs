use criterion::{criterion_group, criterion_main, Criterion};
use srconf_bench::{graph, plane_minus_triangle};
use srconf_core::constructions::{lp4, moore_configuration, PolarityFlags};
use srconf_core::iso::{analyse, canonical_form};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    group.sample_size(20);
    group.bench_function("lp4_2", |b| b.iter(|| lp4(2, PolarityFlags::default())));
    group.bench_function("pg29_minus_triangle", |b| b.iter(|| plane_minus_triangle(9)));
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let plain = lp4(2, PolarityFlags::default()).unwrap();
    let both = lp4(2, PolarityFlags { hyperplane_side: true, point_side: true }).unwrap();
    let hs = moore_configuration(&graph("hoffman-singleton")).unwrap();
    let t9 = plane_minus_triangle(9);
    let mut group = c.benchmark_group("analyse");
    group.sample_size(10);
    group.bench_function("lp4_2", |b| b.iter(|| analyse(&plain)));
    group.bench_function("lp4_2_both", |b| b.iter(|| analyse(&both)));
    group.bench_function("hoffman_singleton", |b| b.iter(|| analyse(&hs)));
    group.bench_function("pg29_minus_triangle", |b| b.iter(|| canonical_form(&t9)));
    group.finish();
}

criterion_group!(benches, construction, canonical);
criterion_main!(benches);
