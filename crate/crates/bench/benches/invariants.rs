//! Benchmarks for the hot paths: the resolution-averaged degree-two
//! coefficient, its cycle sum, cycle restriction, face tracing, and seeded
//! walks.

use criterion::{criterion_group, criterion_main, Criterion};
use immgraph::diagram::convex_drawing;
use immgraph::knot::{a2_avg, alpha, KnotDiagram, DEFAULT_RESOLUTION_CAP};
use immgraph::moves::{random_walk, WalkLimits};
use immgraph::{Graph, PlaneCurve};
use std::hint::black_box;

fn invariants(c: &mut Criterion) {
    let fig8 = KnotDiagram::alternating(PlaneCurve::figure_eight()).unwrap();
    c.bench_function("a2_figure_eight", |b| b.iter(|| black_box(&fig8).a2()));

    let trefoil = PlaneCurve::trefoil();
    c.bench_function("a2_average_trefoil", |b| {
        b.iter(|| a2_avg(black_box(&trefoil), DEFAULT_RESOLUTION_CAP).unwrap())
    });

    let k6 = convex_drawing(&Graph::complete(6), None).unwrap();
    c.bench_function("alpha_convex_k6", |b| {
        b.iter(|| alpha(black_box(&k6), 6, DEFAULT_RESOLUTION_CAP).unwrap())
    });

    let k12 = convex_drawing(&Graph::complete(12), None).unwrap();
    let cycle = [0u32, 1, 2, 3, 4, 5, 6, 8, 10, 7, 11, 9];
    c.bench_function("restrict_k12_cycle", |b| {
        b.iter(|| k12.restrict_to_cycle(black_box(&cycle)).unwrap())
    });

    let k8 = convex_drawing(&Graph::complete(8), None).unwrap();
    c.bench_function("face_census_convex_k8", |b| {
        b.iter(|| black_box(&k8).face_count())
    });

    c.bench_function("walk_50_steps_k6", |b| {
        b.iter(|| {
            let limits = WalkLimits {
                max_crossings: 40,
                cycle_cap: None,
            };
            random_walk(black_box(&k6), 50, 1, limits).unwrap()
        })
    });
}

criterion_group!(benches, invariants);
criterion_main!(benches);
