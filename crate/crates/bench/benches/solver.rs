use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nilbound_core::bound::{solve_bruteforce, solve_exact, BoundProblem};
use nilbound_core::families::{make_nabc, make_nap};
use nilbound_core::lower_bound_report;

fn problems() -> Vec<(&'static str, BoundProblem)> {
    vec![
        ("p1_n49", BoundProblem::new(1, vec![49]).unwrap()),
        ("p2_n30_8", BoundProblem::new(2, vec![30, 8]).unwrap()),
        ("p3_n27_18_9", BoundProblem::new(3, vec![27, 18, 9]).unwrap()),
        ("p4_n40_20_10_4", BoundProblem::new(4, vec![40, 20, 10, 4]).unwrap()),
    ]
}

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for (name, prob) in problems() {
        group.bench_with_input(BenchmarkId::new("exact", name), &prob, |b, p| b.iter(|| solve_exact(black_box(p))));
    }
    // the exhaustive oracle is only run on the small instances
    for (name, prob) in problems().into_iter().take(2) {
        group.bench_with_input(BenchmarkId::new("bruteforce", name), &prob, |b, p| {
            b.iter(|| solve_bruteforce(black_box(p)))
        });
    }
    group.finish();
}

fn reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("lower_bound_report");
    let nap = make_nap(2, 3).unwrap();
    let nabc = make_nabc(2, 4, 2).unwrap();
    group.bench_function("n_{2,3}", |b| b.iter(|| lower_bound_report(black_box(nap.algebra()), None).unwrap()));
    group.bench_function("n_{2,4,2}", |b| b.iter(|| lower_bound_report(black_box(nabc.algebra()), None).unwrap()));
    group.finish();
}

criterion_group!(benches, solvers, reports);
criterion_main!(benches);
