use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lenslab::alexander::{ist_poly, type_a_poly, yamka_rep};
use lenslab::laurent::torus_polynomial;
use lenslab::lattice::{a_grid, check_traversable, trace, Window};
use lenslab::params::normalize;
use lenslab::verify::{run_all, sweep};
use lenslab_bench::params_between;

fn polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("polynomial");
    g.bench_function("torus 13,17", |b| b.iter(|| torus_polynomial(black_box(13), black_box(17))));
    let sp = normalize(199, 21).unwrap();
    g.bench_function("type_a 199,21", |b| b.iter(|| type_a_poly(black_box(&sp))));
    g.bench_function("torus reduction 199,21", |b| b.iter(|| yamka_rep(black_box(&sp))));
    for (p, k) in [(23, 7), (58, 7), (199, 21)] {
        g.bench_with_input(BenchmarkId::new("ist", format!("{p},{k}")), &(p, k), |b, &(p, k)| {
            b.iter(|| ist_poly(p, k))
        });
    }
    let batch = params_between(150, 160);
    g.bench_function("type_a p in 150..=160", |b| {
        b.iter(|| batch.iter().filter_map(|s| type_a_poly(s).ok()).count())
    });
    g.finish();
}

fn lattice(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice");
    let sp = normalize(59, 6).unwrap();
    let grid = a_grid(&sp, Window::default_a(59)).unwrap();
    g.bench_function("trace 59,6", |b| b.iter(|| trace(black_box(&grid))));
    g.bench_function("traversable 59,6", |b| b.iter(|| check_traversable(black_box(&grid))));
    g.finish();
}

fn reports(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let sp = normalize(19, 7).unwrap();
    g.bench_function("run_all 19,7", |b| b.iter(|| run_all(black_box(&sp))));
    g.bench_function("sweep p<=40", |b| b.iter(|| sweep(40, None)));
    g.finish();
}

criterion_group!(benches, polynomials, lattice, reports);
criterion_main!(benches);
