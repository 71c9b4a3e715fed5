//! Each kernel is timed inside a one-thread rayon pool and inside the default
//! pool. Build with `--no-default-features` to time the non-rayon code path.

use alexander_core::corpus;
use alexander_core::covers::{
    cover_homology, hironaka_predicted_betti, mod_p_cover, reidemeister_schreier,
};
use alexander_core::laurent::root_of_unity_norm;
use alexander_core::{parse_poly, AlexanderMatrix, LaurentPoly};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPool;

fn pools() -> [(&'static str, ThreadPool); 2] {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    [("1-thread", single), ("pool", all)]
}

fn dense_matrix() -> AlexanderMatrix {
    let entries = [
        "t1 - 1",
        "t2 + 2",
        "t3^-1",
        "1 - t1*t2",
        "t2*t3 + 1",
        "t3 - t1",
        "2*t1^2 - 1",
        "t2^-1 + t3",
        "t1 + t2 + t3",
        "3",
        "t1*t3 - t2",
        "1 + t2^2",
        "t1^-1 - 2",
        "t3^2",
        "t1 - t2",
        "t2 - 1",
        "t1*t2*t3 + 1",
        "t3 + 2",
        "t1^2 - t3",
        "t2^-1",
        "1 - t3",
        "t1 + 3",
        "t2*t3^-1",
        "t1 - 1 + t3",
        "t2^2 - t1",
    ];
    let polys: Vec<LaurentPoly> = entries.iter().map(|s| parse_poly(s, 3).unwrap()).collect();
    AlexanderMatrix::from_rows(3, 5, polys.chunks(5).map(<[LaurentPoly]>::to_vec).collect())
        .unwrap()
}

fn minors(c: &mut Criterion) {
    let m = dense_matrix();
    let mut g = c.benchmark_group("minors_gcd 5x5 size 3");
    for (label, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(label), |b| {
            b.iter(|| pool.install(|| m.minors_gcd(3)))
        });
    }
    g.finish();
}

fn norms(c: &mut Criterion) {
    let f = parse_poly("t1^2 - 3*t1*t2 + t2^2 - t1 + 2", 2).unwrap();
    let mut g = c.benchmark_group("root_of_unity_norm [5, 7]");
    for (label, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(label), |b| {
            b.iter(|| pool.install(|| root_of_unity_norm(&f, &[5, 7]).unwrap()))
        });
    }
    g.finish();
}

fn covers(c: &mut Criterion) {
    let t3 = corpus::by_name("t3").unwrap().presentation;
    let cm = mod_p_cover(&t3, 5).unwrap();
    let mut g = c.benchmark_group("t3 mod-5 cover");
    g.sample_size(10);
    for (label, pool) in pools() {
        g.bench_function(BenchmarkId::new("reidemeister_schreier", label), |b| {
            b.iter(|| pool.install(|| reidemeister_schreier(&cm)))
        });
        g.bench_function(BenchmarkId::new("hironaka", label), |b| {
            b.iter(|| pool.install(|| hironaka_predicted_betti(&t3, &cm).unwrap()))
        });
    }
    let cp = reidemeister_schreier(&cm);
    g.bench_function("cover_homology", |b| b.iter(|| cover_homology(&cp)));
    g.finish();
}

criterion_group!(benches, minors, norms, covers);
criterion_main!(benches);
