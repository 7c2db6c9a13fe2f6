use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use quadwaring::bounds::catalecticant_rank;
use quadwaring::certify::{numeric_terms_from, verify_numeric_with, DEFAULT_PRECISION};
use quadwaring::{generate, generate_symbolic, select_points, verify_exact, AnyDecomposition};

fn bench_generate(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    for &(n, s) in quadwaring_bench::GENERATE_CASES {
        g.bench_with_input(BenchmarkId::from_parameter(format!("n{n}s{s}")), &(n, s), |b, &(n, s)| {
            b.iter(|| generate(black_box(n), s, 0).unwrap())
        });
    }
    g.finish();
}

fn bench_symbolic(c: &mut Criterion) {
    let spec = select_points(4, 0).unwrap();
    c.bench_function("generate_symbolic/s4", |b| b.iter(|| generate_symbolic(4, black_box(&spec)).unwrap()));
}

fn bench_verify(c: &mut Criterion) {
    let d = generate(6, 3, 0).unwrap();
    c.bench_function("verify_exact/n6s3", |b| b.iter(|| verify_exact(black_box(&d))));
    let any: AnyDecomposition = d.into();
    let terms = numeric_terms_from(&any, DEFAULT_PRECISION);
    c.bench_function("verify_numeric/n6s3", |b| {
        b.iter(|| verify_numeric_with(black_box(&terms), 6, 3, 1e-25, DEFAULT_PRECISION).unwrap())
    });
}

fn bench_catalecticant(c: &mut Criterion) {
    c.bench_function("catalecticant_rank/n4s6", |b| b.iter(|| catalecticant_rank(black_box(4), 6).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_generate, bench_symbolic, bench_verify, bench_catalecticant
}
criterion_main!(benches);
