use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lmc_bench::{complex_projective, dense_matrix, rp_difference_class, unit};
use lmc_core::criteria::{determinant, search};
use lmc_core::fpring::Prime;
use lmc_core::symfun::{dual_cauchy_check, euler_crosscheck};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for n in [4usize, 8, 12] {
        let m = dense_matrix(n, 5, 6);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| determinant(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn inverses(c: &mut Criterion) {
    let mut group = c.benchmark_group("series_inverse");
    for t in [64u32, 256, 1024] {
        let u = unit(7, t);
        group.bench_with_input(BenchmarkId::from_parameter(t), &u, |b, u| {
            b.iter(|| black_box(u).inverse().unwrap())
        });
    }
    group.finish();
}

fn criterion_search(c: &mut Criterion) {
    let cls = rp_difference_class(253, 254, 4);
    c.bench_function("search rp:253 -> euclidean:254 k=4", |b| {
        b.iter(|| search(black_box(&cls), Vec::new()).unwrap())
    });
}

fn symmetric_identities(c: &mut Criterion) {
    let p = Prime::new(3).unwrap();
    c.bench_function("dual_cauchy 4x3", |b| {
        b.iter(|| dual_cauchy_check(black_box(4), black_box(3), p).unwrap())
    });
    let cp = complex_projective(8, 5);
    c.bench_function("euler_crosscheck cp:8 n=9 k=5", |b| {
        b.iter(|| euler_crosscheck(black_box(&cp), 9, 5, 8).unwrap())
    });
}

criterion_group!(
    benches,
    determinants,
    inverses,
    criterion_search,
    symmetric_identities
);
criterion_main!(benches);
