//! Each pipeline on a one-thread rayon pool against the default pool.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semigap::affine::{relative_gaps, AffineSemigroup};
use semigap::diophantine::hilbert_basis;
use semigap::groebner::ideal_complement_groebner;
use semigap::ideal::{apery_extreme_rays, complement_by_box, complement_by_preimage, SemigroupIdeal};
use semigap::{IntMatrix, IntVector, TermOrder};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("1-thread", one), ("default", all)]
}

fn semigroup(gens: &[&[i64]]) -> AffineSemigroup {
    AffineSemigroup::from_i64s(gens).unwrap()
}

fn ideal() -> SemigroupIdeal {
    let s = semigroup(&[&[2, 0], &[3, 0], &[0, 2], &[0, 3], &[1, 1], &[2, 1]]);
    let base = [[4, 1], [1, 4], [3, 3]].iter().map(|v| IntVector::from_i64s(v)).collect();
    SemigroupIdeal::new(s, base).unwrap()
}

fn bench(c: &mut Criterion) {
    let pools = pools();
    let pair = (
        semigroup(&[&[1, 1], &[1, 2], &[2, 1], &[3, 1]]),
        semigroup(&[&[1, 2], &[2, 1], &[2, 2], &[3, 1], &[3, 5]]),
    );
    let ideal = ideal();
    let order = TermOrder::grevlex(ideal.ambient().len());
    let apery_s = semigroup(&[&[1, 0, 6], &[0, 5, 0], &[3, 3, 5], &[5, 3, 3]]);
    let kernel = IntMatrix::from_rows(&[
        vec![2, 1, 2, 4, -2, -1, -2, -4],
        vec![0, 5, 3, 6, 0, -5, -3, -6],
        vec![6, 5, 2, 3, -6, -5, -2, -3],
    ])
    .unwrap();

    let mut group = c.benchmark_group("pipelines");
    group.sample_size(20);
    for (name, pool) in &pools {
        group.bench_with_input(BenchmarkId::new("relative_gaps", name), pool, |b, pool| {
            b.iter(|| pool.install(|| relative_gaps(black_box(&pair.0), black_box(&pair.1)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("complement_by_box", name), pool, |b, pool| {
            b.iter(|| pool.install(|| complement_by_box(black_box(&ideal)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("complement_by_preimage", name), pool, |b, pool| {
            b.iter(|| pool.install(|| complement_by_preimage(black_box(&ideal)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("complement_groebner", name), pool, |b, pool| {
            b.iter(|| pool.install(|| ideal_complement_groebner(black_box(&ideal), &order).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("apery_extreme_rays", name), pool, |b, pool| {
            b.iter(|| pool.install(|| apery_extreme_rays(black_box(&apery_s)).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("hilbert_basis", name), pool, |b, pool| {
            b.iter(|| pool.install(|| hilbert_basis(black_box(&kernel)).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
