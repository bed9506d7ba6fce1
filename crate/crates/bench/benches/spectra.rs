use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use equiangular::arith::BigRational;
use equiangular::constructions::union_cert;
use equiangular::graph::{kneser, petersen};
use equiangular::search::enumerate_switching_classes;
use equiangular::seidel::{seidel_min_eigenvalue, spectral_radius};
use equiangular::{certify, seidel, shearer_graph, AlgebraicNumber};
use std::hint::black_box;

fn charpoly(c: &mut Criterion) {
    let g = kneser(8, 2).unwrap();
    let s = seidel(&g);
    c.bench_function("charpoly/kneser(8,2)", |b| b.iter(|| black_box(s.as_matrix().charpoly())));
    c.bench_function("certify/kneser(8,2)", |b| {
        b.iter(|| certify(black_box(&g), &AlgebraicNumber::from_integer(3)).unwrap())
    });
    let l = equiangular::graph::complement(&equiangular::graph::line_graph(&petersen()).unwrap());
    c.bench_function("min_eigenvalue/lgc(petersen)", |b| b.iter(|| seidel_min_eigenvalue(black_box(&l))));
}

fn switching(c: &mut Criterion) {
    let mut group = c.benchmark_group("switching_classes");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_switching_classes(n).unwrap())
        });
    }
    group.finish();
}

fn shearer(c: &mut Criterion) {
    let mut group = c.benchmark_group("shearer");
    group.sample_size(10);
    let eps = BigRational::new(1.into(), 10_000.into());
    for (p, q) in [(21, 10), (5, 2)] {
        let lambda = AlgebraicNumber::from_ratio(p, q);
        group.bench_function(format!("{p}/{q}"), |b| b.iter(|| shearer_graph(&lambda, &eps).unwrap()));
    }
    group.finish();
    let g = shearer_graph(&AlgebraicNumber::from_ratio(21, 10), &eps).unwrap();
    c.bench_function("spectral_radius/caterpillar", |b| b.iter(|| spectral_radius(black_box(&g))));
    c.bench_function("union_cert/caterpillar x16", |b| b.iter(|| union_cert(black_box(&g), 16).unwrap()));
}

criterion_group!(benches, charpoly, switching, shearer);
criterion_main!(benches);
