use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use vat_bench::{cycle_blowup, family, petersen, reversed};
use vat_core::enumeration::{enumerate_graphs, extend_level};
use vat_core::framework::Partition;
use vat_core::graph::{canonicalize, contains_subgraph};
use vat_core::rainbow::{admits_coloring_without_rainbow, random_proper_coloring};
use vat_core::{Family, Limits};

fn canonical_forms(c: &mut Criterion) {
    let p = reversed(&petersen());
    let k44 = reversed(&family(Family::CompleteBipartite, &[4, 4]));
    c.bench_function("canonicalize petersen", |b| b.iter(|| canonicalize(black_box(&p))));
    c.bench_function("canonicalize K_4,4", |b| b.iter(|| canonicalize(black_box(&k44))));
}

fn enumeration(c: &mut Criterion) {
    let order6 = enumerate_graphs(6, &Limits::default()).expect("within cap");
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("order 7 from order 6", |b| b.iter(|| extend_level(black_box(&order6))));
    group.finish();
}

fn containment(c: &mut Criterion) {
    let host = cycle_blowup(3, 30);
    let c5_blowup = cycle_blowup(5, 10);
    let c7 = family(Family::Cycle, &[7]);
    c.bench_function("C_5<10> in C_3<30>", |b| b.iter(|| contains_subgraph(black_box(&host), black_box(&c5_blowup))));
    c.bench_function("C_7 in petersen (absent)", |b| b.iter(|| contains_subgraph(black_box(&petersen()), black_box(&c7))));
}

fn rainbow(c: &mut Criterion) {
    let limits = Limits::default();
    let c4 = family(Family::Cycle, &[4]);
    let k24 = family(Family::CompleteBipartite, &[2, 4]);
    let k5 = family(Family::Complete, &[5]);
    c.bench_function("rainbow C_4 membership of K_2,4", |b| {
        b.iter(|| admits_coloring_without_rainbow(black_box(&k24), &c4, &limits))
    });
    c.bench_function("rainbow C_4 membership of K_5", |b| {
        b.iter(|| admits_coloring_without_rainbow(black_box(&k5), &c4, &limits))
    });
    c.bench_function("random colouring of C_3<81>", |b| {
        let host = cycle_blowup(3, 81);
        b.iter(|| random_proper_coloring(black_box(&host), 1))
    });
    c.bench_function("memoised membership, order 6", |b| {
        let graphs = enumerate_graphs(6, &limits).expect("within cap");
        b.iter(|| {
            let p = Partition::rainbow(c4.clone());
            graphs.iter().filter(|g| p.allowed(g) == vat_core::framework::Membership::Allowed).count()
        })
    });
}

criterion_group!(benches, canonical_forms, enumeration, containment, rainbow);
criterion_main!(benches);
