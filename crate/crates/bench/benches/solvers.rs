use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use extraconn::connectivity::{extra_connectivity_budgeted, vertex_connectivity, Method};
use extraconn::generate::{connected_graphs, FamilySpec};
use extraconn::graph::Graph;
use extraconn::graph6;
use extraconn::mycielskian::{iterate, mycielskian};

fn family(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().build().unwrap()
}

fn bench_extra_connectivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("extra_connectivity");
    let cases = [
        ("cycle:10 g=1", family("cycle:10"), 1usize),
        ("hypercube:3 g=1", family("hypercube:3"), 1),
        ("petersen g=2", family("petersen"), 2),
    ];
    for (name, graph, g) in &cases {
        for method in [Method::Naive, Method::Pruned] {
            group.bench_with_input(
                BenchmarkId::new(method.name(), name),
                &(graph, *g),
                |b, (graph, g)| {
                    b.iter(|| {
                        extra_connectivity_budgeted(black_box(graph), *g, method, 20).unwrap()
                    })
                },
            );
        }
    }
    // the doubled search space on a transformed cycle
    let (mu_c6, _) = mycielskian(&family("cycle:6"));
    group.bench_function("pruned/mu(cycle:6) g=3", |b| {
        b.iter(|| extra_connectivity_budgeted(black_box(&mu_c6), 3, Method::Pruned, 20).unwrap())
    });
    group.finish();
}

fn bench_vertex_connectivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("vertex_connectivity");
    let (mu_c8, _) = mycielskian(&family("cycle:8"));
    let cases = [
        ("petersen", family("petersen")),
        ("hypercube:4", family("hypercube:4")),
        ("mu(cycle:8)", mu_c8),
    ];
    for (name, graph) in &cases {
        group.bench_function(*name, |b| {
            b.iter(|| vertex_connectivity(black_box(graph)).unwrap())
        });
    }
    group.finish();
}

fn bench_mycielskian(c: &mut Criterion) {
    let k2 = family("complete:2");
    c.bench_function("mycielskian/iterate k=8 from K2", |b| {
        b.iter(|| iterate(black_box(&k2), 8).unwrap())
    });
}

fn bench_graph6(c: &mut Criterion) {
    let corpus: Vec<Graph> = connected_graphs(5).unwrap().collect();
    let lines: Vec<String> = corpus.iter().map(graph6::encode).collect();
    c.bench_function("graph6/encode 728 graphs", |b| {
        b.iter(|| {
            for g in &corpus {
                black_box(graph6::encode(g));
            }
        })
    });
    c.bench_function("graph6/decode 728 graphs", |b| {
        b.iter(|| {
            for line in &lines {
                black_box(graph6::decode(line).unwrap());
            }
        })
    });
}

criterion_group!(
    benches,
    bench_extra_connectivity,
    bench_vertex_connectivity,
    bench_mycielskian,
    bench_graph6
);
criterion_main!(benches);
