//! Workloads for comparing the all-subgraphs, NBC and deletion-contraction
//! routes to the chromatic polynomial.

use chromabij::chromatic::{chi_poly_all_subgraphs, chi_poly_delcon, chi_poly_nbc};
use chromabij::verify::random_graph;
use chromabij::{named_graph, x_all_subgraphs, x_nbc, Budget, Graph, NamedGraph};
use criterion::{BenchmarkId, Criterion};
use std::hint::black_box;

/// Named inputs, from a small fixture up to a 20-edge random graph.
pub fn workloads() -> Vec<(String, Graph)> {
    vec![
        ("fig1".into(), named_graph(NamedGraph::Fig1)),
        ("butterfly".into(), named_graph(NamedGraph::Butterfly)),
        ("cycle10".into(), Graph::cycle(10).expect("n >= 3")),
        ("k6".into(), Graph::complete(6)),
        ("random_10_16".into(), random_graph(10, 16, 1).expect("fits")),
        ("random_10_20".into(), random_graph(10, 20, 11).expect("fits")),
    ]
}

pub fn benchmarks(c: &mut Criterion) {
    let budget = Budget::unlimited();
    let mut chi = c.benchmark_group("chi");
    chi.sample_size(10);
    for (name, g) in workloads() {
        chi.bench_with_input(BenchmarkId::new("subgraphs", &name), &g, |b, g| {
            b.iter(|| chi_poly_all_subgraphs(black_box(g), &budget).unwrap())
        });
        chi.bench_with_input(BenchmarkId::new("nbc", &name), &g, |b, g| {
            b.iter(|| chi_poly_nbc(black_box(g), &budget).unwrap())
        });
        chi.bench_with_input(BenchmarkId::new("delcon", &name), &g, |b, g| {
            b.iter(|| chi_poly_delcon(black_box(g), &budget).unwrap())
        });
    }
    chi.finish();

    let mut csf = c.benchmark_group("csf");
    csf.sample_size(10);
    for (name, g) in workloads().into_iter().filter(|(_, g)| g.edge_count() <= 16) {
        csf.bench_with_input(BenchmarkId::new("subgraphs", &name), &g, |b, g| {
            b.iter(|| x_all_subgraphs(black_box(g), &budget).unwrap())
        });
        csf.bench_with_input(BenchmarkId::new("nbc", &name), &g, |b, g| {
            b.iter(|| x_nbc(black_box(g), &budget).unwrap())
        });
    }
    csf.finish();
}
