use std::hint::black_box;

use contractkit::enumerate::connected_graphs;
use contractkit::lpc::{longest_path_contractibility_with, LpcOptions};
use contractkit::oracle::{oracle_longest_path_contraction_with, OracleConfig};
use contractkit::par::{self, Mode};
use contractkit::suitability::GraphClass;
use contractkit::Graph;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

/// Connected graphs on 7 vertices, one per isomorphism class.
fn corpus() -> Vec<Graph> {
    connected_graphs(7)
}

fn oracle_sweep(c: &mut Criterion) {
    let graphs = corpus();
    let mut group = c.benchmark_group("oracle_sweep_n7");
    group.sample_size(10);
    for mode in [Mode::Sequential, Mode::Parallel] {
        let cfg = OracleConfig { mode: Mode::Sequential, ..OracleConfig::default() };
        group.bench_with_input(BenchmarkId::from_parameter(format!("{mode:?}")), &graphs, |b, gs| {
            b.iter(|| {
                let ks = par::map(mode, gs, |g| oracle_longest_path_contraction_with(g, &cfg).unwrap().0);
                black_box(ks)
            })
        });
    }
    group.finish();
}

fn lpc_sweep(c: &mut Criterion) {
    let class = GraphClass::P1P5;
    let graphs: Vec<Graph> = corpus().into_iter().filter(|g| class.contains(g).unwrap()).collect();
    let mut group = c.benchmark_group("lpc_pairs_p1p5_n7");
    group.sample_size(10);
    for mode in [Mode::Sequential, Mode::Parallel] {
        let opts = LpcOptions { mode, check_class: false };
        group.bench_with_input(BenchmarkId::from_parameter(format!("{mode:?}")), &graphs, |b, gs| {
            b.iter(|| {
                let ks: Vec<usize> = gs.iter().map(|g| longest_path_contractibility_with(g, class, opts).unwrap().0).collect();
                black_box(ks)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, oracle_sweep, lpc_sweep);
criterion_main!(benches);
