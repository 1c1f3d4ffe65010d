use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use demkit::families::connected_unlabeled;
use demkit::monitoring::greedy_dem_with;
use demkit::theorems::{check_layer_locality, run_suite, Suite, VerifyConfig};
use demkit::{dem_number, DemOptions, Execution, Graph, GraphExpr, MonitorMatrix};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn build(text: &str) -> Graph {
    text.parse::<GraphExpr>().unwrap().build().unwrap()
}

fn monitor_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("monitor_matrix");
    for text in ["cartesian(cycle:6,cycle:8)", "cartesian(complete:5,path:10)", "hypercube:6"] {
        let g = build(text);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, text), &g, |b, g| {
                b.iter(|| MonitorMatrix::build(black_box(g), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("greedy_dem");
    let g = build("cartesian(book:4,cycle:8)");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| greedy_dem_with(black_box(&g), exec)));
    }
    group.finish();
}

fn exact_dem(c: &mut Criterion) {
    let mut group = c.benchmark_group("dem_number");
    group.sample_size(20);
    let g = build("cartesian(cycle:4,cycle:5)");
    for (name, execution) in MODES {
        let opts = DemOptions {
            execution,
            ..DemOptions::default()
        };
        group.bench_function(name, |b| b.iter(|| dem_number(black_box(&g), &opts).unwrap()));
    }
    group.finish();
}

fn layer_locality(c: &mut Criterion) {
    let mut group = c.benchmark_group("layer_locality");
    group.sample_size(10);
    let graphs: Vec<Graph> = (1..=4).flat_map(connected_unlabeled).collect();
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                graphs
                    .iter()
                    .flat_map(|g| graphs.iter().map(move |h| (g, h)))
                    .map(|(g, h)| check_layer_locality(g, h, exec).unwrap().counterexamples())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_suite");
    group.sample_size(10);
    for (name, execution) in MODES {
        let cfg = VerifyConfig {
            dem: DemOptions {
                execution,
                ..DemOptions::default().with_max_n(16)
            },
            seed: 1,
        };
        group.bench_function(name, |b| b.iter(|| run_suite(Suite::All, &cfg).unwrap().len()));
    }
    group.finish();
}

criterion_group!(benches, monitor_matrix, greedy, exact_dem, layer_locality, suites);
criterion_main!(benches);
