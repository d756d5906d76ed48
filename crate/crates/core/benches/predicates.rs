use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use vsb::generator::{generate_instance, InstanceSpec};
use vsb::harness::{run_experiment, ExperimentPlan};
use vsb::{is_k_vsb_with, minimal_k_vsb, two_phase_3vsb, EdgeOrder, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn kvsb_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_k_vsb/k=3");
    for n in [20usize, 40, 60] {
        let g = generate_instance(InstanceSpec::new(n, 1)).unwrap().graph;
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| is_k_vsb_with(black_box(g), 3, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn extraction(c: &mut Criterion) {
    let mut group = c.benchmark_group("extraction");
    group.sample_size(10);
    for n in [10usize, 20] {
        let g = generate_instance(InstanceSpec::new(n, 1)).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("minimal", n), &g, |b, g| {
            b.iter(|| minimal_k_vsb(g, 3, EdgeOrder::Input).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("two-phase", n), &g, |b, g| {
            b.iter(|| two_phase_3vsb(g, EdgeOrder::Input).unwrap())
        });
    }
    group.finish();
}

fn experiment_rows(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_experiment/n=12x8");
    group.sample_size(10);
    for (name, exec) in MODES {
        let mut plan = ExperimentPlan::new(vec![12], 8);
        plan.execution = exec;
        group.bench_function(name, |b| b.iter(|| run_experiment(&plan).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, kvsb_sweep, extraction, experiment_rows);
criterion_main!(benches);
