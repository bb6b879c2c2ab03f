use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use flagweights::exact::Mat;
use flagweights::matroid::leading_minors;
use flagweights::normality::{holes_up_to_with, GradedGenerators};
use flagweights::par::Execution;
use flagweights::roots::DominantWeight;
use flagweights::suites::{run_suite, Suite};
use flagweights::weights::{hull_slice, weight_set};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn vandermonde(n: i64) -> Mat {
    Mat::from_int_rows(&(1..=n).map(|x| (0..n as u32).map(|e| x.pow(e)).collect()).collect::<Vec<_>>())
}

fn minors(c: &mut Criterion) {
    let g = vandermonde(7);
    let mut group = c.benchmark_group("leading_minors_7x7_k3");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| leading_minors(black_box(&g), 3, exec)));
    }
    group.finish();
}

fn slice(c: &mut Criterion) {
    let g = vandermonde(4);
    let l = DominantWeight::new(vec![3, 2, 1, 0]).unwrap();
    let ws = weight_set(&g, &l).unwrap();
    let mut group = c.benchmark_group("hull_slice_vand4_321");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| hull_slice(black_box(&ws), &l, exec).unwrap()));
    }
    group.finish();
}

fn holes(c: &mut Criterion) {
    let g = vandermonde(4);
    let ws = weight_set(&g, &DominantWeight::new(vec![2, 1, 0, 0]).unwrap()).unwrap();
    let gg = GradedGenerators::new(ws.points).unwrap();
    let mut group = c.benchmark_group("holes_vand4_21_d3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| holes_up_to_with(black_box(&gg), 3, exec).unwrap()));
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for suite in [Suite::Ggms, Suite::Witness] {
        let spec = suite.default_spec(7, 16);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(suite.to_string(), name), &spec, |b, spec| {
                b.iter(|| run_suite(suite, spec, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, minors, slice, holes, suites);
criterion_main!(benches);
