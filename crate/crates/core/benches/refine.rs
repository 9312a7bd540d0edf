use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wlgenus::cfi::cfi_pair;
use wlgenus::corpus::named_graph;
use wlgenus::surface::{graph_euler_genus_with, GenusConfig};
use wlgenus::wl::{refine_jointly, wl_refine_with, WlConfig};
use wlgenus::ExecMode;

fn modes() -> [(&'static str, ExecMode); 2] {
    [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)]
}

fn refinement(c: &mut Criterion) {
    let mut group = c.benchmark_group("refine");
    group.sample_size(10);
    let pair = cfi_pair(&named_graph("K4").unwrap()).unwrap();
    let petersen = named_graph("petersen").unwrap();
    for (name, mode) in modes() {
        let cfg = WlConfig { mode, ..WlConfig::default() };
        group.bench_with_input(BenchmarkId::new("cfi-k4-2wl", name), &cfg, |b, cfg| {
            b.iter(|| refine_jointly(&[&pair.untwisted, &pair.twisted], 2, black_box(cfg)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("petersen-3wl", name), &cfg, |b, cfg| {
            b.iter(|| wl_refine_with(&petersen, 3, black_box(cfg)).unwrap())
        });
    }
    group.finish();
}

fn genus(c: &mut Criterion) {
    let mut group = c.benchmark_group("genus");
    group.sample_size(10);
    let g = named_graph("K3,4").unwrap();
    for (name, mode) in modes() {
        let cfg = GenusConfig { mode, ..GenusConfig::default() };
        group.bench_with_input(BenchmarkId::new("K3,4", name), &cfg, |b, cfg| {
            b.iter(|| graph_euler_genus_with(black_box(&g), cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, refinement, genus);
criterion_main!(benches);
