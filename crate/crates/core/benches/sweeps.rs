use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use k3cr3::catalog::fixtures;
use k3cr3::exec::Exec;
use k3cr3::extensions::product_type_disagreements;
use k3cr3::orbits::{filter_basket_table, Hypothesis};
use k3cr3::rr::enumerate_baskets;
use k3cr3::AbelianGroup;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn baskets(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_baskets_h0_1");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| enumerate_baskets(black_box(1), 1, exec).unwrap()));
    }
    g.finish();
}

fn product_type(c: &mut Criterion) {
    let mut g = c.benchmark_group("product_type_sweep_256");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| product_type_disagreements(black_box(256), exec)));
    }
    g.finish();
}

fn orbit_filter(c: &mut Criterion) {
    let all = enumerate_baskets(1, 1, Exec::Parallel).unwrap();
    let h: AbelianGroup = fixtures::H_4222.parse().unwrap();
    let mut g = c.benchmark_group("filter_all_baskets_general");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| filter_basket_table(&h, black_box(&all), Hypothesis::General, exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, baskets, product_type, orbit_filter);
criterion_main!(benches);
