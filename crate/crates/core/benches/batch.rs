//! Compares the data-parallel batch map against the sequential fallback on a
//! verification-sized workload: Macdonald character limits over a ball.

use criterion::{criterion_group, criterion_main, Criterion};

use demazure_weights::batch::{ball, map_items, map_items_sequential};
use demazure_weights::macdonald::e_char_limit;
use demazure_weights::root_data::RootSystem;

fn batch_char_limits(c: &mut Criterion) {
    let rs = RootSystem::build("A2".parse().unwrap()).unwrap();
    let weights = ball(&rs, 6);
    let mut group = c.benchmark_group("macdonald_ball_a2_r6");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| map_items(&weights, |w| e_char_limit(&rs, w, 16).unwrap()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| map_items_sequential(&weights, |w| e_char_limit(&rs, w, 16).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, batch_char_limits);
criterion_main!(benches);
