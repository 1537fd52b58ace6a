use criterion::{criterion_group, criterion_main, Criterion};
use hcstd::corpus::random_ideal;
use hcstd::par::{par_map, seq_map};
use hcstd::semistd::{hc_std, HcStdConfig};

fn batch(c: &mut Criterion) {
    let ideals: Vec<_> = (0..16).map(|i| random_ideal(2024, i).ideal).collect();
    let cfg = HcStdConfig::default();
    let run = |ideal: &_| hc_std(ideal, &cfg).map(|r| r.d0).ok();
    let mut group = c.benchmark_group("random_batch");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| seq_map(&ideals, run)));
    group.bench_function(if hcstd::par::is_parallel() { "rayon" } else { "rayon_disabled" }, |b| {
        b.iter(|| par_map(&ideals, run))
    });
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);
