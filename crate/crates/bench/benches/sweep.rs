use criterion::{criterion_group, criterion_main, Criterion};
use ffhyper::{registry_ids, run_suite, CycNum, Mode, SweepOptions};
use ffhyper_bench::field;

fn registry_sweep(c: &mut Criterion) {
    let ids: Vec<String> = registry_ids().into_iter().map(String::from).collect();
    let mut g = c.benchmark_group("registry");
    g.sample_size(10);
    let exhaustive = SweepOptions {
        mode: Mode::Exhaustive,
        max_arity: 2,
        ..Default::default()
    };
    let fields = [field(3), field(4), field(5)];
    g.bench_function("exhaustive q<=5", |b| {
        b.iter(|| run_suite::<CycNum>(&fields, &ids, &exhaustive).unwrap())
    });
    let sampled = SweepOptions {
        mode: Mode::Sample,
        samples: 20,
        ..Default::default()
    };
    let fields = [field(7)];
    g.bench_function("sampled q=7", |b| b.iter(|| run_suite::<CycNum>(&fields, &ids, &sampled).unwrap()));
    g.finish();
}

criterion_group!(benches, registry_sweep);
criterion_main!(benches);
