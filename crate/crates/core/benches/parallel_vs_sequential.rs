use condorcet_core::builder::subsets_of_size_at_least_3;
use condorcet_core::enumerate::{
    enumerate_maximal, random_peak_pit_domain, verify_theorem_3, EnumerateOptions, VerifyOptions,
};
use condorcet_core::{build_geodesic, par, Exec};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census_n4");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_maximal(4, &EnumerateOptions { fold_iso: true, exec, ..Default::default() }).unwrap())
        });
    }
    g.finish();
}

fn theorem_3(c: &mut Criterion) {
    let mut g = c.benchmark_group("theorem3_n5_sampled");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = VerifyOptions { exec, samples: 64, ..Default::default() };
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| verify_theorem_3(5, &opts).unwrap()));
    }
    g.finish();
}

fn builder_batch(c: &mut Criterion) {
    let domains: Vec<_> = (0..256u64).map(|s| random_peak_pit_domain(5, s, 12).unwrap()).collect();
    let mut g = c.benchmark_group("builder_256_domains");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                par::map(exec, &domains, |d| {
                    let (r, t) = (d.orders()[0], d.orders()[d.len() - 1]);
                    subsets_of_size_at_least_3(d.universe())
                        .into_iter()
                        .map(|s| build_geodesic(d, &r, &t, s).unwrap().len())
                        .sum::<usize>()
                })
            })
        });
    }
    g.finish();
    black_box(domains);
}

criterion_group!(benches, census, theorem_3, builder_batch);
criterion_main!(benches);
