use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rankzeta::fixtures::example;
use rankzeta::invariants::rank_distribution_oracle_with;
use rankzeta::par::ExecMode;
use rankzeta::random::{random_code, rng};
use rankzeta::rmcode::SupportProfile;
use rankzeta::Budget;
use std::hint::black_box;

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn profile_scan(c: &mut Criterion) {
    let budget = Budget::default();
    let codes = [
        ("c1", example(1)),
        ("q3_4x4_k8", random_code(3, 4, 4, 8, &mut rng(1)).unwrap()),
    ];
    let mut group = c.benchmark_group("profile_scan");
    for (name, code) in &codes {
        for (mode_name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(mode_name, name), code, |b, code| {
                b.iter(|| SupportProfile::compute_with(black_box(code), &budget, mode).unwrap())
            });
        }
    }
    group.finish();
}

fn subcode_scan(c: &mut Criterion) {
    let budget = Budget::default();
    let code = random_code(2, 4, 4, 8, &mut rng(2)).unwrap();
    let mut group = c.benchmark_group("subcode_scan_4x4_k8_i3");
    group.sample_size(10);
    for (mode_name, mode) in MODES {
        group.bench_function(mode_name, |b| {
            b.iter(|| rank_distribution_oracle_with(black_box(&code), 3, &budget, mode).unwrap())
        });
    }
    group.finish();
}

fn codeword_scan(c: &mut Criterion) {
    let code = random_code(2, 4, 5, 14, &mut rng(3)).unwrap();
    let mut group = c.benchmark_group("codeword_scan_4x5_k14");
    group.sample_size(10);
    for (mode_name, mode) in MODES {
        group.bench_function(mode_name, |b| b.iter(|| black_box(&code).rank_range(u64::MAX, mode).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, profile_scan, subcode_scan, codeword_scan);
criterion_main!(benches);
