//! Decoder throughput: variants and schedules on the 672-bit rate-1/2 code.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use ldpc_bench::{noisy_frames, wifi_matrix};
use ldpc_core::decode::{Decoder, DecoderConfig, Schedule, Variant};
use ldpc_core::pcm::TannerGraph;
use std::hint::black_box;

fn bench_variants(c: &mut Criterion) {
    let h = wifi_matrix();
    let graph = TannerGraph::new(&h);
    let frames = noisy_frames(2.5, 64, 1);

    let mut group = c.benchmark_group("variant_flooding_672");
    for (name, variant) in [
        ("spa", Variant::Spa),
        ("min_sum", Variant::MinSum),
        (
            "normalized_min_sum",
            Variant::NormalizedMinSum { alpha: 1.25 },
        ),
        ("offset_min_sum", Variant::OffsetMinSum { beta: 0.15 }),
        ("urw", Variant::Urw { rho: 0.8 }),
    ] {
        let cfg = DecoderConfig {
            variant,
            schedule: Schedule::Flooding,
            max_iters: 20,
            stop_on_syndrome: true,
        };
        let mut decoder = Decoder::new(&graph, cfg).unwrap();
        let mut next = 0usize;
        group.bench_function(name, |b| {
            b.iter_batched(
                || {
                    let llr = frames[next % frames.len()].clone();
                    next += 1;
                    llr
                },
                |llr| black_box(decoder.decode(&llr).unwrap()),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_schedules(c: &mut Criterion) {
    let h = wifi_matrix();
    let graph = TannerGraph::new(&h);
    let frames = noisy_frames(2.5, 64, 2);

    let mut group = c.benchmark_group("schedule_spa_672");
    for (name, schedule) in [
        ("flooding", Schedule::Flooding),
        ("layered", Schedule::Layered),
        ("residual", Schedule::ResidualBp),
        ("node_wise", Schedule::NodeWise),
    ] {
        let cfg = DecoderConfig {
            variant: Variant::Spa,
            schedule,
            max_iters: 10,
            stop_on_syndrome: true,
        };
        let mut decoder = Decoder::new(&graph, cfg).unwrap();
        let mut next = 0usize;
        group.bench_function(name, |b| {
            b.iter_batched(
                || {
                    let llr = frames[next % frames.len()].clone();
                    next += 1;
                    llr
                },
                |llr| black_box(decoder.decode(&llr).unwrap()),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, bench_variants, bench_schedules);
criterion_main!(benches);
