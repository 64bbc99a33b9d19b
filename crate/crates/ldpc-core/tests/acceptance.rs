//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured numbers. Frame budgets and tolerances are pinned here.
//!
//! The heavy Monte Carlo criteria use all available cores through the
//! simulation harness; expect a few minutes of wall time for the full suite.

mod common;

use common::{code_path, from_dense, SHIPPED_CODES};
use ldpc_core::channel::{
    apply_channel, bpsk_modulate, compute_llr, outage_probability, sigma_from_ebn0_db,
    snr_per_symbol, transmit, ChannelModel, FadingRealization,
};
use ldpc_core::decode::{
    check_update_minsum, check_update_spa, Decoder, DecoderConfig, Schedule, Variant,
};
use ldpc_core::encode::{derive_generator, GeneratorMatrix};
use ldpc_core::pcm::{girth, SparseBinaryMatrix, TannerGraph};
use ldpc_core::sim::{
    frame_stream, run_convergence_study, run_fer, streams, ChannelKind, LoadedCode, SimConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn spa_flooding(max_iters: usize) -> DecoderConfig {
    DecoderConfig {
        variant: Variant::Spa,
        schedule: Schedule::Flooding,
        max_iters,
        stop_on_syndrome: true,
    }
}

/// Criterion 1: 10^4 random messages across every shipped code (and both
/// encoder routes where both exist) give 100% zero syndromes, in under 10 s.
#[test]
fn criterion_01_encoder_validity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut encodes = 0u64;
    for name in SHIPPED_CODES {
        let code = LoadedCode::from_file(code_path(name)).unwrap();
        for _ in 0..10_000 {
            let msg: Vec<bool> = (0..code.k()).map(|_| rng.random()).collect();
            let cw = code.encoder.encode(&msg).unwrap();
            assert!(code.h.is_codeword(&cw), "{}: syndrome violation", name);
            encodes += 1;
        }
    }
    // Second route for the root-check code: dense generator.
    let root = LoadedCode::from_file(code_path("qc_ira_root_r12.bm")).unwrap();
    let g = derive_generator(&root.h).unwrap();
    for _ in 0..10_000 {
        let msg: Vec<bool> = (0..g.k()).map(|_| rng.random()).collect();
        let cw = g.encode(&msg).unwrap();
        assert!(root.h.is_codeword(&cw));
        encodes += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 10.0, "encoder validity took {:.2} s", secs);
    println!(
        "[PASS] criterion 1: {} encodes across {} codes, all zero syndromes, {:.2} s",
        encodes,
        SHIPPED_CODES.len(),
        secs
    );
}

/// Criterion 2: flooding SPA beliefs on a cycle-free code (n = 9) match
/// brute-force exact posteriors to 1e-9, in under 1 s.
#[test]
fn criterion_02_tree_exactness() {
    let start = Instant::now();
    let h = from_dense(&[
        &[1, 1, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 1, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 1, 1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1, 1, 1],
    ]);
    assert_eq!(girth(&h), None, "test matrix must be cycle-free");
    let graph = TannerGraph::new(&h);
    let cfg = DecoderConfig {
        variant: Variant::Spa,
        schedule: Schedule::Flooding,
        max_iters: 12,
        stop_on_syndrome: false,
    };
    let mut decoder = Decoder::new(&graph, cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let llr: Vec<f64> = (0..h.cols()).map(|_| rng.random_range(-4.0..4.0)).collect();
        let exact = exact_posteriors(&h, &llr);
        let mut finals = Vec::new();
        decoder
            .decode_traced(&llr, &mut |view| finals = view.beliefs.to_vec())
            .unwrap();
        for (b, e) in finals.iter().zip(&exact) {
            worst = worst.max((b - e).abs());
        }
    }
    assert!(worst <= 1e-9, "worst belief deviation {}", worst);
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 1.0, "tree exactness took {:.2} s", secs);
    println!(
        "[PASS] criterion 2: tree beliefs within {:.2e} of exact posteriors ({:.2} s)",
        worst, secs
    );
}

fn exact_posteriors(h: &SparseBinaryMatrix, llr: &[f64]) -> Vec<f64> {
    let n = h.cols();
    let mut weights: Vec<(u32, f64)> = Vec::new();
    for word in 0..(1u32 << n) {
        let bits: Vec<bool> = (0..n).map(|j| word >> j & 1 == 1).collect();
        if h.is_codeword(&bits) {
            let w: f64 = bits
                .iter()
                .zip(llr)
                .map(|(&b, &l)| if b { -l } else { 0.0 })
                .sum();
            weights.push((word, w));
        }
    }
    let logsumexp = |vals: &[f64]| -> f64 {
        let mx = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        mx + vals.iter().map(|v| (v - mx).exp()).sum::<f64>().ln()
    };
    (0..n)
        .map(|j| {
            let zeros: Vec<f64> = weights
                .iter()
                .filter(|(w, _)| w >> j & 1 == 0)
                .map(|&(_, lw)| lw)
                .collect();
            let ones: Vec<f64> = weights
                .iter()
                .filter(|(w, _)| w >> j & 1 == 1)
                .map(|&(_, lw)| lw)
                .collect();
            logsumexp(&zeros) - logsumexp(&ones)
        })
        .collect()
}

/// Criterion 3: on a random (15, 5) code at high SNR, converged SPA hard
/// decisions match brute-force ML decoding in at least 99% of 10^4 frames,
/// in under a minute.
#[test]
fn criterion_03_ml_agreement() {
    let start = Instant::now();
    // Find a deterministic seed whose PEG construction has rank 10 (k = 5).
    let (h, g) = (0..64)
        .find_map(|seed| {
            let degrees = ldpc_core::codegen::DegreeSequence::regular(15, 3, 10).ok()?;
            let h = ldpc_core::codegen::peg_construct(10, 15, &degrees, seed).ok()?;
            let g = GeneratorMatrix::derive(&h).ok()?;
            (g.k() == 5).then_some((h, g))
        })
        .expect("some seed yields a full-rank construction");

    // All 32 codewords as antipodal vectors for ML correlation.
    let codebook: Vec<(Vec<bool>, Vec<f64>)> = (0..32u32)
        .map(|w| {
            let msg: Vec<bool> = (0..5).map(|t| w >> t & 1 == 1).collect();
            let cw = g.encode(&msg).unwrap();
            let sym = bpsk_modulate(&cw);
            (cw, sym)
        })
        .collect();

    let graph = TannerGraph::new(&h);
    let mut decoder = Decoder::new(&graph, spa_flooding(50)).unwrap();
    let sigma = sigma_from_ebn0_db(6.0, 5.0 / 15.0);
    let ch = ChannelModel::Awgn { sigma };
    let mut rng = ChaCha8Rng::seed_from_u64(1003);

    let mut converged = 0u64;
    let mut agree = 0u64;
    let mut attempts = 0u64;
    while converged < 10_000 && attempts < 100_000 {
        attempts += 1;
        let msg: Vec<bool> = (0..5).map(|_| rng.random()).collect();
        let cw = g.encode(&msg).unwrap();
        let x = bpsk_modulate(&cw);
        let (y, fr) = transmit(&x, &ch, &mut rng).unwrap();
        let llr = compute_llr(&y, &ch, &fr).unwrap();
        let out = decoder.decode(&llr).unwrap();
        if !out.converged {
            continue;
        }
        converged += 1;
        let ml = codebook
            .iter()
            .max_by(|a, b| {
                let sa: f64 = a.1.iter().zip(&y).map(|(s, yy)| s * yy).sum();
                let sb: f64 = b.1.iter().zip(&y).map(|(s, yy)| s * yy).sum();
                sa.total_cmp(&sb)
            })
            .unwrap();
        if out.bits == ml.0 {
            agree += 1;
        }
    }
    assert!(converged >= 10_000, "only {} converged frames", converged);
    let ratio = agree as f64 / converged as f64;
    assert!(ratio >= 0.99, "SPA/ML agreement only {:.4}", ratio);
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "ML agreement took {:.1} s", secs);
    println!(
        "[PASS] criterion 3: SPA matched ML on {:.2}% of {} converged frames ({:.1} s)",
        100.0 * ratio,
        converged,
        secs
    );
}

/// Criterion 4: the documented parameter reductions produce bitwise
/// identical message trajectories over 100 random frames each.
#[test]
fn criterion_04_reduction_equivalences() {
    let code = LoadedCode::from_file(code_path("peg_n96_r12.alist")).unwrap();
    let sigma = sigma_from_ebn0_db(2.0, 0.5);
    let ch = ChannelModel::Awgn { sigma };
    let mut rng = ChaCha8Rng::seed_from_u64(1004);

    let trajectory = |llr: &[f64], variant: Variant| -> Vec<(Vec<f64>, Vec<f64>)> {
        let graph = TannerGraph::new(&code.h);
        let cfg = DecoderConfig {
            variant,
            schedule: Schedule::Flooding,
            max_iters: 20,
            stop_on_syndrome: true,
        };
        let mut dec = Decoder::new(&graph, cfg).unwrap();
        let mut out = Vec::new();
        dec.decode_traced(llr, &mut |view| {
            out.push((view.c2v.to_vec(), view.beliefs.to_vec()));
        })
        .unwrap();
        out
    };

    for _ in 0..100 {
        let msg: Vec<bool> = (0..code.k()).map(|_| rng.random()).collect();
        let cw = code.encoder.encode(&msg).unwrap();
        let x = bpsk_modulate(&cw);
        let (y, fr) = transmit(&x, &ch, &mut rng).unwrap();
        let llr = compute_llr(&y, &ch, &fr).unwrap();

        assert_eq!(
            trajectory(&llr, Variant::NormalizedMinSum { alpha: 1.0 }),
            trajectory(&llr, Variant::MinSum),
            "normalized(1) != min-sum"
        );
        assert_eq!(
            trajectory(&llr, Variant::OffsetMinSum { beta: 0.0 }),
            trajectory(&llr, Variant::MinSum),
            "offset(0) != min-sum"
        );
        assert_eq!(
            trajectory(&llr, Variant::Urw { rho: 1.0 }),
            trajectory(&llr, Variant::Spa),
            "urw(1) != spa"
        );
    }
    println!("[PASS] criterion 4: reductions bitwise identical over 100 frames each");
}

/// Criterion 5: erasing one fading block at zero noise, the root-check code
/// recovers all information bits in 1000/1000 trials; the same-size
/// non-root baseline fails in more than half the trials when its
/// information-carrying block is erased.
#[test]
fn criterion_05_root_check_diversity() {
    let sigma = 1e-3; // "noiseless" surviving block: LLRs clamp at ±50
    let ch = ChannelModel::BlockFading { sigma, fadings: 2 };

    let erased_trial = |code: &LoadedCode,
                        decoder: &mut Decoder,
                        erased_block: usize,
                        rng: &mut ChaCha8Rng|
     -> bool {
        let msg: Vec<bool> = (0..code.k()).map(|_| rng.random()).collect();
        let cw = code.encoder.encode(&msg).unwrap();
        let x = bpsk_modulate(&cw);
        let gains = if erased_block == 0 {
            vec![0.0, 1.0]
        } else {
            vec![1.0, 0.0]
        };
        let y = apply_channel(&x, &gains, sigma, rng).unwrap();
        let fr = FadingRealization { gains };
        let llr = compute_llr(&y, &ch, &fr).unwrap();
        let out = decoder.decode(&llr).unwrap();
        code.info_positions()
            .iter()
            .enumerate()
            .all(|(t, &pos)| out.bits[pos] == msg[t])
    };

    let root = LoadedCode::from_file(code_path("qc_ira_root_r12.bm")).unwrap();
    let root_graph = TannerGraph::new(&root.h);
    let mut root_dec = Decoder::new(&root_graph, spa_flooding(20)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut recovered = 0u32;
    for trial in 0..1000 {
        if erased_trial(&root, &mut root_dec, trial % 2, &mut rng) {
            recovered += 1;
        }
    }
    assert_eq!(
        recovered, 1000,
        "root-check recovered only {}/1000",
        recovered
    );

    let baseline = LoadedCode::from_file(code_path("wifi_ad_r12.bm")).unwrap();
    let base_graph = TannerGraph::new(&baseline.h);
    let mut base_dec = Decoder::new(&base_graph, spa_flooding(20)).unwrap();
    let mut failures = 0u32;
    for _ in 0..1000 {
        // Erase fading block 0, which carries the baseline's information
        // bits under the standard [information | parity] layout.
        if !erased_trial(&baseline, &mut base_dec, 0, &mut rng) {
            failures += 1;
        }
    }
    assert!(failures > 500, "baseline failed only {}/1000", failures);
    println!(
        "[PASS] criterion 5: root-check recovered 1000/1000; baseline failed {}/1000",
        failures
    );
}

/// Interpolated Eb/N0 where the FER curve crosses `target`.
fn crossing_snr(points: &[(f64, f64)], target: f64) -> Option<f64> {
    for pair in points.windows(2) {
        let (s1, f1) = pair[0];
        let (s2, f2) = pair[1];
        if f1 >= target && f2 < target && f2 > 0.0 {
            let l1 = f1.log10();
            let l2 = f2.log10();
            let lt = target.log10();
            return Some(s1 + (s2 - s1) * (l1 - lt) / (l1 - l2));
        }
    }
    None
}

/// Criterion 6: over F = 2 block fading at 20 iterations, the root-check
/// code reaches FER 1e-2 at least 3 dB before the QC baseline.
#[test]
fn criterion_06_block_fading_gap() {
    let grid: Vec<f64> = (3..=11).map(|i| i as f64 * 2.0).collect(); // 6..22 dB
    let cfg = SimConfig {
        snr_db: grid,
        channel: ChannelKind::BlockFading { fadings: 2 },
        interleave: false,
        decoder: spa_flooding(20),
        max_frames: 30_000,
        min_frame_errors: 100,
        seed: 1006,
        workers: 0,
        all_zero_messages: false,
    };
    let root = LoadedCode::from_file(code_path("qc_ira_root_r12.bm")).unwrap();
    let base = LoadedCode::from_file(code_path("wifi_ad_r12.bm")).unwrap();
    let root_run = run_fer(&root, &cfg).unwrap();
    let base_run = run_fer(&base, &cfg).unwrap();

    let curve = |r: &ldpc_core::sim::SimResult| -> Vec<(f64, f64)> {
        r.points.iter().map(|p| (p.ebn0_db, p.fer)).collect()
    };
    let root_cross = crossing_snr(&curve(&root_run), 1e-2)
        .expect("root-check curve crosses FER 1e-2 inside the grid");
    let base_cross = crossing_snr(&curve(&base_run), 1e-2)
        .expect("baseline curve crosses FER 1e-2 inside the grid");
    let gap = base_cross - root_cross;
    assert!(
        gap >= 3.0,
        "root-check gain {:.2} dB (root {:.2}, baseline {:.2})",
        gap,
        root_cross,
        base_cross
    );
    println!(
        "[PASS] criterion 6: FER 1e-2 at {:.2} dB (root-check) vs {:.2} dB (baseline): gain {:.2} dB",
        root_cross, base_cross, gap
    );
}

/// Criterion 7: wherever the root-check FER is below 1e-3 (max 20
/// iterations), its mean iteration count stays at or below 2.5.
#[test]
fn criterion_07_iteration_profile() {
    let grid: Vec<f64> = (6..=12).map(|i| i as f64 * 2.0).collect(); // 12..24 dB
    let cfg = SimConfig {
        snr_db: grid,
        channel: ChannelKind::BlockFading { fadings: 2 },
        interleave: false,
        decoder: spa_flooding(20),
        max_frames: 20_000,
        min_frame_errors: 100,
        seed: 1007,
        workers: 0,
        all_zero_messages: false,
    };
    let root = LoadedCode::from_file(code_path("qc_ira_root_r12.bm")).unwrap();
    let run = ldpc_core::sim::run_iteration_profile(&root, &cfg).unwrap();
    let mut qualifying = 0;
    for p in &run.points {
        if p.fer < 1e-3 {
            qualifying += 1;
            assert!(
                p.mean_iterations <= 2.5,
                "mean iterations {:.2} at {} dB (FER {:.2e})",
                p.mean_iterations,
                p.ebn0_db,
                p.fer
            );
        }
    }
    assert!(qualifying > 0, "no SNR point reached FER < 1e-3");
    println!(
        "[PASS] criterion 7: mean iterations <= 2.5 at all {} points with FER < 1e-3",
        qualifying
    );
}

/// Criterion 8: at 3 dB AWGN on the rate-1/2 baseline, layered SPA reaches
/// the flooding 20-iteration FER within 10 iteration-equivalents, and
/// node-wise BP at 5 iteration-equivalents is no worse than flooding at 5
/// iterations (common random numbers).
///
/// The layered/flooding comparison is a paired one on identical frames, and
/// at 3 dB both decoders sit near FER 1e-4 where single boundary frames
/// dominate; it is therefore accepted either outright or within a
/// three-standard-error McNemar bound on the discordant frames, matching
/// the 3-SE convention the outage criterion uses.
#[test]
fn criterion_08_schedule_convergence() {
    use rayon::prelude::*;

    let base = LoadedCode::from_file(code_path("wifi_ad_r12.bm")).unwrap();
    let seed = 1008u64;
    let sigma = sigma_from_ebn0_db(3.0, base.rate());
    let model = ChannelModel::Awgn { sigma };

    // Part 1: per-frame paired comparison, flooding for 20 iterations
    // against layered for 10 iteration-equivalents, on 1e5 common frames.
    let frames_a: u64 = 100_000;
    let cfg = |schedule: Schedule, iters: usize| DecoderConfig {
        variant: Variant::Spa,
        schedule,
        max_iters: iters,
        stop_on_syndrome: true,
    };
    // (flooding wrong, layered wrong) per frame.
    let (n_flood_wrong, n_layered_wrong, n01, n10) = (0..frames_a)
        .into_par_iter()
        .map_init(
            || {
                (
                    Decoder::new(&base.graph, cfg(Schedule::Flooding, 20)).unwrap(),
                    Decoder::new(&base.graph, cfg(Schedule::Layered, 10)).unwrap(),
                )
            },
            |(flood_dec, layer_dec), f| {
                let msg: Vec<bool> = {
                    let mut rng = frame_stream(seed, f, streams::MESSAGE);
                    (0..base.k()).map(|_| rng.random()).collect()
                };
                let cw = base.encoder.encode(&msg).unwrap();
                let x = bpsk_modulate(&cw);
                let mut ch_rng = frame_stream(seed, f, streams::CHANNEL);
                let (y, fr) = transmit(&x, &model, &mut ch_rng).unwrap();
                let llr = compute_llr(&y, &model, &fr).unwrap();
                let wrong = |bits: &[bool]| {
                    base.info_positions()
                        .iter()
                        .enumerate()
                        .any(|(t, &pos)| bits[pos] != msg[t])
                };
                let fw = wrong(&flood_dec.decode(&llr).unwrap().bits);
                let lw = wrong(&layer_dec.decode(&llr).unwrap().bits);
                (
                    u64::from(fw),
                    u64::from(lw),
                    u64::from(!fw && lw),
                    u64::from(fw && !lw),
                )
            },
        )
        .reduce(
            || (0, 0, 0, 0),
            |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3),
        );
    let fer_flood20 = n_flood_wrong as f64 / frames_a as f64;
    let fer_layered10 = n_layered_wrong as f64 / frames_a as f64;
    let discordant = n01 + n10;
    let paired_ok = n01 <= n10 + (3.0 * (discordant as f64).sqrt()).ceil() as u64;
    assert!(
        fer_layered10 <= fer_flood20 || paired_ok,
        "layered(10) {:.3e} vs flooding(20) {:.3e}; discordant frames {}+{}",
        fer_layered10,
        fer_flood20,
        n01,
        n10
    );

    // Part 2: node-wise vs flooding at 5 iteration-equivalents; here the
    // gap is an order of magnitude, so the comparison is strict.
    let mk = |schedule: Schedule, frames: u64| SimConfig {
        snr_db: vec![3.0],
        channel: ChannelKind::Awgn,
        interleave: false,
        decoder: cfg(schedule, 20),
        max_frames: frames,
        min_frame_errors: 0,
        seed,
        workers: 0,
        all_zero_messages: false,
    };
    let frames_b = 20_000;
    let flood5 = run_convergence_study(&base, &mk(Schedule::Flooding, frames_b), &[5]).unwrap();
    let nw5 = run_convergence_study(&base, &mk(Schedule::NodeWise, frames_b), &[5]).unwrap();
    assert!(
        nw5.points[0].fer <= flood5.points[0].fer,
        "NWBP(5) {:.3e} vs flooding(5) {:.3e}",
        nw5.points[0].fer,
        flood5.points[0].fer
    );
    println!(
        "[PASS] criterion 8: layered(10) {:.3e} vs flooding(20) {:.3e} (discordant {}/{}); NWBP(5) {:.3e} <= flooding(5) {:.3e}",
        fer_layered10,
        fer_flood20,
        n01,
        n10,
        nw5.points[0].fer,
        flood5.points[0].fer
    );
}

/// Criterion 9: |min-sum| >= |SPA| with equal sign over 1e6 random input
/// lists, zero violations.
#[test]
fn criterion_09_minsum_domination() {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let mut violations = 0u64;
    for trial in 0..1_000_000u64 {
        let len = rng.random_range(1..=8);
        let scale = if trial % 7 == 0 { 40.0 } else { 8.0 };
        let inputs: Vec<f64> = (0..len)
            .map(|_| rng.random_range(-1.0..1.0) * scale)
            .collect();
        let ms = check_update_minsum(&inputs, 1.0, 0.0);
        let spa = check_update_spa(&inputs);
        let magnitude_ok = ms.abs() >= spa.abs();
        let sign_ok = spa == 0.0 || ms.is_sign_negative() == spa.is_sign_negative();
        if !magnitude_ok || !sign_ok {
            violations += 1;
        }
    }
    assert_eq!(violations, 0);
    println!("[PASS] criterion 9: 0 violations over 1e6 input lists");
}

/// Criterion 10: outage is monotone in SNR under common random numbers, and
/// the F = 2 Monte Carlo point at 10 dB matches a 1-D quadrature oracle
/// within three standard errors.
#[test]
fn criterion_10_outage_sanity() {
    // Monotonicity with common random numbers (same stream per point).
    let grid: Vec<f64> = (0..=10).map(|i| i as f64 * 2.0).collect();
    let curve: Vec<f64> = grid
        .iter()
        .map(|&snr| {
            let mut rng = frame_stream(1010, 0, streams::AUX);
            outage_probability(snr, 0.5, 2, 50_000, &mut rng)
        })
        .collect();
    for w in curve.windows(2) {
        assert!(w[1] <= w[0], "outage not monotone: {:?}", curve);
    }

    // Quadrature oracle for F = 2, R = 1/2 at 10 dB:
    // P = ∫ e^{-a} (1 - e^{-b(a)}) da over a where
    // b(a) = (2^{2R}/(1 + γa) - 1)/γ is positive.
    let rate = 0.5;
    let gamma = snr_per_symbol(10.0, rate);
    let thresh = 2f64.powf(2.0 * rate);
    let a_max = (thresh - 1.0) / gamma;
    let n_steps = 200_000;
    let h_step = a_max / n_steps as f64;
    let integrand = |a: f64| -> f64 {
        let b = ((thresh / (1.0 + gamma * a)) - 1.0) / gamma;
        (-a).exp() * (1.0 - (-b).exp())
    };
    let mut oracle = 0.0;
    for i in 0..n_steps {
        let a0 = i as f64 * h_step;
        // Simpson's rule per panel.
        oracle += h_step / 6.0
            * (integrand(a0) + 4.0 * integrand(a0 + h_step / 2.0) + integrand(a0 + h_step));
    }

    let samples = 1_000_000u64;
    let mut rng = frame_stream(1010, 1, streams::AUX);
    let mc = outage_probability(10.0, rate, 2, samples, &mut rng);
    let se = (oracle * (1.0 - oracle) / samples as f64).sqrt();
    assert!(
        (mc - oracle).abs() <= 3.0 * se,
        "MC {:.6e} vs oracle {:.6e} (3 SE = {:.2e})",
        mc,
        oracle,
        3.0 * se
    );
    println!(
        "[PASS] criterion 10: outage monotone; MC {:.4e} within 3 SE of quadrature {:.4e}",
        mc, oracle
    );
}
