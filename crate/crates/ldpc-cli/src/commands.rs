//! Command implementations.

use crate::args::*;
use ldpc_core::channel::{outage_probability_with, CapacityInput};
use ldpc_core::codegen::{
    audit_root_check, build_ira_code, build_qc_ira_root_check, peg_construct, qc_peg_construct,
    DegreeSequence,
};
use ldpc_core::decode::{vfap_weights, Decoder, DecoderConfig, Schedule, Variant};
use ldpc_core::encode::GeneratorMatrix;
use ldpc_core::pcm::{
    count_short_cycles, girth, load_base_matrix, save_alist, save_base_matrix, SparseBinaryMatrix,
};
use ldpc_core::sim::{
    frame_stream, run_fer, streams, sweep_parameter, write_csv, write_json, ChannelKind, CodeMeta,
    LoadedCode, SimConfig, SweepParam,
};
use ldpc_core::{Error, Result};
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Construct { kind } => construct(kind),
        Command::Analyze(a) => analyze(a),
        Command::Encode(a) => encode(a),
        Command::Decode(a) => decode(a),
        Command::Simulate(a) => simulate(a),
        Command::Sweep(a) => sweep(a),
        Command::Outage(a) => outage(a),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    std::fs::write(path, text)?;
    Ok(())
}

fn meta_path(out: &Path) -> PathBuf {
    out.with_extension("meta.json")
}

fn construct(kind: ConstructKind) -> Result<()> {
    match kind {
        ConstructKind::Peg {
            rows,
            cols,
            col_degree,
            seed,
            out,
        } => {
            let degrees = DegreeSequence::regular(cols, col_degree, rows)?;
            let h = peg_construct(rows, cols, &degrees, seed)?;
            write_file(&out, &save_alist(&h))?;
            eprintln!(
                "wrote {} ({}x{}, girth {})",
                out.display(),
                h.rows(),
                h.cols(),
                girth_str(&h)
            );
        }
        ConstructKind::QcPeg {
            block_rows,
            block_cols,
            lift,
            col_degree,
            degrees,
            seed,
            out,
        } => {
            let degs = degrees.unwrap_or_else(|| vec![col_degree; block_cols]);
            let base = qc_peg_construct(block_rows, block_cols, lift, &degs, seed)?;
            write_file(&out, &save_base_matrix(&base))?;
            let h = base.expand();
            eprintln!(
                "wrote {} ({}x{} blocks, lift {}, expands {}x{}, girth {})",
                out.display(),
                block_rows,
                block_cols,
                lift,
                h.rows(),
                h.cols(),
                girth_str(&h)
            );
        }
        ConstructKind::Ira {
            rows,
            cols,
            col_degree,
            seed,
            out,
        } => {
            let h = build_ira_code(rows, cols, col_degree, seed)?;
            write_file(&out, &save_alist(&h))?;
            let meta = CodeMeta {
                name: None,
                parity: Some(((cols - rows)..cols).collect()),
                systematic: None,
                root_check: None,
            };
            write_file(
                &meta_path(&out),
                &serde_json::to_string_pretty(&meta).expect("meta serializes"),
            )?;
            eprintln!("wrote {} and {}", out.display(), meta_path(&out).display());
        }
        ConstructKind::RootCheck {
            block_cols,
            lift,
            fadings,
            seed,
            out,
        } => {
            let (base, tpl) =
                build_qc_ira_root_check(block_cols, block_cols / 2, lift, fadings, seed)?;
            write_file(&out, &save_base_matrix(&base))?;
            let meta = CodeMeta {
                name: None,
                parity: Some(tpl.parity_positions.clone()),
                systematic: None,
                root_check: Some(tpl),
            };
            write_file(
                &meta_path(&out),
                &serde_json::to_string_pretty(&meta).expect("meta serializes"),
            )?;
            let h = base.expand();
            eprintln!(
                "wrote {} and {} (expands {}x{}, girth {})",
                out.display(),
                meta_path(&out).display(),
                h.rows(),
                h.cols(),
                girth_str(&h)
            );
        }
    }
    Ok(())
}

fn girth_str(h: &SparseBinaryMatrix) -> String {
    match girth(h) {
        Some(g) => g.to_string(),
        None => "acyclic".into(),
    }
}

fn load_matrix(path: &Path) -> Result<SparseBinaryMatrix> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("alist") => ldpc_core::pcm::load_alist(&text),
        _ => Ok(load_base_matrix(&text)?.expand()),
    }
}

fn analyze(a: AnalyzeArgs) -> Result<()> {
    let h = load_matrix(&a.code)?;
    let (m, n) = (h.rows(), h.cols());
    println!("code: {}", a.code.display());
    println!(
        "size: {} checks x {} variables, {} edges",
        m,
        n,
        h.edge_count()
    );
    let colw = h.col_weights();
    let roww = h.row_weights();
    println!(
        "degrees: columns {}..{}, rows {}..{}",
        colw.iter().min().unwrap(),
        colw.iter().max().unwrap(),
        roww.iter().min().unwrap(),
        roww.iter().max().unwrap()
    );
    match GeneratorMatrix::derive(&h) {
        Ok(g) => {
            let k = g.k();
            println!(
                "rank: {}, k = {}, rate = {:.4}",
                n - k,
                k,
                k as f64 / n as f64
            );
        }
        Err(Error::DegenerateCode) => println!("rank: {} (degenerate: only the zero codeword)", n),
        Err(e) => return Err(e),
    }
    println!("girth: {}", girth_str(&h));
    let counts = count_short_cycles(&h, a.max_cycle_len)?;
    let checks_in = (0..m).filter(|&i| counts.check_count(i) > 0).count();
    let vars_in = (0..n).filter(|&j| counts.var_count(j) > 0).count();
    println!(
        "cycles (length <= {}): {} total; {}/{} checks and {}/{} variables touched",
        a.max_cycle_len,
        counts.total(),
        checks_in,
        m,
        vars_in,
        n
    );

    let mp = meta_path(&a.code);
    if mp.exists() {
        let meta: CodeMeta = serde_json::from_str(&std::fs::read_to_string(&mp)?)
            .map_err(|e| Error::Format(format!("{}: {}", mp.display(), e)))?;
        if let Some(tpl) = &meta.root_check {
            let violations = audit_root_check(&h, tpl);
            if violations.is_empty() {
                println!(
                    "root-check audit: PASS ({} information bits over {} fading blocks)",
                    tpl.info_positions.len(),
                    tpl.fadings
                );
            } else {
                println!(
                    "root-check audit: FAIL ({} unprotected information bits: {:?}...)",
                    violations.len(),
                    &violations[..violations.len().min(8)]
                );
            }
        }
    }
    Ok(())
}

fn read_lines(input: &Option<PathBuf>) -> Result<Vec<String>> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            for line in std::io::stdin().lock().lines() {
                buf.push_str(&line?);
                buf.push('\n');
            }
            buf
        }
    };
    Ok(text
        .lines()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty())
        .collect())
}

fn write_lines(out: &Option<PathBuf>, lines: &[String]) -> Result<()> {
    let text = lines.join("\n") + "\n";
    match out {
        Some(path) => write_file(path, &text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_bits(line: &str, lineno: usize, expect: usize) -> Result<Vec<bool>> {
    let bits: Vec<bool> = line
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Parse {
                line: lineno,
                message: format!("expected 0/1, got {:?}", other),
            }),
        })
        .collect::<Result<_>>()?;
    if bits.len() != expect {
        return Err(Error::Parse {
            line: lineno,
            message: format!("expected {} bits, got {}", expect, bits.len()),
        });
    }
    Ok(bits)
}

fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn encode(a: EncodeArgs) -> Result<()> {
    let code = LoadedCode::from_file(&a.code)?;
    let lines = read_lines(&a.r#in)?;
    let mut out_lines = Vec::with_capacity(lines.len());
    for (idx, line) in lines.iter().enumerate() {
        let msg = parse_bits(line, idx + 1, code.k())?;
        let cw = code.encoder.encode(&msg)?;
        out_lines.push(bits_to_string(&cw));
    }
    write_lines(&a.out, &out_lines)
}

/// Resolves decoder flags to a [`DecoderConfig`]; VFAP weights come from the
/// shortest-cycle structure of `h` (codes whose girth exceeds the counting
/// window of 8 fall back to uniform weights).
fn decoder_config(args: &DecoderArgs, h: &SparseBinaryMatrix) -> Result<DecoderConfig> {
    let variant = match args.decoder {
        DecoderName::Spa => Variant::Spa,
        DecoderName::MinSum => Variant::MinSum,
        DecoderName::NormalizedMinSum => Variant::NormalizedMinSum { alpha: args.alpha },
        DecoderName::OffsetMinSum => Variant::OffsetMinSum { beta: args.beta },
        DecoderName::Urw => Variant::Urw { rho: args.rho },
        DecoderName::Vfap => {
            let weights = match girth(h) {
                Some(g) if g <= 8 => {
                    let counts = count_short_cycles(h, g)?;
                    vfap_weights(h, &counts, args.rho)?
                }
                _ => vec![1.0; h.rows()],
            };
            Variant::Vfap { weights }
        }
    };
    let schedule = match args.schedule {
        ScheduleName::Flooding => Schedule::Flooding,
        ScheduleName::Layered => Schedule::Layered,
        ScheduleName::Residual => Schedule::ResidualBp,
        ScheduleName::NodeWise => Schedule::NodeWise,
    };
    Ok(DecoderConfig {
        variant,
        schedule,
        max_iters: args.max_iters,
        stop_on_syndrome: !args.no_early_stop,
    })
}

fn decode(a: DecodeArgs) -> Result<()> {
    let code = LoadedCode::from_file(&a.code)?;
    let cfg = decoder_config(&a.decoder, &code.h)?;
    let mut decoder = Decoder::new(&code.graph, cfg)?;
    let lines = read_lines(&a.r#in)?;
    let mut out_lines = Vec::with_capacity(lines.len());
    let mut converged = 0usize;
    for (idx, line) in lines.iter().enumerate() {
        let llr: Vec<f64> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("bad LLR value {:?}", tok),
                })
            })
            .collect::<Result<_>>()?;
        if llr.len() != code.n() {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("expected {} LLRs, got {}", code.n(), llr.len()),
            });
        }
        let result = decoder.decode(&llr)?;
        converged += usize::from(result.converged);
        let bits = if a.info_only {
            code.info_positions()
                .iter()
                .map(|&p| result.bits[p])
                .collect::<Vec<bool>>()
        } else {
            result.bits
        };
        out_lines.push(bits_to_string(&bits));
    }
    eprintln!("{}/{} words converged", converged, lines.len());
    write_lines(&a.out, &out_lines)
}

fn snr_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if step <= 0.0 {
        return Err(Error::Config("snr-step must be positive".into()));
    }
    if to < from {
        return Err(Error::Config("snr-to must be >= snr-from".into()));
    }
    let count = ((to - from) / step).round() as usize + 1;
    Ok((0..count).map(|i| from + i as f64 * step).collect())
}

fn workers_from(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("LDPC_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn parse_rate(text: &str) -> Result<f64> {
    if let Some((num, den)) = text.split_once('/') {
        let n: f64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad rate {:?}", text)))?;
        let d: f64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad rate {:?}", text)))?;
        Ok(n / d)
    } else {
        text.trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad rate {:?}", text)))
    }
}

fn simulate(a: SimulateArgs) -> Result<()> {
    let channel = match a.channel {
        ChannelName::Awgn => ChannelKind::Awgn,
        ChannelName::BlockFading => ChannelKind::BlockFading { fadings: a.fadings },
    };
    let grid = snr_grid(a.snr_from, a.snr_to, a.snr_step)?;

    let mut codes = Vec::new();
    for path in &a.code {
        codes.push(LoadedCode::from_file(path)?);
    }
    if let Some(rates) = &a.rates {
        let wanted: Vec<f64> = rates.iter().map(|r| parse_rate(r)).collect::<Result<_>>()?;
        codes.retain(|c| wanted.iter().any(|&r| (c.rate() - r).abs() < 1e-6));
        if codes.is_empty() {
            return Err(Error::Config("no code matches the requested rates".into()));
        }
    }

    let multi = codes.len() > 1;
    for code in &codes {
        let cfg = SimConfig {
            snr_db: grid.clone(),
            channel,
            interleave: a.interleave,
            decoder: decoder_config(&a.decoder, &code.h)?,
            max_frames: a.frames,
            min_frame_errors: a.min_errors,
            seed: a.seed,
            workers: workers_from(a.workers),
            all_zero_messages: a.all_zero,
        };
        let result = run_fer(code, &cfg)?;
        println!(
            "# code {} (n={}, k={}, R={:.4}) seed {}",
            result.code_name, result.code_n, result.code_k, result.rate, result.seed
        );
        println!(
            "{:>8} {:>10} {:>12} {:>12} {:>10}",
            "Eb/N0", "frames", "FER", "BER", "iters"
        );
        for p in &result.points {
            println!(
                "{:>8.2} {:>10} {:>12.4e} {:>12.4e} {:>10.2}",
                p.ebn0_db, p.frames, p.fer, p.ber, p.mean_iterations
            );
        }
        if let Some(stem) = &a.out {
            let stem = if multi {
                let mut s = stem.clone();
                s.set_file_name(format!(
                    "{}_{}",
                    stem.file_name().and_then(|f| f.to_str()).unwrap_or("sim"),
                    result.code_name
                ));
                s
            } else {
                stem.clone()
            };
            if let Some(dir) = stem.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            write_csv(&result, stem.with_extension("csv"))?;
            write_json(&result, stem.with_extension("json"))?;
            eprintln!(
                "wrote {} and {}",
                stem.with_extension("csv").display(),
                stem.with_extension("json").display()
            );
        }
    }
    Ok(())
}

fn sweep(a: SweepArgs) -> Result<()> {
    let code = LoadedCode::from_file(&a.code)?;
    let channel = match a.channel {
        ChannelName::Awgn => ChannelKind::Awgn,
        ChannelName::BlockFading => ChannelKind::BlockFading { fadings: a.fadings },
    };
    let cfg = SimConfig {
        snr_db: vec![a.snr],
        channel,
        interleave: false,
        decoder: decoder_config(&a.decoder, &code.h)?,
        max_frames: a.frames,
        min_frame_errors: a.min_errors,
        seed: a.seed,
        workers: workers_from(a.workers),
        all_zero_messages: false,
    };
    let param = match a.param {
        SweepParamName::Alpha => SweepParam::Alpha,
        SweepParamName::Beta => SweepParam::Beta,
        SweepParamName::Rho => SweepParam::Rho,
    };
    let result = sweep_parameter(&code, &cfg, param, &a.grid)?;
    println!(
        "# sweep {:?} on {} at Eb/N0 = {} dB",
        result.param, code.name, result.ebn0_db
    );
    println!(
        "{:>10} {:>12} {:>10} {:>10}",
        "value", "FER", "errors", "frames"
    );
    for e in &result.entries {
        println!(
            "{:>10} {:>12.4e} {:>10} {:>10}",
            e.value, e.fer, e.frame_errors, e.frames
        );
    }
    println!(
        "# best: {} (FER {:.4e})",
        result.best_value, result.best_fer
    );
    if let Some(stem) = &a.out {
        let mut csv = String::from("value,fer,frame_errors,frames\n");
        for e in &result.entries {
            csv.push_str(&format!(
                "{},{},{},{}\n",
                e.value, e.fer, e.frame_errors, e.frames
            ));
        }
        write_file(&stem.with_extension("csv"), &csv)?;
        write_file(
            &stem.with_extension("json"),
            &(serde_json::to_string_pretty(&result).expect("serializes") + "\n"),
        )?;
    }
    Ok(())
}

fn outage(a: OutageArgs) -> Result<()> {
    if a.rate <= 0.0 || a.rate >= 1.0 {
        return Err(Error::Config(format!(
            "rate must be in (0, 1), got {}",
            a.rate
        )));
    }
    if a.samples < 10_000 {
        return Err(Error::Config(
            "need at least 10000 samples for a stable outage estimate".into(),
        ));
    }
    let grid = snr_grid(a.snr_from, a.snr_to, a.snr_step)?;
    let input = if a.bpsk {
        CapacityInput::Bpsk
    } else {
        CapacityInput::Gaussian
    };
    let mut csv = String::from("ebn0_db,outage\n");
    for &snr in &grid {
        // Common random numbers across the grid: same stream per point.
        let mut rng = frame_stream(a.seed, 0, streams::AUX);
        let p = outage_probability_with(snr, a.rate, a.fadings, a.samples, input, &mut rng);
        println!("{:>8.2} {:>12.6e}", snr, p);
        csv.push_str(&format!("{},{}\n", snr, p));
    }
    if let Some(path) = &a.out {
        write_file(path, &csv)?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
