//! Result persistence: CSV (one row per SNR point, plot-ready) and JSON
//! (full metadata, self-describing via the embedded config and its hash).

use super::SimResult;
use crate::error::Result;
use std::io::Write;
use std::path::Path;

/// The CSV header, kept in one place so readers can rely on it.
pub const CSV_HEADER: &str = "ebn0_db,sigma,frames,frame_errors,bit_errors,fer,ber,\
fer_wilson_low,fer_wilson_high,mean_iterations,p50_iterations,p95_iterations,converged_frames";

/// Renders a result as CSV text. Floats use Rust's shortest round-trip
/// formatting, which is platform-independent, so identical results yield
/// byte-identical files.
pub fn to_csv(result: &SimResult) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for p in &result.points {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            p.ebn0_db,
            p.sigma,
            p.frames,
            p.frame_errors,
            p.bit_errors,
            p.fer,
            p.ber,
            p.fer_wilson_low,
            p.fer_wilson_high,
            p.mean_iterations,
            p.p50_iterations,
            p.p95_iterations,
            p.converged_frames
        ));
    }
    out
}

/// Writes `<stem>.csv`.
pub fn write_csv(result: &SimResult, path: impl AsRef<Path>) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(to_csv(result).as_bytes())?;
    Ok(())
}

/// Writes `<stem>.json` with the full metadata.
pub fn write_json(result: &SimResult, path: impl AsRef<Path>) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    let text = serde_json::to_string_pretty(result).expect("result serializes");
    f.write_all(text.as_bytes())?;
    f.write_all(b"\n")?;
    Ok(())
}
