//! Loading codes and choosing their encoder.

use crate::codegen::RootCheckTemplate;
use crate::encode::{GeneratorMatrix, IraEncoder};
use crate::error::{Error, Result};
use crate::pcm::{load_alist, load_base_matrix, SparseBinaryMatrix, TannerGraph};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Optional sidecar metadata for a code file (`<stem>.meta.json`).
///
/// Without metadata the harness assumes the conventional layout: information
/// bits on the first k columns when the tail of H is invertible.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CodeMeta {
    /// Display name; defaults to the file stem.
    #[serde(default)]
    pub name: Option<String>,
    /// Codeword positions to solve by back-substitution (selects the IRA
    /// encoder with this parity layout).
    #[serde(default)]
    pub parity: Option<Vec<usize>>,
    /// Preferred systematic positions for the generator encoder.
    #[serde(default)]
    pub systematic: Option<Vec<usize>>,
    /// Root-check structure, when the code was built for block fading.
    #[serde(default)]
    pub root_check: Option<RootCheckTemplate>,
}

/// The encoding route picked for a loaded code.
#[derive(Debug, Clone)]
pub enum CodeEncoder {
    /// Dense generator (any code).
    Generator(GeneratorMatrix),
    /// Linear-time forward substitution (dual-diagonal parity structures).
    Ira(IraEncoder),
}

impl CodeEncoder {
    /// Message length k.
    pub fn k(&self) -> usize {
        match self {
            CodeEncoder::Generator(g) => g.k(),
            CodeEncoder::Ira(e) => e.k(),
        }
    }

    /// Positions carrying the message verbatim, ascending.
    pub fn systematic_positions(&self) -> &[usize] {
        match self {
            CodeEncoder::Generator(g) => g.systematic_positions(),
            CodeEncoder::Ira(e) => e.systematic_positions(),
        }
    }

    /// Encodes one message.
    pub fn encode(&self, message: &[bool]) -> Result<Vec<bool>> {
        match self {
            CodeEncoder::Generator(g) => g.encode(message),
            CodeEncoder::Ira(e) => e.encode(message),
        }
    }
}

/// A code ready for simulation: matrix, graph indexing and encoder.
#[derive(Debug, Clone)]
pub struct LoadedCode {
    /// Display name used in outputs.
    pub name: String,
    /// The parity-check matrix.
    pub h: SparseBinaryMatrix,
    /// Edge indexing shared by all decoders.
    pub graph: TannerGraph,
    /// Encoding route.
    pub encoder: CodeEncoder,
    /// Stable fingerprint of H.
    pub fingerprint: u64,
    /// Root-check structure when available.
    pub root_check: Option<RootCheckTemplate>,
}

impl LoadedCode {
    /// Wraps an in-memory matrix, resolving the encoder from `meta`.
    pub fn from_matrix(
        name: impl Into<String>,
        h: SparseBinaryMatrix,
        meta: Option<CodeMeta>,
    ) -> Result<Self> {
        let meta = meta.unwrap_or_default();
        let encoder = if let Some(parity) = &meta.parity {
            CodeEncoder::Ira(IraEncoder::with_parity_positions(&h, parity)?)
        } else if let Some(sys) = &meta.systematic {
            CodeEncoder::Generator(GeneratorMatrix::derive_with_systematic_hint(&h, sys)?)
        } else {
            CodeEncoder::Generator(GeneratorMatrix::derive_systematic_first(&h)?)
        };
        let graph = TannerGraph::new(&h);
        let fingerprint = h.fingerprint();
        Ok(Self {
            name: meta.name.unwrap_or_else(|| name.into()),
            h,
            graph,
            encoder,
            fingerprint,
            root_check: meta.root_check,
        })
    }

    /// Loads a code from an `.alist` or base-matrix text file, picking up a
    /// `<stem>.meta.json` sidecar when present.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let h = match path.extension().and_then(|e| e.to_str()) {
            Some("alist") => load_alist(&text)?,
            _ => load_base_matrix(&text)?.expand(),
        };
        let meta_path = path.with_extension("meta.json");
        let meta = if meta_path.exists() {
            let meta_text = std::fs::read_to_string(&meta_path)?;
            Some(
                serde_json::from_str::<CodeMeta>(&meta_text)
                    .map_err(|e| Error::Format(format!("{}: {}", meta_path.display(), e)))?,
            )
        } else {
            None
        };
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("code")
            .to_string();
        Self::from_matrix(stem, h, meta)
    }

    /// Codeword length n.
    pub fn n(&self) -> usize {
        self.h.cols()
    }

    /// Message length k.
    pub fn k(&self) -> usize {
        self.encoder.k()
    }

    /// Code rate k/n.
    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n() as f64
    }

    /// Positions compared when counting information-bit errors.
    pub fn info_positions(&self) -> &[usize] {
        self.encoder.systematic_positions()
    }
}
