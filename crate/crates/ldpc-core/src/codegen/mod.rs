//! Code construction: progressive edge growth, quasi-cyclic lifting with
//! greedy shift selection, the repeat-accumulate dual-diagonal template, and
//! root-check structuring for block-fading diversity.

mod ira;
mod peg;
mod root_check;

pub use ira::{build_ira_code, build_ira_template};
pub use peg::{peg_construct, qc_peg_construct};
pub use root_check::{audit_root_check, build_qc_ira_root_check, RootCheckTemplate};

use crate::error::{Error, Result};

/// Target degree for every variable node handed to the PEG grower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Validates a per-variable degree list against `m` check nodes.
    pub fn new(degrees: Vec<usize>, m: usize) -> Result<Self> {
        if let Some((j, &d)) = degrees.iter().enumerate().find(|(_, &d)| d == 0 || d > m) {
            return Err(Error::Parameter(format!(
                "variable {} requests degree {} outside 1..={}",
                j, d, m
            )));
        }
        Ok(Self { degrees })
    }

    /// All variables share the same degree.
    pub fn regular(n: usize, degree: usize, m: usize) -> Result<Self> {
        Self::new(vec![degree; n], m)
    }

    /// Number of variables covered.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    /// True when the sequence is empty.
    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Degree of variable `j`.
    pub fn degree(&self, j: usize) -> usize {
        self.degrees[j]
    }

    /// Total number of edges the sequence will create.
    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// The raw degree list.
    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }
}
