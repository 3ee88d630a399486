//! Per-braid invariant records, as cached on disk and emitted by batch runs.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::braid::BraidWord;
use crate::cover::h1_order;
use crate::dynamics::{estimate_entropy, EntropyOptions};
use crate::error::{Error, Result};
use crate::fishnet::{fishnet_parse, jm_distance};
use crate::linalg::BigNum;
use crate::permutation::{canonical_projection, Permutation};
use crate::plat::summarize;

/// Version of the JSON layout, bumped on any field change.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// The word a record is keyed on: freely reduced, in numeric form.
pub fn normalized_form(w: &BraidWord) -> String {
    w.free_reduce().to_numeric()
}

/// SHA-256 of the normalized form, hex encoded.
pub fn cache_key(w: &BraidWord) -> String {
    hex::encode(Sha256::digest(normalized_form(w).as_bytes()))
}

/// Rounds to five decimals, the precision reported everywhere.
pub fn round5(x: f64) -> f64 {
    (x * 1e5).round() / 1e5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: String,
    pub key: String,
    pub normalized: String,
    pub braid: String,
    pub strands: usize,
    pub permutation: Permutation,
    pub components: usize,
    pub bridges: Vec<usize>,
    pub entropy: f64,
    pub entropy_converged: bool,
    pub h1_order: BigNum,
    /// Exact bridge distance when the word is a highly twisted plat.
    pub distance: Option<u64>,
    /// Seconds since the Unix epoch at computation time.
    pub computed_at: u64,
}

impl ReportRecord {
    /// Equality ignoring the timestamp.
    pub fn same_invariants(&self, other: &ReportRecord) -> bool {
        ReportRecord { computed_at: 0, ..self.clone() } == ReportRecord { computed_at: 0, ..other.clone() }
    }
}

pub fn analyze(w: &BraidWord) -> Result<ReportRecord> {
    if w.strands() % 2 == 1 {
        return Err(Error::OddStrands(w.strands()));
    }
    let w = w.free_reduce();
    let summary = summarize(&w);
    let est = estimate_entropy(&w, &EntropyOptions::default());
    let distance = fishnet_parse(&w).ok().and_then(|g| jm_distance(&g).ok());
    let computed_at =
        std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Ok(ReportRecord {
        schema_version: SCHEMA_VERSION.to_string(),
        key: cache_key(&w),
        normalized: normalized_form(&w),
        braid: w.to_string(),
        strands: w.strands(),
        permutation: canonical_projection(&w),
        components: summary.components,
        bridges: summary.bridges_per_component,
        entropy: round5(est.value),
        entropy_converged: est.converged,
        h1_order: BigNum(h1_order(&w)?),
        distance,
        computed_at,
    })
}
