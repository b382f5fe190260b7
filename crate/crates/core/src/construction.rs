//! Constructs, for a connected pair, an admissible triple whose stratum
//! dimension equals the ramification sum.
//!
//! The construction tracks the greatest connectivity witness `gw(i)` of each
//! `i`, cuts `0..=d` at the interior witness values `j_1 < ... < j_s`, and
//! assigns `betaY[j] = |I_k|` and `betaZ[j-1] = r + 1 - |I_k|` on each block
//! `j_{k-1} < j <= j_k`, where `I_k = {i : gw(i) >= j_k}`. `eps[j]` is 1
//! exactly at the interior witness values.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::ConstructionError;
use crate::pair::VanishingPair;
use crate::triple::AdmissibleTriple;

/// Intermediate data of the optimal-triple construction, kept around for
/// inspection (the CLI exposes it behind `construct --trace`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    d: i64,
    greatest: Vec<i64>,
    witness_values: BTreeSet<i64>,
    interior: Vec<i64>,
    i_sets: Vec<BTreeSet<usize>>,
}

/// Wire form of a trace: the witness map, the interior cut values, and the
/// sizes of the nested index sets `I_0..I_{s+1}`.
#[derive(Debug, Clone, Serialize)]
pub struct TraceSummary {
    #[serde(rename = "frakJ")]
    pub frak_j: Vec<i64>,
    #[serde(rename = "J")]
    pub j: Vec<i64>,
    #[serde(rename = "Isizes")]
    pub i_sizes: Vec<usize>,
}

impl ConstructionTrace {
    /// Greatest witness per index `i = 0..=r`.
    pub fn greatest(&self) -> &[i64] {
        &self.greatest
    }

    /// The set of witness values actually attained.
    pub fn witness_values(&self) -> &BTreeSet<i64> {
        &self.witness_values
    }

    /// Attained witness values with the endpoints 0 and `d` removed,
    /// ascending: `j_1 < ... < j_s`.
    pub fn interior(&self) -> &[i64] {
        &self.interior
    }

    /// The nested sets `I_0 ⊇ I_1 ⊇ ... ⊇ I_{s+1}` with
    /// `I_k = {i : greatest(i) >= cut(k)}`.
    pub fn i_sets(&self) -> &[BTreeSet<usize>] {
        &self.i_sets
    }

    /// The cut value `j_k`, with `j_0 = 0` and `j_{s+1} = d`.
    pub fn cut(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else if k <= self.interior.len() {
            self.interior[k - 1]
        } else {
            self.d
        }
    }

    pub fn summary(&self) -> TraceSummary {
        TraceSummary {
            frak_j: self.greatest.clone(),
            j: self.interior.clone(),
            i_sizes: self.i_sets.iter().map(BTreeSet::len).collect(),
        }
    }
}

/// The greatest `j` via which `pair` is connected at `i`.
pub fn greatest_witness(pair: &VanishingPair, i: usize) -> Result<i64, ConstructionError> {
    let witness = pair.connected_at(i)?;
    witness
        .witnesses
        .last()
        .copied()
        .ok_or(ConstructionError::NotConnectedAt { i })
}

/// Builds the construction trace of a connected pair.
pub fn build_trace(pair: &VanishingPair) -> Result<ConstructionTrace, ConstructionError> {
    let n = pair.a_y().len();
    let mut greatest = Vec::with_capacity(n);
    for i in 0..n {
        match greatest_witness(pair, i) {
            Ok(j) => greatest.push(j),
            Err(ConstructionError::NotConnectedAt { .. }) => {
                return Err(ConstructionError::NotConnected)
            }
            Err(e) => return Err(e),
        }
    }
    let witness_values: BTreeSet<i64> = greatest.iter().copied().collect();
    let interior: Vec<i64> = witness_values
        .iter()
        .copied()
        .filter(|&j| j != 0 && j != pair.d())
        .collect();
    let s = interior.len();
    let mut trace = ConstructionTrace {
        d: pair.d(),
        greatest,
        witness_values,
        interior,
        i_sets: Vec::with_capacity(s + 2),
    };
    for k in 0..=s + 1 {
        let j_k = trace.cut(k);
        let set = trace
            .greatest
            .iter()
            .enumerate()
            .filter(|&(_, &g)| g >= j_k)
            .map(|(i, _)| i)
            .collect();
        trace.i_sets.push(set);
    }
    Ok(trace)
}

/// Builds the admissible triple of a connected pair that attains the
/// ramification sum as its stratum dimension.
pub fn build_optimal_triple(pair: &VanishingPair) -> Result<AdmissibleTriple, ConstructionError> {
    let trace = build_trace(pair)?;
    let r = pair.r();
    let d = pair.d() as usize;
    let mut beta_y = vec![0i64; d + 1];
    let mut beta_z = vec![0i64; d + 1];
    let mut eps = vec![0i64; d.saturating_sub(1)];
    beta_y[0] = r + 1;
    beta_z[d] = r + 1;
    for &j in trace.interior() {
        eps[j as usize - 1] = 1;
    }
    let mut k = 1;
    for j in 1..=d {
        while (j as i64) > trace.cut(k) {
            k += 1;
        }
        let size = trace.i_sets()[k].len() as i64;
        beta_y[j] = size;
        beta_z[j - 1] = r + 1 - size;
    }
    Ok(AdmissibleTriple::new(beta_y, beta_z, eps))
}
