//! Numerical moduli data and the open-subset verdict for a pair at genus `g`.

use serde::{Deserialize, Serialize};

use crate::error::ClassifyError;
use crate::enumeration::max_dimension;
use crate::pair::VanishingPair;

/// The expected moduli dimension `rho = (r+1)(d-r) - rg`. May be negative.
pub fn brill_noether(r: i64, d: i64, g: i64) -> i64 {
    (r + 1) * (d - r) - r * g
}

/// The general-curve dimension `rho - sigma` of the stratum of series with
/// the given vanishing sequences. Negative values are reported as-is; under
/// the rho-heuristic policy they signal emptiness.
pub fn eh_stratum_dimension(pair: &VanishingPair, g: i64) -> i64 {
    brill_noether(pair.r(), pair.d(), g) - pair.ramification_sum()
}

/// How [`classify`] decides whether the stratum is nonempty. There is no
/// general numerical criterion, so the choice is the caller's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NonemptinessPolicy {
    /// Trust the caller that the stratum is nonempty.
    AssumeNonempty,
    /// Treat the stratum as empty; the verdict is then always negative.
    AssumeEmpty,
    /// At genus 0, linear series with arbitrary vanishing at a fixed point
    /// exist, so every stratum is nonempty. Rejects `g > 0`.
    GenusZero,
    /// Heuristic: nonempty iff `rho - sigma >= 0`. Not a theorem; the report
    /// carries the policy name so downstream consumers can tell.
    RhoHeuristic,
}

impl NonemptinessPolicy {
    pub fn is_heuristic(self) -> bool {
        matches!(self, NonemptinessPolicy::RhoHeuristic)
    }
}

impl std::fmt::Display for NonemptinessPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            NonemptinessPolicy::AssumeNonempty => "assume-nonempty",
            NonemptinessPolicy::AssumeEmpty => "assume-empty",
            NonemptinessPolicy::GenusZero => "genus-zero",
            NonemptinessPolicy::RhoHeuristic => "rho-heuristic",
        };
        f.write_str(name)
    }
}

impl std::str::FromStr for NonemptinessPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "assume-nonempty" => Ok(NonemptinessPolicy::AssumeNonempty),
            "assume-empty" => Ok(NonemptinessPolicy::AssumeEmpty),
            "genus-zero" => Ok(NonemptinessPolicy::GenusZero),
            "rho-heuristic" => Ok(NonemptinessPolicy::RhoHeuristic),
            other => Err(format!(
                "unknown policy {other:?} (expected assume-nonempty, assume-empty, genus-zero, or rho-heuristic)"
            )),
        }
    }
}

/// Everything the classifier knows about one stratum: the moduli numbers, the
/// fiber maximum, and the verdict on whether the stratum's preimage contains
/// an open subset of the moduli space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StratumReport {
    pub rho: i64,
    pub sigma: i64,
    /// `rho - sigma`.
    pub eh_dim: i64,
    /// Maximum stratum dimension over all admissible triples (brute force).
    pub fiber_max: i64,
    /// `ehDim + fiberMax`; at most `rho`, with equality iff connected.
    pub total: i64,
    pub connected: bool,
    pub refined: bool,
    pub nonempty_policy: NonemptinessPolicy,
    pub nonempty: bool,
    /// `nonempty && connected`.
    pub open_subset: bool,
}

impl StratumReport {
    pub fn csv_header() -> &'static str {
        "rho,sigma,ehDim,fiberMax,total,connected,refined,nonemptyPolicy,nonempty,openSubset"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.rho,
            self.sigma,
            self.eh_dim,
            self.fiber_max,
            self.total,
            self.connected,
            self.refined,
            self.nonempty_policy,
            self.nonempty,
            self.open_subset
        )
    }
}

/// Computes the full stratum report for `pair` at genus `g` under the given
/// nonemptiness policy.
pub fn classify(
    pair: &VanishingPair,
    g: i64,
    policy: NonemptinessPolicy,
) -> Result<StratumReport, ClassifyError> {
    let rho = brill_noether(pair.r(), pair.d(), g);
    let sigma = pair.ramification_sum();
    let eh_dim = rho - sigma;
    let (fiber_max, _) = max_dimension(pair);
    let connected = pair.is_connected();
    let nonempty = match policy {
        NonemptinessPolicy::AssumeNonempty => true,
        NonemptinessPolicy::AssumeEmpty => false,
        NonemptinessPolicy::GenusZero => {
            if g != 0 {
                return Err(ClassifyError::GenusZeroPolicy { g });
            }
            true
        }
        NonemptinessPolicy::RhoHeuristic => eh_dim >= 0,
    };
    Ok(StratumReport {
        rho,
        sigma,
        eh_dim,
        fiber_max,
        total: eh_dim + fiber_max,
        connected,
        refined: pair.is_refined(),
        nonempty_policy: policy,
        nonempty,
        open_subset: nonempty && connected,
    })
}
