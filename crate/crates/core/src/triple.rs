//! Candidate strata data `(betaY, betaZ, eps)`, the admissibility conditions
//! (C1)-(C6), the stratum dimension formula, and the index-synchronization
//! map that re-expresses the dimension as a sum over `i`.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{TripleError, TripleField};
use crate::pair::{BSequences, VanishingPair};

/// Candidate stratum data for a pair of rank `r` and degree `d`:
/// `betaY[0..=d]`, `betaZ[0..=d]`, and `eps[j]` for `j = 1..=d-1` (stored at
/// `eps[j-1]`; empty when `d <= 1`).
///
/// Admissibility with respect to a pair means, for every `j = 1..=d-1`:
///
/// * (C1) `eps[j]` is 0 or 1, and 0 unless `j` occurs in `aY` and `d-j` in `aZ`;
/// * (C2) `bY[j+1] >= betaY[j] - eps[j] >= betaY[j+1]`;
/// * (C3) `bZ[j-1] >= betaZ[j] - eps[j] >= betaZ[j-1]`;
/// * (C4) `betaY[j] + betaZ[j] - eps[j] >= r + 1`;
/// * (C5) `r + 1 >= betaY[j+1] + betaZ[j]` and `r + 1 >= betaY[j] + betaZ[j-1]`;
///
/// together with the endpoint condition
///
/// * (C6) `betaY[0] = betaZ[d] = r + 1`, `betaY[d]` is 1 if `aZ[0] = 0` else 0,
///   and `betaZ[0]` is 1 if `aY[0] = 0` else 0.
///
/// The struct itself is plain data; [`check_admissible`] decides whether it is
/// admissible for a given pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissibleTriple {
    #[serde(rename = "betaY")]
    pub beta_y: Vec<i64>,
    #[serde(rename = "betaZ")]
    pub beta_z: Vec<i64>,
    pub eps: Vec<i64>,
}

impl AdmissibleTriple {
    pub fn new(beta_y: Vec<i64>, beta_z: Vec<i64>, eps: Vec<i64>) -> Self {
        Self { beta_y, beta_z, eps }
    }
}

/// One of the admissibility conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A violated condition together with the index `j` at which it failed.
/// (C6) failures report `j = 0` or `j = d` for the offending endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub cond: Condition,
    pub j: usize,
}

fn expected_eps_len(d: i64) -> usize {
    (d - 1).max(0) as usize
}

fn check_lengths(pair: &VanishingPair, triple: &AdmissibleTriple) -> Result<(), TripleError> {
    let want_beta = (pair.d() + 1) as usize;
    let want_eps = expected_eps_len(pair.d());
    for (field, actual, expected) in [
        (TripleField::BetaY, triple.beta_y.len(), want_beta),
        (TripleField::BetaZ, triple.beta_z.len(), want_beta),
        (TripleField::Eps, triple.eps.len(), want_eps),
    ] {
        if actual != expected {
            return Err(TripleError::LengthMismatch {
                field,
                expected,
                actual,
            });
        }
    }
    Ok(())
}

/// Walks every violated condition in a fixed order (endpoints first, then
/// `j = 1..=d-1`), handing each to `visit` until it breaks.
#[allow(clippy::int_plus_one)] // inequalities kept in the form the conditions state them
fn visit_violations<F>(
    pair: &VanishingPair,
    bs: &BSequences,
    beta_y: &[i64],
    beta_z: &[i64],
    eps: &[i64],
    mut visit: F,
) where
    F: FnMut(Violation) -> ControlFlow<()>,
{
    let r = pair.r();
    let d = pair.d() as usize;
    let (b_y, b_z) = (bs.b_y(), bs.b_z());

    let want_yd = i64::from(pair.a_z()[0] == 0);
    let want_z0 = i64::from(pair.a_y()[0] == 0);
    let ok_at_0 = beta_y[0] == r + 1 && beta_z[0] == want_z0;
    let ok_at_d = beta_z[d] == r + 1 && beta_y[d] == want_yd;
    if d == 0 {
        // The two endpoints coincide; a degree-0 pair forces aZ[0] = 0 and
        // r = 0, so the four requirements agree on the value r + 1 = 1.
        if !(beta_y[0] == r + 1 && beta_z[0] == r + 1)
            && visit(Violation { cond: Condition::C6, j: 0 }).is_break()
        {
            return;
        }
    } else {
        if !ok_at_0 && visit(Violation { cond: Condition::C6, j: 0 }).is_break() {
            return;
        }
        if !ok_at_d && visit(Violation { cond: Condition::C6, j: d }).is_break() {
            return;
        }
    }

    for j in 1..d {
        let e = eps[j - 1];
        let eps_allowed = pair.contains_y(j as i64) && pair.contains_z((d - j) as i64);
        let c1 = e == 0 || (e == 1 && eps_allowed);
        let c2 = b_y[j + 1] >= beta_y[j] - e && beta_y[j] - e >= beta_y[j + 1];
        let c3 = b_z[j - 1] >= beta_z[j] - e && beta_z[j] - e >= beta_z[j - 1];
        let c4 = beta_y[j] + beta_z[j] - e >= r + 1;
        let c5 = r + 1 >= beta_y[j + 1] + beta_z[j] && r + 1 >= beta_y[j] + beta_z[j - 1];
        for (ok, cond) in [
            (c1, Condition::C1),
            (c2, Condition::C2),
            (c3, Condition::C3),
            (c4, Condition::C4),
            (c5, Condition::C5),
        ] {
            if !ok && visit(Violation { cond, j }).is_break() {
                return;
            }
        }
    }
}

/// Checks `(betaY, betaZ, eps)` against (C1)-(C6) for `pair`, returning every
/// violation found. An empty list means the triple is admissible.
pub fn check_admissible(
    pair: &VanishingPair,
    triple: &AdmissibleTriple,
) -> Result<Vec<Violation>, TripleError> {
    check_lengths(pair, triple)?;
    let bs = pair.b_sequences();
    let mut out = Vec::new();
    visit_violations(pair, &bs, &triple.beta_y, &triple.beta_z, &triple.eps, |v| {
        out.push(v);
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Admissibility as a short-circuiting predicate over raw slices. Used by the
/// enumerator's inner loops where the violation list is not needed.
pub(crate) fn is_admissible_slices(
    pair: &VanishingPair,
    bs: &BSequences,
    beta_y: &[i64],
    beta_z: &[i64],
    eps: &[i64],
) -> bool {
    let mut ok = true;
    visit_violations(pair, bs, beta_y, beta_z, eps, |_| {
        ok = false;
        ControlFlow::Break(())
    });
    ok
}

fn ensure_admissible(pair: &VanishingPair, triple: &AdmissibleTriple) -> Result<BSequences, TripleError> {
    let violations = check_admissible(pair, triple)?;
    if !violations.is_empty() {
        return Err(TripleError::NotAdmissible { violations });
    }
    Ok(pair.b_sequences())
}

/// The stratum dimension
///
/// ```text
/// D = sum_{j=1}^{d-1} (betaY[j] - betaY[j+1]) * (bY[j+1] - betaY[j] + eps[j])
///                   + (betaZ[j] - betaZ[j-1]) * (bZ[j-1] - betaZ[j] + eps[j])
///                   + (r+1 - betaY[j+1] - betaZ[j-1]) * (betaY[j] + betaZ[j] - eps[j] - r - 1)
/// ```
///
/// evaluated on an admissible triple. Empty sum (hence 0) when `d <= 1`.
pub fn dimension(pair: &VanishingPair, triple: &AdmissibleTriple) -> Result<i64, TripleError> {
    let bs = ensure_admissible(pair, triple)?;
    Ok(dimension_formula(
        pair.r(),
        &bs,
        &triple.beta_y,
        &triple.beta_z,
        &triple.eps,
    ))
}

pub(crate) fn dimension_formula(
    r: i64,
    bs: &BSequences,
    beta_y: &[i64],
    beta_z: &[i64],
    eps: &[i64],
) -> i64 {
    let (b_y, b_z) = (bs.b_y(), bs.b_z());
    let d = b_y.len() - 1;
    let mut total = 0;
    for j in 1..d {
        let e = eps[j - 1];
        total += (beta_y[j] - beta_y[j + 1]) * (b_y[j + 1] - beta_y[j] + e)
            + (beta_z[j] - beta_z[j - 1]) * (b_z[j - 1] - beta_z[j] + e)
            + (r + 1 - beta_y[j + 1] - beta_z[j - 1]) * (beta_y[j] + beta_z[j] - e - r - 1);
    }
    total
}

/// The index-synchronization data of an admissible triple.
///
/// For each `i` in the interval `I = [betaZ[0], r - betaY[d]]` there is a
/// unique pair `(j1, j2)` with
///
/// * `r + 1 - betaY[j1] <= i <= r - betaY[j1+1]` (`j1` in `0..=d-1`), and
/// * `betaZ[j2-1] <= i <= betaZ[j2] - 1` (`j2` in `1..=d`),
///
/// and `(j1, j2)` is always of the form `(j, j)` or `(j-1, j)`. `j_diag`
/// collects the diagonal images, `j_off` the off-diagonal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncData {
    /// `betaZ[0]`, the lower end of the domain interval.
    pub i_low: i64,
    /// `r - betaY[d]`, the upper end; the domain is empty when below `i_low`.
    pub i_high: i64,
    /// `i -> (j1, j2)` over the domain.
    pub psi: BTreeMap<usize, (usize, usize)>,
    /// All `j` with nonempty diagonal preimage `psi^{-1}(j, j)`.
    pub j_diag: BTreeSet<usize>,
    /// All `j` with nonempty off-diagonal preimage `psi^{-1}(j-1, j)`.
    pub j_off: BTreeSet<usize>,
}

impl SyncData {
    pub fn diag_preimage(&self, j: usize) -> Vec<usize> {
        self.psi
            .iter()
            .filter(|&(_, &(j1, j2))| j1 == j && j2 == j)
            .map(|(&i, _)| i)
            .collect()
    }

    pub fn off_preimage(&self, j: usize) -> Vec<usize> {
        self.psi
            .iter()
            .filter(|&(_, &(j1, j2))| j2 == j && j1 + 1 == j)
            .map(|(&i, _)| i)
            .collect()
    }
}

/// Computes the synchronization map of an admissible triple by scanning the
/// defining bounds for each `i` in the domain.
pub fn sync_map(pair: &VanishingPair, triple: &AdmissibleTriple) -> Result<SyncData, TripleError> {
    ensure_admissible(pair, triple)?;
    Ok(sync_map_unchecked(pair, &triple.beta_y, &triple.beta_z))
}

#[allow(clippy::int_plus_one)] // bounds kept in the form the definition states them
fn sync_map_unchecked(pair: &VanishingPair, beta_y: &[i64], beta_z: &[i64]) -> SyncData {
    let r = pair.r();
    let d = pair.d() as usize;
    let i_low = beta_z[0];
    let i_high = r - beta_y[d];
    let mut psi = BTreeMap::new();
    let mut j_diag = BTreeSet::new();
    let mut j_off = BTreeSet::new();
    let mut i = i_low;
    while i <= i_high {
        let j1 = (0..d)
            .find(|&j1| r + 1 - beta_y[j1] <= i && i <= r - beta_y[j1 + 1])
            .expect("every i in the domain satisfies the betaY bounds for a unique j1");
        let j2 = (1..=d)
            .find(|&j2| beta_z[j2 - 1] <= i && i <= beta_z[j2] - 1)
            .expect("every i in the domain satisfies the betaZ bounds for a unique j2");
        if j1 == j2 {
            j_diag.insert(j1);
        } else if j1 + 1 == j2 {
            j_off.insert(j2);
        } else {
            unreachable!("synchronization image must be (j, j) or (j-1, j)");
        }
        psi.insert(i as usize, (j1, j2));
        i += 1;
    }
    SyncData {
        i_low,
        i_high,
        psi,
        j_diag,
        j_off,
    }
}

/// The stratum dimension evaluated through the synchronization map:
///
/// ```text
/// sum over i with psi(i) = (j, j)   of  bY[j+1] + bZ[j-1] + eps[j] - r - 1
/// + sum over i with psi(i) = (j-1, j) of (bY[j] + betaZ[j-1] - r - 1) + (bZ[j-1] + betaY[j] - r - 1)
/// ```
///
/// This always agrees with [`dimension`]; the two routes are kept independent
/// so they can be checked against each other.
pub fn dimension_via_sync(
    pair: &VanishingPair,
    triple: &AdmissibleTriple,
) -> Result<i64, TripleError> {
    let bs = ensure_admissible(pair, triple)?;
    let (b_y, b_z) = (bs.b_y(), bs.b_z());
    let r = pair.r();
    let sync = sync_map_unchecked(pair, &triple.beta_y, &triple.beta_z);
    let mut total = 0;
    for &(j1, j2) in sync.psi.values() {
        if j1 == j2 {
            let j = j1;
            total += b_y[j + 1] + b_z[j - 1] + triple.eps[j - 1] - r - 1;
        } else {
            let j = j2;
            total += (b_y[j] + triple.beta_z[j - 1] - r - 1)
                + (b_z[j - 1] + triple.beta_y[j] - r - 1);
        }
    }
    Ok(total)
}
