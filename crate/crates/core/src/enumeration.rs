//! Exhaustive generators and verification sweeps.
//!
//! Pair enumeration walks all `(r+1)`-subset pairs of `{0..=d}` in
//! lexicographic order and keeps those satisfying (A3). Triple enumeration
//! backtracks over `j`, pruning with bounds implied by (C1)-(C6); its output
//! is defined to equal the unpruned filter of the full box
//! `[0, r+1]^(2d+2) x {0,1}^(d-1)`, which the test suite checks
//! differentially.
//!
//! Sweeps treat each pair independently, so with the `parallel` feature they
//! fan out over a rayon pool and merge per-pair results in enumeration order;
//! without it the same loop runs sequentially.

use serde::{Deserialize, Serialize};

use crate::construction::build_optimal_triple;
use crate::error::EnumerationError;
use crate::pair::{BSequences, VanishingPair};
use crate::triple::{dimension_formula, is_admissible_slices, AdmissibleTriple};

/// Lexicographic stream of all pairs of rank `r` and degree `d`.
pub fn enumerate_pairs(r: i64, d: i64) -> Result<PairEnumerator, EnumerationError> {
    if r < 0 || d < 0 || r > d {
        return Err(EnumerationError::InvalidRange { r, d });
    }
    let first: Vec<i64> = (0..=r).collect();
    Ok(PairEnumerator {
        r,
        d,
        a_y: first.clone(),
        a_z: first,
        done: false,
    })
}

/// Iterator over all valid pairs for fixed `(r, d)`, ordered
/// lexicographically by `(aY, aZ)`.
#[derive(Debug, Clone)]
pub struct PairEnumerator {
    r: i64,
    d: i64,
    a_y: Vec<i64>,
    a_z: Vec<i64>,
    done: bool,
}

impl PairEnumerator {
    /// Advances `seq` to the next `(r+1)`-subset of `{0..=max}` in
    /// lexicographic order; false once exhausted.
    fn next_subset(seq: &mut [i64], max: i64) -> bool {
        let n = seq.len();
        for i in (0..n).rev() {
            if seq[i] < max - (n - 1 - i) as i64 {
                seq[i] += 1;
                for k in i + 1..n {
                    seq[k] = seq[k - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn advance(&mut self) {
        if !Self::next_subset(&mut self.a_z, self.d) {
            for (i, v) in self.a_z.iter_mut().enumerate() {
                *v = i as i64;
            }
            if !Self::next_subset(&mut self.a_y, self.d) {
                self.done = true;
            }
        }
    }

    fn satisfies_a3(&self) -> bool {
        let n = self.a_y.len();
        (0..n).all(|i| self.a_y[i] + self.a_z[n - 1 - i] >= self.d)
    }
}

impl Iterator for PairEnumerator {
    type Item = VanishingPair;

    fn next(&mut self) -> Option<VanishingPair> {
        while !self.done {
            if self.satisfies_a3() {
                let pair =
                    VanishingPair::new(self.r, self.d, self.a_y.clone(), self.a_z.clone())
                        .expect("enumerated candidates satisfy (A1)-(A3)");
                self.advance();
                return Some(pair);
            }
            self.advance();
        }
        None
    }
}

/// Calls `visit(betaY, betaZ, eps)` once per admissible triple of `pair`, in
/// backtracking order (not the public lexicographic order).
fn for_each_admissible<F>(pair: &VanishingPair, bs: &BSequences, mut visit: F)
where
    F: FnMut(&[i64], &[i64], &[i64]),
{
    let r = pair.r();
    let d = pair.d() as usize;
    let mut beta_y = vec![0i64; d + 1];
    let mut beta_z = vec![0i64; d + 1];
    let eps = vec![0i64; d.saturating_sub(1)];
    if d == 0 {
        beta_y[0] = r + 1;
        beta_z[0] = r + 1;
        debug_assert!(is_admissible_slices(pair, bs, &beta_y, &beta_z, &eps));
        visit(&beta_y, &beta_z, &eps);
        return;
    }
    beta_y[0] = r + 1;
    beta_z[d] = r + 1;
    beta_y[d] = i64::from(pair.a_z()[0] == 0);
    beta_z[0] = i64::from(pair.a_y()[0] == 0);
    if d == 1 {
        debug_assert!(is_admissible_slices(pair, bs, &beta_y, &beta_z, &eps));
        visit(&beta_y, &beta_z, &eps);
        return;
    }
    let eps_max: Vec<i64> = (0..=d as i64)
        .map(|j| i64::from(pair.contains_y(j) && pair.contains_z(pair.d() - j)))
        .collect();
    let mut search = TripleSearch {
        r,
        d,
        b_y: bs.b_y(),
        b_z: bs.b_z(),
        eps_max,
        beta_y,
        beta_z,
        eps,
        visit: &mut visit,
    };
    search.level(1);
}

struct TripleSearch<'a, F> {
    r: i64,
    d: usize,
    b_y: &'a [i64],
    b_z: &'a [i64],
    eps_max: Vec<i64>,
    beta_y: Vec<i64>,
    beta_z: Vec<i64>,
    eps: Vec<i64>,
    visit: &'a mut F,
}

impl<F: FnMut(&[i64], &[i64], &[i64])> TripleSearch<'_, F> {
    /// Chooses `(betaY[j], betaZ[j], eps[j])` for `j = 1..=d-1`; at `j = d`
    /// the remaining conditions against the forced endpoints are checked and
    /// the assignment is emitted.
    #[allow(clippy::int_plus_one)] // inequalities kept in the form the conditions state them
    fn level(&mut self, j: usize) {
        let (r, d) = (self.r, self.d);
        if j == d {
            // (C2) right and (C5) first part at j = d-1 involve betaY[d].
            if self.beta_y[d - 1] - self.eps[d - 2] >= self.beta_y[d]
                && r + 1 >= self.beta_y[d] + self.beta_z[d - 1]
            {
                (self.visit)(&self.beta_y, &self.beta_z, &self.eps);
            }
            return;
        }
        // Upper bounds implied by (C2) right at j-1 and (C5) second part at j.
        let y_cap = if j >= 2 {
            self.beta_y[j - 1] - self.eps[j - 2]
        } else {
            r + 1
        };
        let y_max = y_cap.min(r + 1 - self.beta_z[j - 1]);
        for by in 0..=y_max {
            self.beta_y[j] = by;
            // (C4) with eps >= 0 and (C3) right force the range of betaZ[j];
            // (C3) left with the largest allowed eps caps it.
            let z_min = self.beta_z[j - 1].max(r + 1 - by);
            let z_max = (r + 1).min(self.b_z[j - 1] + self.eps_max[j]);
            for bz in z_min..=z_max {
                self.beta_z[j] = bz;
                for e in 0..=self.eps_max[j] {
                    let c2 = self.b_y[j + 1] >= by - e;
                    let c3 = self.b_z[j - 1] >= bz - e && bz - e >= self.beta_z[j - 1];
                    let c4 = by + bz - e >= r + 1;
                    if c2 && c3 && c4 {
                        self.eps[j - 1] = e;
                        self.level(j + 1);
                    }
                }
            }
        }
    }
}

/// All admissible triples of `pair`, ordered lexicographically by
/// `(betaY, betaZ, eps)`.
pub fn enumerate_triples(pair: &VanishingPair) -> Vec<AdmissibleTriple> {
    let bs = pair.b_sequences();
    let mut out = Vec::new();
    for_each_admissible(pair, &bs, |beta_y, beta_z, eps| {
        out.push(AdmissibleTriple::new(
            beta_y.to_vec(),
            beta_z.to_vec(),
            eps.to_vec(),
        ));
    });
    out.sort_unstable();
    out
}

/// The maximum stratum dimension over all admissible triples of `pair`,
/// together with the first maximizer in enumeration order.
pub fn max_dimension(pair: &VanishingPair) -> (i64, AdmissibleTriple) {
    let bs = pair.b_sequences();
    let mut best: Option<(i64, AdmissibleTriple)> = None;
    for_each_admissible(pair, &bs, |beta_y, beta_z, eps| {
        let dim = dimension_formula(pair.r(), &bs, beta_y, beta_z, eps);
        let better = match &best {
            None => true,
            Some((best_dim, best_triple)) => {
                dim > *best_dim
                    || (dim == *best_dim
                        && (beta_y, beta_z, eps)
                            < (
                                best_triple.beta_y.as_slice(),
                                best_triple.beta_z.as_slice(),
                                best_triple.eps.as_slice(),
                            ))
            }
        };
        if better {
            best = Some((
                dim,
                AdmissibleTriple::new(beta_y.to_vec(), beta_z.to_vec(), eps.to_vec()),
            ));
        }
    });
    best.expect("every valid pair admits at least one admissible triple")
}

/// A counterexample to the dimension bound `D <= sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub pair: VanishingPair,
    pub triple: AdmissibleTriple,
    /// The stratum dimension of the triple.
    pub lhs: i64,
    /// The ramification sum of the pair.
    pub rhs: i64,
}

/// Why a pair failed the equivalence sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FailureReason {
    /// `max D = sigma` disagrees with connectedness.
    MaxDisagreesWithConnectivity,
    /// The constructed triple of a connected pair is not admissible.
    ConstructionNotAdmissible,
    /// The constructed triple is admissible but misses the maximum.
    ConstructionSuboptimal { achieved: i64 },
}

/// A pair on which the equivalence checks failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EquivalenceFailure {
    pub pair: VanishingPair,
    pub max_dimension: i64,
    pub sigma: i64,
    pub connected: bool,
    pub reason: FailureReason,
}

/// Result of a verification sweep over all pairs of one `(r, d)` cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub r: i64,
    pub d: i64,
    pub pairs_checked: u64,
    pub triples_checked: u64,
    pub violations: Vec<BoundViolation>,
    pub equivalence_failures: Vec<EquivalenceFailure>,
}

impl SweepReport {
    /// True when the sweep found no counterexamples.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.equivalence_failures.is_empty()
    }

    pub fn csv_header() -> &'static str {
        "r,d,pairsChecked,triplesChecked,violations,equivalenceFailures"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.r,
            self.d,
            self.pairs_checked,
            self.triples_checked,
            self.violations.len(),
            self.equivalence_failures.len()
        )
    }
}

/// Worker placement for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workers {
    /// Run on the calling thread.
    Sequential,
    /// Use the global rayon pool when built with the `parallel` feature,
    /// otherwise fall back to sequential.
    Default,
    /// Use a dedicated pool of this many threads (`parallel` feature only;
    /// falls back to sequential otherwise).
    Count(usize),
}

/// What a sweep checks and how it runs.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    /// Check `D <= sigma` for every admissible triple.
    pub upper_bound: bool,
    /// Check `max D = sigma  <=>  connected`, and that the constructed triple
    /// of each connected pair attains the maximum.
    pub equivalence: bool,
    pub workers: Workers,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            upper_bound: true,
            equivalence: true,
            workers: Workers::Default,
        }
    }
}

struct PairOutcome {
    triples: u64,
    violations: Vec<BoundViolation>,
    failures: Vec<EquivalenceFailure>,
}

fn check_pair(pair: &VanishingPair, config: &SweepConfig) -> PairOutcome {
    let bs = pair.b_sequences();
    let sigma = pair.ramification_sum();
    let r = pair.r();
    let mut triples = 0u64;
    let mut max_dim = i64::MIN;
    let mut violations = Vec::new();
    for_each_admissible(pair, &bs, |beta_y, beta_z, eps| {
        triples += 1;
        let dim = dimension_formula(r, &bs, beta_y, beta_z, eps);
        max_dim = max_dim.max(dim);
        if config.upper_bound && dim > sigma {
            violations.push(BoundViolation {
                pair: pair.clone(),
                triple: AdmissibleTriple::new(beta_y.to_vec(), beta_z.to_vec(), eps.to_vec()),
                lhs: dim,
                rhs: sigma,
            });
        }
    });
    debug_assert!(triples > 0);
    let mut failures = Vec::new();
    if config.equivalence {
        let connected = pair.is_connected();
        if (max_dim == sigma) != connected {
            failures.push(EquivalenceFailure {
                pair: pair.clone(),
                max_dimension: max_dim,
                sigma,
                connected,
                reason: FailureReason::MaxDisagreesWithConnectivity,
            });
        }
        if connected {
            let failure = match build_optimal_triple(pair) {
                Err(_) => Some(FailureReason::ConstructionNotAdmissible),
                Ok(t) => {
                    if !is_admissible_slices(pair, &bs, &t.beta_y, &t.beta_z, &t.eps) {
                        Some(FailureReason::ConstructionNotAdmissible)
                    } else {
                        let achieved = dimension_formula(r, &bs, &t.beta_y, &t.beta_z, &t.eps);
                        (achieved != sigma || achieved != max_dim)
                            .then_some(FailureReason::ConstructionSuboptimal { achieved })
                    }
                }
            };
            if let Some(reason) = failure {
                failures.push(EquivalenceFailure {
                    pair: pair.clone(),
                    max_dimension: max_dim,
                    sigma,
                    connected,
                    reason,
                });
            }
        }
    }
    PairOutcome {
        triples,
        violations,
        failures,
    }
}

#[cfg(feature = "parallel")]
fn map_pairs(
    pairs: &[VanishingPair],
    config: &SweepConfig,
    on_pair: Option<&(dyn Fn(u64, u64) + Sync)>,
) -> Vec<PairOutcome> {
    use rayon::prelude::*;
    use std::sync::atomic::{AtomicU64, Ordering};

    let total = pairs.len() as u64;
    let done = AtomicU64::new(0);
    let run_par = |pool_pairs: &[VanishingPair]| {
        pool_pairs
            .par_iter()
            .map(|pair| {
                let outcome = check_pair(pair, config);
                if let Some(tick) = on_pair {
                    tick(done.fetch_add(1, Ordering::Relaxed) + 1, total);
                }
                outcome
            })
            .collect()
    };
    match config.workers {
        Workers::Sequential => map_pairs_seq(pairs, config, on_pair),
        Workers::Default => run_par(pairs),
        Workers::Count(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run_par(pairs)),
            Err(_) => map_pairs_seq(pairs, config, on_pair),
        },
    }
}

#[cfg(not(feature = "parallel"))]
fn map_pairs(
    pairs: &[VanishingPair],
    config: &SweepConfig,
    on_pair: Option<&(dyn Fn(u64, u64) + Sync)>,
) -> Vec<PairOutcome> {
    map_pairs_seq(pairs, config, on_pair)
}

fn map_pairs_seq(
    pairs: &[VanishingPair],
    config: &SweepConfig,
    on_pair: Option<&(dyn Fn(u64, u64) + Sync)>,
) -> Vec<PairOutcome> {
    let total = pairs.len() as u64;
    pairs
        .iter()
        .enumerate()
        .map(|(idx, pair)| {
            let outcome = check_pair(pair, config);
            if let Some(tick) = on_pair {
                tick(idx as u64 + 1, total);
            }
            outcome
        })
        .collect()
}

/// Runs a verification sweep over every pair of the `(r, d)` cell,
/// reporting per-pair results merged in enumeration order. `on_pair`, when
/// given, is called after each pair with `(completed, total)`.
pub fn run_sweep(
    r: i64,
    d: i64,
    config: &SweepConfig,
    on_pair: Option<&(dyn Fn(u64, u64) + Sync)>,
) -> Result<SweepReport, EnumerationError> {
    let pairs: Vec<VanishingPair> = enumerate_pairs(r, d)?.collect();
    let outcomes = map_pairs(&pairs, config, on_pair);
    let mut report = SweepReport {
        r,
        d,
        pairs_checked: pairs.len() as u64,
        triples_checked: 0,
        violations: Vec::new(),
        equivalence_failures: Vec::new(),
    };
    for outcome in outcomes {
        report.triples_checked += outcome.triples;
        report.violations.extend(outcome.violations);
        report.equivalence_failures.extend(outcome.failures);
    }
    Ok(report)
}

/// Checks `D <= sigma` over every (pair, admissible triple) of the cell.
pub fn verify_upper_bound(r: i64, d: i64) -> Result<SweepReport, EnumerationError> {
    run_sweep(
        r,
        d,
        &SweepConfig {
            upper_bound: true,
            equivalence: false,
            workers: Workers::Default,
        },
        None,
    )
}

/// Sequential-path variant of [`verify_upper_bound`].
pub fn verify_upper_bound_seq(r: i64, d: i64) -> Result<SweepReport, EnumerationError> {
    run_sweep(
        r,
        d,
        &SweepConfig {
            upper_bound: true,
            equivalence: false,
            workers: Workers::Sequential,
        },
        None,
    )
}

/// Checks `max D = sigma <=> connected` over every pair of the cell, and
/// that the constructive optimum of each connected pair attains the maximum.
pub fn verify_equivalence(r: i64, d: i64) -> Result<SweepReport, EnumerationError> {
    run_sweep(
        r,
        d,
        &SweepConfig {
            upper_bound: false,
            equivalence: true,
            workers: Workers::Default,
        },
        None,
    )
}

/// Sequential-path variant of [`verify_equivalence`].
pub fn verify_equivalence_seq(r: i64, d: i64) -> Result<SweepReport, EnumerationError> {
    run_sweep(
        r,
        d,
        &SweepConfig {
            upper_bound: false,
            equivalence: true,
            workers: Workers::Sequential,
        },
        None,
    )
}

/// Runs both verification sweeps in one pass.
pub fn verify_all(r: i64, d: i64) -> Result<SweepReport, EnumerationError> {
    run_sweep(r, d, &SweepConfig::default(), None)
}

/// Sequential-path variant of [`verify_all`].
pub fn verify_all_seq(r: i64, d: i64) -> Result<SweepReport, EnumerationError> {
    run_sweep(
        r,
        d,
        &SweepConfig {
            workers: Workers::Sequential,
            ..SweepConfig::default()
        },
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triple::check_admissible;

    fn pair(r: i64, d: i64, a_y: &[i64], a_z: &[i64]) -> VanishingPair {
        VanishingPair::new(r, d, a_y.to_vec(), a_z.to_vec()).expect("valid pair")
    }

    #[test]
    fn pair_enumeration_for_rank_zero_degree_one() {
        let pairs: Vec<_> = enumerate_pairs(0, 1).unwrap().collect();
        let seqs: Vec<(&[i64], &[i64])> =
            pairs.iter().map(|p| (p.a_y(), p.a_z())).collect();
        assert_eq!(
            seqs,
            vec![
                (&[0][..], &[1][..]),
                (&[1][..], &[0][..]),
                (&[1][..], &[1][..]),
            ]
        );
    }

    #[test]
    fn pair_enumeration_counts() {
        assert_eq!(enumerate_pairs(1, 2).unwrap().count(), 6);
        // r = d leaves a single subset on each side.
        for d in 0..=5 {
            assert_eq!(enumerate_pairs(d, d).unwrap().count(), 1);
        }
    }

    #[test]
    fn pair_enumeration_rejects_bad_ranges() {
        assert_eq!(
            enumerate_pairs(3, 2).unwrap_err(),
            EnumerationError::InvalidRange { r: 3, d: 2 }
        );
        assert!(enumerate_pairs(-1, 2).is_err());
    }

    #[test]
    fn pair_enumeration_is_deterministic() {
        let a: Vec<_> = enumerate_pairs(2, 4).unwrap().collect();
        let b: Vec<_> = enumerate_pairs(2, 4).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn triple_enumeration_for_the_disconnected_pair() {
        let p = pair(0, 2, &[2], &[2]);
        let triples = enumerate_triples(&p);
        assert_eq!(triples.len(), 3);
        for t in &triples {
            assert!(check_admissible(&p, t).unwrap().is_empty());
            assert_eq!(t.eps, vec![0]);
        }
        let free: Vec<(i64, i64)> = triples.iter().map(|t| (t.beta_y[1], t.beta_z[1])).collect();
        assert_eq!(free, vec![(0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn triple_enumeration_for_degree_zero() {
        let p = pair(0, 0, &[0], &[0]);
        let triples = enumerate_triples(&p);
        assert_eq!(triples.len(), 1);
        assert_eq!(triples[0], AdmissibleTriple::new(vec![1], vec![1], vec![]));
    }

    #[test]
    fn triple_enumeration_contains_the_reference_triple() {
        let p = pair(1, 2, &[1, 2], &[1, 2]);
        let triples = enumerate_triples(&p);
        let reference = AdmissibleTriple::new(vec![2, 2, 0], vec![0, 2, 2], vec![1]);
        assert!(triples.contains(&reference));
    }

    #[test]
    fn triple_enumeration_is_deterministic() {
        for p in enumerate_pairs(2, 4).unwrap() {
            assert_eq!(enumerate_triples(&p), enumerate_triples(&p));
        }
    }

    #[test]
    fn max_dimension_examples() {
        let (max, argmax) = max_dimension(&pair(1, 2, &[1, 2], &[1, 2]));
        assert_eq!(max, 2);
        assert!(check_admissible(&pair(1, 2, &[1, 2], &[1, 2]), &argmax)
            .unwrap()
            .is_empty());

        let (max, _) = max_dimension(&pair(0, 2, &[2], &[2]));
        assert_eq!(max, 1);

        let (max, _) = max_dimension(&pair(1, 2, &[0, 1], &[1, 2]));
        assert_eq!(max, 0);
    }

    #[test]
    fn max_dimension_argmax_is_first_in_lexicographic_order() {
        for p in enumerate_pairs(1, 3).unwrap() {
            let (max, argmax) = max_dimension(&p);
            let first = enumerate_triples(&p)
                .into_iter()
                .find(|t| {
                    let bs = p.b_sequences();
                    dimension_formula(p.r(), &bs, &t.beta_y, &t.beta_z, &t.eps) == max
                })
                .unwrap();
            assert_eq!(argmax, first);
        }
    }

    #[test]
    fn upper_bound_sweep_is_clean_on_small_cells() {
        let report = verify_upper_bound(1, 2).unwrap();
        assert_eq!(report.pairs_checked, 6);
        assert!(report.is_clean());

        let report = verify_upper_bound(0, 0).unwrap();
        assert_eq!((report.pairs_checked, report.triples_checked), (1, 1));
        assert!(report.is_clean());

        assert!(verify_upper_bound(2, 4).unwrap().is_clean());
    }

    #[test]
    fn equivalence_sweep_is_clean_on_small_cells() {
        assert!(verify_equivalence(1, 2).unwrap().is_clean());
        assert!(verify_equivalence(0, 2).unwrap().is_clean());
        assert!(verify_equivalence(3, 3).unwrap().is_clean());
    }

    #[test]
    fn sweeps_reject_bad_ranges() {
        assert!(verify_upper_bound(2, 1).is_err());
        assert!(verify_equivalence(-1, 0).is_err());
    }

    #[test]
    fn sequential_and_default_sweeps_agree() {
        let a = verify_all(2, 4).unwrap();
        let b = verify_all_seq(2, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dedicated_worker_pools_agree_with_sequential() {
        let config = SweepConfig {
            workers: Workers::Count(2),
            ..SweepConfig::default()
        };
        let a = run_sweep(2, 4, &config, None).unwrap();
        let b = verify_all_seq(2, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn progress_callback_reaches_the_total() {
        use std::sync::atomic::{AtomicU64, Ordering};
        let seen = AtomicU64::new(0);
        let report = run_sweep(
            1,
            3,
            &SweepConfig::default(),
            Some(&|done, total| {
                if done == total {
                    seen.store(total, Ordering::Relaxed);
                }
            }),
        )
        .unwrap();
        assert_eq!(seen.load(Ordering::Relaxed), report.pairs_checked);
    }

    #[test]
    fn report_serialization_is_camel_case() {
        let report = verify_upper_bound(0, 0).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"pairsChecked\":1"));
        assert!(json.contains("\"equivalenceFailures\":[]"));
        assert_eq!(
            SweepReport::csv_header(),
            "r,d,pairsChecked,triplesChecked,violations,equivalenceFailures"
        );
        assert_eq!(report.csv_row(), "0,0,1,1,0,0");
    }
}
