//! Brute-force oracles shared by the integration suites. Everything here
//! recomputes results from the defining conditions, independently of the
//! library's search and pruning paths.

#![allow(dead_code)]

use std::collections::HashSet;

use lls_core::{check_admissible, AdmissibleTriple, VanishingPair};

/// All `(r, d)` cells with `d <= max_d` and `r <= min(max_r, d)`.
pub fn cells(max_r: i64, max_d: i64) -> Vec<(i64, i64)> {
    (0..=max_d)
        .flat_map(|d| (0..=d.min(max_r)).map(move |r| (r, d)))
        .collect()
}

/// Visits every point of the box `{0..=maxes[0]} x ... x {0..=maxes[n-1]}`.
pub fn for_each_box(maxes: &[i64], mut f: impl FnMut(&[i64])) {
    let mut cur = vec![0i64; maxes.len()];
    loop {
        f(&cur);
        let mut i = cur.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if cur[i] < maxes[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// The unpruned filter: every point of the full box
/// `[0, r+1]^(2d+2) x {0,1}^(d-1)` that passes `check_admissible`.
/// Exponential in `d`; keep to `d <= 3`.
pub fn naive_triples_full_box(pair: &VanishingPair) -> Vec<AdmissibleTriple> {
    let d = pair.d() as usize;
    let r1 = pair.r() + 1;
    let n_beta = 2 * (d + 1);
    let mut maxes = vec![r1; n_beta];
    maxes.extend(std::iter::repeat_n(1, d.saturating_sub(1)));
    let mut out = Vec::new();
    for_each_box(&maxes, |coords| {
        let t = AdmissibleTriple::new(
            coords[..d + 1].to_vec(),
            coords[d + 1..n_beta].to_vec(),
            coords[n_beta..].to_vec(),
        );
        if check_admissible(pair, &t).unwrap().is_empty() {
            out.push(t);
        }
    });
    out.sort_unstable();
    out
}

/// The same filter with the four (C6)-forced coordinates pinned to their
/// forced values, iterating only over `betaY[1..=d-1]`, `betaZ[1..=d-1]`,
/// and `eps`. Any other endpoint value fails `check_admissible` (which is
/// still applied in full here), so the output set equals the full box's;
/// `pinned_box_matches_full_box` in the acceptance suite checks that.
pub fn naive_triples_pinned_box(pair: &VanishingPair) -> Vec<AdmissibleTriple> {
    let d = pair.d() as usize;
    let r1 = pair.r() + 1;
    let forced_yd = i64::from(pair.a_z()[0] == 0);
    let forced_z0 = i64::from(pair.a_y()[0] == 0);
    let mut beta_y = vec![0i64; d + 1];
    let mut beta_z = vec![0i64; d + 1];
    beta_y[0] = r1;
    beta_z[d] = r1;
    if d == 0 {
        beta_y[0] = r1;
        beta_z[0] = r1;
    } else {
        beta_y[d] = forced_yd;
        beta_z[0] = forced_z0;
    }
    let free = d.saturating_sub(1);
    let mut maxes = vec![r1; 2 * free];
    maxes.extend(std::iter::repeat_n(1, free));
    let mut out = Vec::new();
    for_each_box(&maxes, |coords| {
        let mut beta_y = beta_y.clone();
        let mut beta_z = beta_z.clone();
        for j in 1..d {
            beta_y[j] = coords[j - 1];
            beta_z[j] = coords[free + j - 1];
        }
        let t = AdmissibleTriple::new(beta_y, beta_z, coords[2 * free..].to_vec());
        if check_admissible(pair, &t).unwrap().is_empty() {
            out.push(t);
        }
    });
    out.sort_unstable();
    out
}

/// Witness set of "connected at `i`" recomputed from the definition over the
/// whole candidate range `0..=d`, with hash-set membership.
pub fn witnesses_by_definition(pair: &VanishingPair, i: usize) -> Vec<i64> {
    let ys: HashSet<i64> = pair.a_y().iter().copied().collect();
    let zs: HashSet<i64> = pair.a_z().iter().copied().collect();
    let d = pair.d();
    let n = pair.a_y().len();
    let ay = pair.a_y()[i];
    let az = pair.a_z()[n - 1 - i];
    (0..=d)
        .filter(|&j| {
            d - az <= j
                && j <= ay
                && (j..=ay).all(|v| ys.contains(&v))
                && ((d - j)..=az).all(|v| zs.contains(&v))
        })
        .collect()
}
