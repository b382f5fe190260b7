//! Acceptance suite: exhaustive verification of the governing identities at
//! desk scale. Each test covers one criterion and prints a summary line;
//! run with `cargo test -p lls-core --test acceptance -- --nocapture`.

mod common;

use lls_core::{
    build_optimal_triple, check_admissible, classify, dimension, dimension_via_sync,
    enumerate_pairs, enumerate_triples, max_dimension, sync_map, verify_equivalence,
    verify_upper_bound, NonemptinessPolicy, VanishingPair,
};

use common::{cells, naive_triples_full_box, naive_triples_pinned_box};

/// The sweep range shared by criteria 1-5: d <= 6, r <= min(3, d).
fn sweep_cells() -> Vec<(i64, i64)> {
    cells(3, 6)
}

#[test]
fn criterion_1_upper_bound_holds_exhaustively() {
    let mut pairs = 0;
    let mut triples = 0;
    for (r, d) in sweep_cells() {
        let report = verify_upper_bound(r, d).expect("valid range");
        assert!(
            report.violations.is_empty(),
            "dimension bound violated at r={r} d={d}: {:?}",
            report.violations
        );
        pairs += report.pairs_checked;
        triples += report.triples_checked;
    }
    println!(
        "criterion 1 (upper bound D <= sigma): PASS — {} cells, {pairs} pairs, {triples} triples, 0 violations",
        sweep_cells().len()
    );
}

#[test]
fn criterion_2_equivalence_holds_exhaustively() {
    let mut pairs = 0;
    for (r, d) in sweep_cells() {
        let report = verify_equivalence(r, d).expect("valid range");
        assert!(
            report.equivalence_failures.is_empty(),
            "equivalence failed at r={r} d={d}: {:?}",
            report.equivalence_failures
        );
        pairs += report.pairs_checked;
    }
    println!(
        "criterion 2 (max D = sigma iff connected): PASS — {pairs} pairs, 0 failures"
    );
}

#[test]
fn criterion_3_construction_attains_the_bound() {
    let mut connected_pairs = 0;
    for (r, d) in sweep_cells() {
        for pair in enumerate_pairs(r, d).expect("valid range") {
            if !pair.is_connected() {
                continue;
            }
            connected_pairs += 1;
            let sigma = pair.ramification_sum();
            let triple = build_optimal_triple(&pair).expect("connected pair");
            let violations = check_admissible(&pair, &triple).expect("matching lengths");
            assert!(
                violations.is_empty(),
                "constructed triple not admissible for {pair:?}: {violations:?}"
            );
            let built = dimension(&pair, &triple).expect("admissible");
            let (brute, _) = max_dimension(&pair);
            assert_eq!(
                built, sigma,
                "constructed dimension misses sigma for {pair:?}"
            );
            assert_eq!(
                built, brute,
                "constructed dimension misses the brute-force maximum for {pair:?}"
            );
        }
    }
    println!(
        "criterion 3 (construction optimality): PASS — {connected_pairs} connected pairs, all attain D = sigma = max"
    );
}

#[test]
fn criterion_4_equality_characterization() {
    let mut checked = 0;
    let mut with_equality = 0;
    for (r, d) in sweep_cells() {
        for pair in enumerate_pairs(r, d).expect("valid range") {
            let sigma = pair.ramification_sum();
            for triple in enumerate_triples(&pair) {
                checked += 1;
                let dim = dimension(&pair, &triple).expect("admissible");
                let sync = sync_map(&pair, &triple).expect("admissible");
                let off_empty = sync.j_off.is_empty();
                let diag_ok = sync.j_diag.iter().all(|&j| {
                    triple.eps[j - 1] == 1
                        && sync.diag_preimage(j).into_iter().all(|i| {
                            pair.connected_at(i)
                                .expect("in range")
                                .witnesses
                                .contains(&(j as i64))
                        })
                });
                let equality = dim == sigma;
                if equality {
                    with_equality += 1;
                }
                assert_eq!(
                    equality,
                    off_empty && diag_ok,
                    "equality characterization failed for {pair:?} {triple:?}: \
                     dim={dim} sigma={sigma} off_empty={off_empty} diag_ok={diag_ok}"
                );
            }
        }
    }
    println!(
        "criterion 4 (equality characterization): PASS — {checked} triples, {with_equality} with D = sigma, biconditional exact"
    );
}

#[test]
fn criterion_5_index_synchronization() {
    let mut checked = 0;
    for (r, d) in sweep_cells() {
        for pair in enumerate_pairs(r, d).expect("valid range") {
            for triple in enumerate_triples(&pair) {
                checked += 1;
                let direct = dimension(&pair, &triple).expect("admissible");
                let via_sync = dimension_via_sync(&pair, &triple).expect("admissible");
                assert_eq!(
                    direct, via_sync,
                    "sync route disagrees for {pair:?} {triple:?}"
                );

                let sync = sync_map(&pair, &triple).expect("admissible");
                let r1 = r + 1;
                let du = d as usize;
                let mut covered = 0usize;
                for j in 1..du {
                    let expected = triple.beta_y[j] + triple.beta_z[j] - r1;
                    let actual = sync.diag_preimage(j).len() as i64;
                    assert_eq!(actual, expected, "diagonal preimage count at j={j}");
                    covered += actual as usize;
                }
                for j in 1..=du {
                    let expected = r1 - triple.beta_y[j] - triple.beta_z[j - 1];
                    let actual = sync.off_preimage(j).len() as i64;
                    assert_eq!(actual, expected, "off-diagonal preimage count at j={j}");
                    covered += actual as usize;
                }
                // The preimages partition the domain interval.
                let domain_len = (sync.i_high - sync.i_low + 1).max(0) as usize;
                assert_eq!(sync.psi.len(), domain_len);
                assert_eq!(covered, domain_len, "preimages must partition the domain");
            }
        }
    }
    println!(
        "criterion 5 (index synchronization): PASS — {checked} triples, sync dimension and preimage counts exact"
    );
}

#[test]
fn criterion_6_reference_example() {
    let pair = VanishingPair::new(1, 2, vec![1, 2], vec![1, 2]).unwrap();
    let report = classify(&pair, 0, NonemptinessPolicy::GenusZero).unwrap();
    assert!(report.connected);
    assert!(!report.refined);
    assert_eq!(report.sigma, 2);
    assert_eq!(report.rho, 2);
    assert_eq!(report.eh_dim, 0);
    assert_eq!(report.fiber_max, 2);
    assert!(report.open_subset);

    // Cross-check the numeric fields against the brute-force sweep.
    let (brute_max, _) = max_dimension(&pair);
    assert_eq!(report.fiber_max, brute_max);
    assert_eq!(report.sigma, pair.ramification_sum());
    let sweep = verify_upper_bound(1, 2).unwrap();
    assert!(sweep.is_clean());
    println!(
        "criterion 6 (reference example r=1 d=2): PASS — connected crude pair with open-subset verdict"
    );
}

#[test]
fn criterion_7_pruned_enumeration_matches_naive_filter() {
    let mut pairs = 0;
    for (r, d) in cells(3, 4) {
        for pair in enumerate_pairs(r, d).expect("valid range") {
            pairs += 1;
            let pruned = enumerate_triples(&pair);
            let naive = if d <= 3 {
                naive_triples_full_box(&pair)
            } else {
                naive_triples_pinned_box(&pair)
            };
            assert_eq!(
                pruned, naive,
                "pruned enumeration differs from the naive filter for {pair:?}"
            );
        }
    }
    println!(
        "criterion 7 (oracle equivalence): PASS — {pairs} pairs with d <= 4, pruned = naive box filter"
    );
}

#[test]
fn pinned_box_matches_full_box() {
    // Justifies using the endpoint-pinned filter as the naive oracle at d = 4.
    for (r, d) in cells(3, 3) {
        for pair in enumerate_pairs(r, d).expect("valid range") {
            assert_eq!(
                naive_triples_full_box(&pair),
                naive_triples_pinned_box(&pair),
                "pinning the forced endpoints changed the filter output for {pair:?}"
            );
        }
    }
}

#[test]
fn criterion_8_b_sequence_structure() {
    let mut pairs = 0;
    for d in 0..=8i64 {
        for r in 0..=d {
            for pair in enumerate_pairs(r, d).expect("valid range") {
                pairs += 1;
                let bs = pair.b_sequences();
                let (b_y, b_z) = (bs.b_y(), bs.b_z());
                let du = d as usize;
                assert_eq!(b_y[0], r + 1);
                assert_eq!(b_z[du], r + 1);
                for j in 0..du {
                    let expected = i64::from(pair.contains_y(j as i64));
                    assert_eq!(
                        b_y[j] - b_y[j + 1],
                        expected,
                        "(B1) fails at j={j} for {pair:?}"
                    );
                }
                for j in 1..=du {
                    let expected = i64::from(pair.contains_z(d - j as i64));
                    assert_eq!(
                        b_z[j] - b_z[j - 1],
                        expected,
                        "(B2) fails at j={j} for {pair:?}"
                    );
                }
            }
        }
    }
    println!(
        "criterion 8 (b-sequence structure): PASS — {pairs} pairs with d <= 8, (B1)/(B2) exact"
    );
}
