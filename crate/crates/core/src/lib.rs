//! Combinatorics of limit linear series on a two-component nodal curve.
//!
//! A point on the node is described by a pair of vanishing sequences
//! ([`VanishingPair`]): strictly increasing integer sequences `aY`, `aZ` of
//! length `r + 1` in `[0, d]` with `aY[i] + aZ[r-i] >= d`. The fiber of the
//! forgetful map over such a pair is stratified by triples
//! ([`AdmissibleTriple`]) subject to the conditions (C1)-(C6), each stratum
//! carrying an explicit dimension ([`dimension`]). This crate computes those
//! invariants, constructs the dimension-maximizing triple of a connected pair
//! ([`build_optimal_triple`]), classifies which strata meet an open subset of
//! the moduli space ([`classify`]), and exhaustively verifies the governing
//! identities over enumerable ranges ([`run_sweep`]).
//!
//! Everything is a pure function over immutable values. With the `parallel`
//! feature (default) verification sweeps fan out over rayon; without it they
//! run on a sequential fallback with identical output.

#![forbid(unsafe_code)]

mod classify;
mod construction;
mod enumeration;
mod error;
mod pair;
mod triple;

pub use classify::{
    brill_noether, classify, eh_stratum_dimension, NonemptinessPolicy, StratumReport,
};
pub use construction::{
    build_optimal_triple, build_trace, greatest_witness, ConstructionTrace, TraceSummary,
};
pub use enumeration::{
    enumerate_pairs, enumerate_triples, max_dimension, run_sweep, verify_all, verify_all_seq,
    verify_equivalence, verify_equivalence_seq, verify_upper_bound, verify_upper_bound_seq,
    BoundViolation, EquivalenceFailure, FailureReason, PairEnumerator, SweepConfig, SweepReport,
    Workers,
};
pub use error::{
    ClassifyError, ConstructionError, EnumerationError, PairError, Side, TripleError, TripleField,
};
pub use pair::{BSequences, ConnectivityWitness, VanishingPair, MAX_DEGREE};
pub use triple::{
    check_admissible, dimension, dimension_via_sync, sync_map, AdmissibleTriple, Condition,
    SyncData, Violation,
};
