//! Vanishing-sequence pairs and the invariants derived directly from them.

use serde::{Deserialize, Serialize};

use crate::error::{PairError, Side};

/// Largest degree accepted by [`VanishingPair::new`]. All algorithms here are
/// polynomial in `d` but some are quadratic; this cap keeps them tractable.
pub const MAX_DEGREE: i64 = 1_000_000;

/// A pair of vanishing sequences of rank `r` and degree `d` at the node of a
/// two-component curve.
///
/// A validated pair satisfies the defining conditions
///
/// * (A1) `0 <= aY[0] < aY[1] < ... < aY[r] <= d`,
/// * (A2) `0 <= aZ[0] < aZ[1] < ... < aZ[r] <= d`,
/// * (A3) `aY[i] + aZ[r-i] >= d` for every `i`.
///
/// The pair is *refined* when (A3) holds with equality everywhere and *crude*
/// otherwise. Values are immutable after construction, so a pair can be shared
/// freely across threads.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct VanishingPair {
    r: i64,
    d: i64,
    #[serde(rename = "aY")]
    a_y: Vec<i64>,
    #[serde(rename = "aZ")]
    a_z: Vec<i64>,
}

/// Unvalidated wire form of a pair; `VanishingPair` deserializes through this.
#[derive(Deserialize)]
struct RawPair {
    r: i64,
    d: i64,
    #[serde(rename = "aY")]
    a_y: Vec<i64>,
    #[serde(rename = "aZ")]
    a_z: Vec<i64>,
}

impl TryFrom<RawPair> for VanishingPair {
    type Error = PairError;

    fn try_from(raw: RawPair) -> Result<Self, PairError> {
        VanishingPair::new(raw.r, raw.d, raw.a_y, raw.a_z)
    }
}

impl VanishingPair {
    /// Validates `(r, d, aY, aZ)` against (A1)-(A3) and returns the pair.
    pub fn new(r: i64, d: i64, a_y: Vec<i64>, a_z: Vec<i64>) -> Result<Self, PairError> {
        if r < 0 || d < 0 || r > d {
            return Err(PairError::InvalidRank { r, d });
        }
        if d > MAX_DEGREE {
            return Err(PairError::DegreeTooLarge { d, max: MAX_DEGREE });
        }
        let expected = (r + 1) as usize;
        for (side, seq) in [(Side::Y, &a_y), (Side::Z, &a_z)] {
            if seq.len() != expected {
                return Err(PairError::LengthMismatch {
                    side,
                    expected,
                    actual: seq.len(),
                });
            }
            for (index, &v) in seq.iter().enumerate() {
                if v < 0 || v > d {
                    return Err(PairError::OutOfRange { side, index });
                }
                if index > 0 && seq[index - 1] >= v {
                    return Err(PairError::NotStrictlyIncreasing { side, index });
                }
            }
        }
        for i in 0..expected {
            if a_y[i] + a_z[expected - 1 - i] < d {
                return Err(PairError::A3Violation { i });
            }
        }
        Ok(Self { r, d, a_y, a_z })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn a_y(&self) -> &[i64] {
        &self.a_y
    }

    pub fn a_z(&self) -> &[i64] {
        &self.a_z
    }

    /// Whether `v` occurs in `aY`.
    pub fn contains_y(&self, v: i64) -> bool {
        self.a_y.binary_search(&v).is_ok()
    }

    /// Whether `v` occurs in `aZ`.
    pub fn contains_z(&self, v: i64) -> bool {
        self.a_z.binary_search(&v).is_ok()
    }

    /// The counting sequences `bY[j] = #{i : aY[i] >= j}` and
    /// `bZ[j] = #{i : aZ[i] >= d - j}` for `j = 0..=d`.
    pub fn b_sequences(&self) -> BSequences {
        let n = (self.d + 1) as usize;
        let count_ge = |seq: &[i64], bound: i64| (seq.len() - seq.partition_point(|&a| a < bound)) as i64;
        let b_y = (0..n as i64).map(|j| count_ge(&self.a_y, j)).collect();
        let b_z = (0..n as i64).map(|j| count_ge(&self.a_z, self.d - j)).collect();
        BSequences { b_y, b_z }
    }

    /// The ramification sum `sigma = sum_i (aY[i] + aZ[r-i] - d)`, the total
    /// excess of the pair over refinedness. Zero exactly for refined pairs.
    pub fn ramification_sum(&self) -> i64 {
        let n = self.a_y.len();
        (0..n).map(|i| self.a_y[i] + self.a_z[n - 1 - i] - self.d).sum()
    }

    /// True when equality holds in (A3) for every `i`.
    pub fn is_refined(&self) -> bool {
        let n = self.a_y.len();
        (0..n).all(|i| self.a_y[i] + self.a_z[n - 1 - i] == self.d)
    }

    /// All witnesses `j` at which the pair is connected at `i`.
    ///
    /// A witness is a `j` with `d - aZ[r-i] <= j <= aY[i]` such that every
    /// integer in `[j, aY[i]]` occurs in `aY` and every integer in
    /// `[d-j, aZ[r-i]]` occurs in `aZ` (both intervals inclusive). Each
    /// candidate `j` is checked directly against this definition; no interval
    /// structure of the witness set is assumed.
    pub fn connected_at(&self, i: usize) -> Result<ConnectivityWitness, PairError> {
        if i >= self.a_y.len() {
            return Err(PairError::IndexOutOfRange { i, r: self.r });
        }
        let ay_i = self.a_y[i];
        let az_ri = self.a_z[self.a_y.len() - 1 - i];
        let witnesses = ((self.d - az_ri)..=ay_i)
            .filter(|&j| {
                (j..=ay_i).all(|v| self.contains_y(v))
                    && ((self.d - j)..=az_ri).all(|v| self.contains_z(v))
            })
            .collect();
        Ok(ConnectivityWitness { i, witnesses })
    }

    /// True when the pair is connected at every `i` in `0..=r`.
    pub fn is_connected(&self) -> bool {
        (0..self.a_y.len()).all(|i| {
            !self
                .connected_at(i)
                .expect("index in range")
                .witnesses
                .is_empty()
        })
    }
}

/// The derived counting sequences of a pair, both of length `d + 1`.
///
/// They step down/up by exactly one across members of the vanishing
/// sequences:
///
/// * (B1) `bY[j] - bY[j+1]` is `1` if `j` occurs in `aY`, else `0`;
/// * (B2) `bZ[j] - bZ[j-1]` is `1` if `d - j` occurs in `aZ`, else `0`;
///
/// with `bY[0] = bZ[d] = r + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSequences {
    b_y: Vec<i64>,
    b_z: Vec<i64>,
}

impl BSequences {
    pub fn b_y(&self) -> &[i64] {
        &self.b_y
    }

    pub fn b_z(&self) -> &[i64] {
        &self.b_z
    }
}

/// The witness set of "connected at `i`" for one index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityWitness {
    pub i: usize,
    /// All witnesses in ascending order; empty when the pair is not connected
    /// at `i`.
    pub witnesses: Vec<i64>,
}
