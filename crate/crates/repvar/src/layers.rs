//! Dimension vectors, semisimple sequences, the dominance partial order, the
//! realizability criterion, and pruned enumeration of all realizable
//! sequences with a given dimension vector.
//!
//! A semisimple module is identified with its dimension vector. A semisimple
//! sequence is a list of exactly `L + 1` layers; trailing zero layers are
//! kept so that all sequences of one problem instance share a length.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// A vector of per-vertex multiplicities. Entries are signed so the same
/// type can carry intermediate differences (which may dip below zero);
/// vectors built from input are validated to be nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Result<DimVector> {
        if entries.iter().any(|&e| e < 0) {
            return Err(Error::InvalidInput("dimension vector entries must be nonnegative".into()));
        }
        Ok(DimVector(entries))
    }

    pub fn zeros(n: usize) -> DimVector {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> DimVector {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Total dimension (sum of entries).
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn leq(&self, other: &DimVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn sup(&self, other: &DimVector) -> Result<DimVector> {
        self.check_len(other)?;
        Ok(DimVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect()))
    }

    pub fn inf(&self, other: &DimVector) -> Result<DimVector> {
        self.check_len(other)?;
        Ok(DimVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect()))
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        debug_assert_eq!(self.len(), other.len());
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DimVector) -> DimVector {
        debug_assert_eq!(self.len(), other.len());
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Componentwise maximum with the zero vector.
    pub fn clamp_nonnegative(&self) -> DimVector {
        DimVector(self.0.iter().map(|&e| e.max(0)).collect())
    }

    fn check_len(&self, other: &DimVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    /// Semisimple notation, e.g. `S_2 + S_9^10`; the zero vector prints `0`.
    pub fn simple_notation(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(i, &m)| if m == 1 { format!("S_{}", i + 1) } else { format!("S_{}^{}", i + 1, m) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl From<Vec<i64>> for DimVector {
    fn from(v: Vec<i64>) -> Self {
        DimVector(v)
    }
}

impl Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// A sequence `(S_0, ..., S_L)` of semisimple layers, stored at full length
/// with explicit zero layers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SemisimpleSequence {
    layers: Vec<DimVector>,
}

impl SemisimpleSequence {
    pub fn new(layers: Vec<DimVector>) -> Result<SemisimpleSequence> {
        if layers.is_empty() {
            return Err(Error::InvalidInput("semisimple sequence needs at least one layer".into()));
        }
        let n = layers[0].len();
        for l in &layers {
            if l.len() != n {
                return Err(Error::LengthMismatch { expected: n, found: l.len() });
            }
        }
        Ok(SemisimpleSequence { layers })
    }

    pub fn zero(n: usize, truncation: usize) -> SemisimpleSequence {
        SemisimpleSequence { layers: vec![DimVector::zeros(n); truncation + 1] }
    }

    /// Parses a JSON array of arrays, layer 0 first, entries nonnegative.
    pub fn parse(text: &str) -> Result<SemisimpleSequence> {
        let raw: Vec<Vec<i64>> = serde_json::from_str(text)?;
        let layers = raw
            .into_iter()
            .map(DimVector::new)
            .collect::<Result<Vec<_>>>()?;
        SemisimpleSequence::new(layers)
    }

    /// Number of layers, `L + 1`.
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The truncation level `L`.
    pub fn truncation(&self) -> usize {
        self.layers.len() - 1
    }

    /// Number of vertices each layer spans.
    pub fn vertex_count(&self) -> usize {
        self.layers[0].len()
    }

    pub fn layer(&self, l: usize) -> &DimVector {
        &self.layers[l]
    }

    pub fn layers(&self) -> &[DimVector] {
        &self.layers
    }

    /// The dimension vector of the sequence: the sum of all layers.
    pub fn total(&self) -> DimVector {
        let mut acc = DimVector::zeros(self.vertex_count());
        for l in &self.layers {
            acc = acc.add(l);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(|l| l.is_zero())
    }

    fn check_comparable(&self, other: &SemisimpleSequence) -> Result<()> {
        if self.len() != other.len() || self.vertex_count() != other.vertex_count() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        if self.total() != other.total() {
            return Err(Error::TotalMismatch);
        }
        Ok(())
    }

    /// Dominance order: `self <= other` iff every prefix sum of `self` is
    /// componentwise contained in the matching prefix sum of `other`.
    /// Comparing sequences with different totals is an error.
    pub fn dominance_leq(&self, other: &SemisimpleSequence) -> Result<bool> {
        self.check_comparable(other)?;
        Ok(self.dominance_leq_unchecked(other))
    }

    pub(crate) fn dominance_leq_unchecked(&self, other: &SemisimpleSequence) -> bool {
        let n = self.vertex_count();
        let mut acc_self = vec![0i64; n];
        let mut acc_other = vec![0i64; n];
        for (a, b) in self.layers.iter().zip(&other.layers) {
            for i in 0..n {
                acc_self[i] += a[i];
                acc_other[i] += b[i];
                if acc_self[i] > acc_other[i] {
                    return false;
                }
            }
        }
        true
    }

    /// Realizability criterion over a truncated path algebra:
    /// `S_{l+1} <= S_l * B` componentwise for all `l`.
    pub fn is_realizable(&self, q: &Quiver) -> bool {
        let b = q.adjacency();
        self.layers.windows(2).all(|w| w[1].leq(&b.apply(&w[0])))
    }

    /// Flattened layer entries, the sort key for deterministic output.
    pub fn flatten(&self) -> Vec<i64> {
        self.layers.iter().flat_map(|l| l.iter().copied()).collect()
    }
}

impl fmt::Display for SemisimpleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.layers.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", l.simple_notation())?;
        }
        write!(f, ")")
    }
}

/// A radical layering together with its generic socle layering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayeredPair {
    pub rad: SemisimpleSequence,
    pub soc: SemisimpleSequence,
}

impl LayeredPair {
    /// Componentwise dominance on both coordinates.
    pub fn pair_leq(&self, other: &LayeredPair) -> Result<bool> {
        Ok(self.rad.dominance_leq(&other.rad)? && self.soc.dominance_leq(&other.soc)?)
    }
}

/// Iterator over all realizable semisimple sequences with total `d` and
/// `L + 1` layers, in lexicographic order on the flattened layer vectors.
///
/// The search fixes `S_0, S_1, ...` depth first. A branch with remaining
/// mass `r` after choosing `S_l` survives only if
/// `r <= S_l*B + S_l*B^2 + ... + S_l*B^(L-l)`, the iterated capacity bound
/// implied by the realizability criterion.
pub struct RealizableSequences<'q> {
    quiver: &'q Quiver,
    truncation: usize,
    frames: Vec<Frame>,
    done: bool,
}

struct Frame {
    /// Candidate for this layer; `None` before the first candidate is set.
    value: Option<DimVector>,
    /// Componentwise upper bound for candidates at this layer.
    upper: DimVector,
    /// Mass still to distribute before this layer is chosen.
    remaining: DimVector,
}

impl<'q> RealizableSequences<'q> {
    pub fn new(quiver: &'q Quiver, d: &DimVector, truncation: usize) -> RealizableSequences<'q> {
        assert_eq!(d.len(), quiver.vertex_count(), "dimension vector length mismatch");
        let frames = vec![Frame { value: None, upper: d.clone(), remaining: d.clone() }];
        RealizableSequences { quiver, truncation, frames, done: false }
    }

    /// Remaining capacity reachable from `base` within `steps` further layers.
    fn capacity_ok(&self, base: &DimVector, remaining: &DimVector, steps: usize) -> bool {
        let b = self.quiver.adjacency();
        let mut reach = base.clone();
        let mut cap = DimVector::zeros(base.len());
        for _ in 0..steps {
            reach = b.apply(&reach);
            cap = cap.add(&reach);
        }
        remaining.leq(&cap)
    }

    fn current_sequence(&self) -> SemisimpleSequence {
        let layers = self
            .frames
            .iter()
            .map(|f| f.value.clone().expect("all frames filled"))
            .collect();
        SemisimpleSequence::new(layers).expect("frames share one length")
    }
}

/// Advances `v` to the lexicographically next vector `<= upper`; returns
/// false on overflow. `None` starts at the all-zero vector.
fn next_candidate(value: &mut Option<DimVector>, upper: &DimVector) -> bool {
    match value {
        None => {
            *value = Some(DimVector::zeros(upper.len()));
            true
        }
        Some(v) => {
            let mut raw: Vec<i64> = v.iter().copied().collect();
            for i in (0..raw.len()).rev() {
                if raw[i] < upper[i] {
                    raw[i] += 1;
                    for e in raw.iter_mut().skip(i + 1) {
                        *e = 0;
                    }
                    *value = Some(DimVector::from(raw));
                    return true;
                }
            }
            false
        }
    }
}

impl Iterator for RealizableSequences<'_> {
    type Item = SemisimpleSequence;

    fn next(&mut self) -> Option<SemisimpleSequence> {
        if self.done {
            return None;
        }
        let b = self.quiver.adjacency();
        loop {
            let depth = self.frames.len() - 1;
            let last_layer = depth == self.truncation;

            let advanced = {
                let frame = self.frames.last_mut().expect("stack never empty");
                if last_layer {
                    // The final layer must absorb the remainder exactly.
                    if frame.value.is_none() && frame.remaining.leq(&frame.upper) {
                        frame.value = Some(frame.remaining.clone());
                        true
                    } else {
                        false
                    }
                } else {
                    let upper = frame.upper.clone();
                    next_candidate(&mut frame.value, &upper)
                }
            };

            if !advanced {
                self.frames.pop();
                if self.frames.is_empty() {
                    self.done = true;
                    return None;
                }
                continue;
            }

            if last_layer {
                return Some(self.current_sequence());
            }

            let frame = self.frames.last().expect("stack never empty");
            let value = frame.value.clone().expect("just advanced");
            let rest = frame.remaining.sub(&value);
            if !self.capacity_ok(&value, &rest, self.truncation - depth) {
                continue;
            }
            let upper = rest.inf(&b.apply(&value)).expect("same length");
            self.frames.push(Frame { value: None, upper, remaining: rest });
        }
    }
}

/// Componentwise maximum of two dimension vectors.
pub fn sup(u: &DimVector, v: &DimVector) -> Result<DimVector> {
    u.sup(v)
}

/// Componentwise minimum of two dimension vectors.
pub fn inf(u: &DimVector, v: &DimVector) -> Result<DimVector> {
    u.inf(v)
}

/// All realizable sequences with total `d`, lazily.
pub fn enumerate_realizable<'q>(
    q: &'q Quiver,
    d: &DimVector,
    truncation: usize,
) -> RealizableSequences<'q> {
    RealizableSequences::new(q, d, truncation)
}
