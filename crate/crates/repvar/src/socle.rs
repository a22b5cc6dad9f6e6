//! Generic socle series for the modules with a fixed radical layering.
//!
//! Two independent routes are implemented and cross-checked by tests:
//!
//! * the layer recursion producing `S'_l`, `D_l` and the complements
//!   `C_l = S_l - S'_l` (the largest semisimple summand split off the l-th
//!   radical power), whose partial sums give the socles of the radical
//!   powers;
//! * the closed formula expressing the same socles as a componentwise
//!   supremum of the signed partial vectors built from `S` and the
//!   transposed adjacency matrix.
//!
//! Both are valid over an arbitrary quiver, cyclic or not; only the
//! component classifier restricts to acyclic quivers.

use crate::error::{Error, Result};
use crate::layers::{DimVector, SemisimpleSequence};
use crate::quiver::Quiver;

/// Working data of the socle recursion, all indexed by layer `l = 0..=L`.
#[derive(Debug, Clone)]
pub struct SocleWork {
    /// `S'_l`: the part of layer `l` absorbed into an essential extension.
    pub sprime: Vec<DimVector>,
    /// `D_l`: the excess carried down by the recursion.
    pub d: Vec<DimVector>,
    /// `C_l = S_l - S'_l`: the largest semisimple summand of the l-th
    /// radical power of a generic module.
    pub c: Vec<DimVector>,
    /// Signed partial vectors; entry `l` holds
    /// `sum_{l <= k <= L} (S_k - S_{k+1} * A)` and may have negative entries.
    pub partials: Vec<DimVector>,
    /// Entry `m` is the socle dimension vector of the `(L - m)`-th radical
    /// power of a generic module, i.e. `C_L + C_{L-1} + ... + C_{L-m}`.
    pub power_socles: Vec<DimVector>,
}

/// Dimension vector of the first socle layer above a semisimple `T` inside
/// its injective envelope: `T * A` with `A` the transposed adjacency matrix.
pub fn e1_dim(t: &DimVector, q: &Quiver) -> DimVector {
    q.transposed_adjacency().apply(t)
}

/// The signed partial vectors of the sup formula, entry `l` holding
/// `sum_{l <= k <= L} (S_k - S_{k+1} * A)` with the convention `S_{L+1} = 0`.
pub fn partial_vectors(s: &SemisimpleSequence, q: &Quiver) -> Vec<DimVector> {
    let a = q.transposed_adjacency();
    let top = s.truncation();
    let n = s.vertex_count();
    let mut out = vec![DimVector::zeros(n); top + 1];
    out[top] = s.layer(top).clone();
    for l in (0..top).rev() {
        let step = s.layer(l).sub(&a.apply(s.layer(l + 1)));
        out[l] = out[l + 1].add(&step);
    }
    out
}

/// The generic socle of the modules with radical layering `s`: the
/// componentwise supremum of all partial vectors. Nonnegative because the
/// top layer itself is one of the contenders.
pub fn generic_socle(s: &SemisimpleSequence, q: &Quiver) -> Result<DimVector> {
    ensure_realizable(s, q)?;
    Ok(socle_by_sup(s, q))
}

fn socle_by_sup(s: &SemisimpleSequence, q: &Quiver) -> DimVector {
    let partials = partial_vectors(s, q);
    let mut acc = partials[partials.len() - 1].clone();
    for p in partials.iter().rev().skip(1) {
        acc = acc.sup(p).expect("partials share one length");
    }
    acc
}

/// Runs the layer recursion from `l = L` down to `0` and packages the
/// resulting complements and bookkeeping vectors.
pub fn c_layers(s: &SemisimpleSequence, q: &Quiver) -> Result<SocleWork> {
    ensure_realizable(s, q)?;
    Ok(c_layers_unchecked(s, q))
}

fn c_layers_unchecked(s: &SemisimpleSequence, q: &Quiver) -> SocleWork {
    let top = s.truncation();
    let n = s.vertex_count();
    let mut sprime = vec![DimVector::zeros(n); top + 1];
    let mut d = vec![DimVector::zeros(n); top + 1];
    for l in (0..top).rev() {
        let carried = e1_dim(s.layer(l + 1), q).add(&d[l + 1]);
        sprime[l] = s.layer(l).inf(&carried).expect("same length");
        d[l] = carried.sub(&sprime[l]);
    }
    let c: Vec<DimVector> = (0..=top).map(|l| s.layer(l).sub(&sprime[l])).collect();

    let mut power_socles = Vec::with_capacity(top + 1);
    let mut acc = DimVector::zeros(n);
    for m in 0..=top {
        acc = acc.add(&c[top - m]);
        power_socles.push(acc.clone());
    }

    SocleWork { sprime, d, c, partials: partial_vectors(s, q), power_socles }
}

/// The full generic socle layering `(S*_0, ..., S*_L)` of the modules with
/// radical layering `s`.
///
/// Layer `k` of the result is the socle of the k-fold socle quotient: the
/// recursion peels off `S*_0 = sum_l C_l`, passes to the quotient layering
/// `(S_l - C_l)_{l < L}` re-padded with a zero top layer, and repeats until
/// nothing is left.
pub fn generic_socle_layering(
    s: &SemisimpleSequence,
    q: &Quiver,
) -> Result<SemisimpleSequence> {
    ensure_realizable(s, q)?;
    let top = s.truncation();
    let n = s.vertex_count();
    let mut out: Vec<DimVector> = Vec::with_capacity(top + 1);
    let mut current = s.clone();
    while !current.is_zero() {
        if out.len() > top {
            return Err(Error::Internal(
                "socle recursion did not terminate within the truncation level".into(),
            ));
        }
        let work = c_layers_unchecked(&current, q);
        out.push(work.power_socles[top].clone());
        let mut next: Vec<DimVector> = (0..top).map(|l| current.layer(l).sub(&work.c[l])).collect();
        next.push(DimVector::zeros(n));
        let next = SemisimpleSequence::new(next).expect("layer lengths preserved");
        if !next.is_realizable(q) {
            // The socle quotient of a realizable layering must stay
            // realizable; anything else means the recursion is unsound here.
            return Err(Error::Internal(format!(
                "socle quotient of {current} is not realizable"
            )));
        }
        current = next;
    }
    while out.len() <= top {
        out.push(DimVector::zeros(n));
    }
    SemisimpleSequence::new(out)
}

fn ensure_realizable(s: &SemisimpleSequence, q: &Quiver) -> Result<()> {
    if s.vertex_count() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            found: s.vertex_count(),
        });
    }
    if !s.is_realizable(q) {
        return Err(Error::NotRealizable);
    }
    Ok(())
}
