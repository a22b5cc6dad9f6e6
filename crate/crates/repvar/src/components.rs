//! The component classifier: over an acyclic quiver, the irreducible
//! components of the module variety for a dimension vector `d` correspond to
//! the minimal pairs (radical layering, generic socle layering) over all
//! realizable layerings with total `d`. Each component is reported with a
//! generic skeleton, its generic minimal projective presentation, the
//! largest generic semisimple summand, and a randomized generic endomorphism
//! dimension.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layers::{enumerate_realizable, DimVector, LayeredPair, SemisimpleSequence};
use crate::quiver::Quiver;
use crate::repcalc::Representation;
use crate::skeleta::{build_presentation, first_skeleton, GenericPresentation, Skeleton};
use crate::socle::{c_layers, generic_socle_layering};

/// Knobs for the randomized part of classification. All randomness is
/// derived from `seed`, so identical inputs give identical output.
#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub trials: usize,
    pub prime: u64,
    pub seed: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            trials: crate::DEFAULT_TRIALS,
            prime: crate::DEFAULT_PRIME,
            seed: crate::DEFAULT_SEED,
        }
    }
}

/// One irreducible component with its generic data.
#[derive(Debug, Clone)]
pub struct Component {
    /// Generic radical layering of the component.
    pub rad: SemisimpleSequence,
    /// Generic socle layering.
    pub soc: SemisimpleSequence,
    /// A generic skeleton (the lexicographically first one).
    pub skeleton: Skeleton,
    /// Generic minimal projective presentation built on that skeleton.
    pub presentation: GenericPresentation,
    /// Largest semisimple module generically split off as a direct summand.
    pub c0: DimVector,
    /// Generic endomorphism dimension (minimum nullity over the trials).
    pub endo_dim: usize,
    /// True exactly when `endo_dim == 1`.
    pub generically_indecomposable: bool,
}

/// Generic top of the modules with dimension vector `d`:
/// `sup{0, d - d * B}`.
pub fn generic_top(d: &DimVector, q: &Quiver) -> DimVector {
    let b = q.adjacency();
    d.sub(&b.apply(d)).clamp_nonnegative()
}

/// Generic radical layering in the hereditary case (`L` = maximal path
/// length): peel off generic tops until the dimension vector is exhausted.
/// `truncation` only pads the result; it must be at least the maximal path
/// length for the greedy recursion to be valid.
pub fn hereditary_generic_layering(q: &Quiver, d: &DimVector) -> Result<SemisimpleSequence> {
    hereditary_layering_padded(q, d, None)
}

fn hereditary_layering_padded(
    q: &Quiver,
    d: &DimVector,
    pad_to: Option<usize>,
) -> Result<SemisimpleSequence> {
    if !q.is_acyclic() {
        return Err(Error::AcyclicRequired);
    }
    check_dim(q, d)?;
    let maxlen = q.max_path_length().expect("acyclic");
    let truncation = pad_to.unwrap_or(maxlen).max(maxlen);
    let mut layers = Vec::with_capacity(truncation + 1);
    let mut rest = d.clone();
    for _ in 0..=truncation {
        let t = generic_top(&rest, q);
        rest = rest.sub(&t);
        layers.push(t);
    }
    if !rest.is_zero() {
        return Err(Error::Internal(format!(
            "generic-top recursion left {rest} unassigned"
        )));
    }
    SemisimpleSequence::new(layers)
}

/// One (radical layering, generic socle layering) pair per realizable
/// sequence with total `d`, in enumeration order.
pub fn rad_soc_pairs(q: &Quiver, d: &DimVector, truncation: usize) -> Result<Vec<LayeredPair>> {
    check_dim(q, d)?;
    enumerate_realizable(q, d, truncation)
        .map(|rad| {
            let soc = generic_socle_layering(&rad, q)?;
            Ok(LayeredPair { rad, soc })
        })
        .collect()
}

/// The pairs minimal under componentwise dominance, in input order. All
/// pairs must share one dimension vector.
pub fn minimal_pairs(pairs: &[LayeredPair]) -> Result<Vec<LayeredPair>> {
    if let Some(first) = pairs.first() {
        let total = first.rad.total();
        for p in pairs {
            if p.rad.total() != total || p.soc.total() != total {
                return Err(Error::TotalMismatch);
            }
        }
    }
    let mut keep = Vec::new();
    'outer: for (i, p) in pairs.iter().enumerate() {
        for (j, candidate) in pairs.iter().enumerate() {
            if i != j
                && candidate.rad.dominance_leq_unchecked(&p.rad)
                && candidate.soc.dominance_leq_unchecked(&p.soc)
            {
                continue 'outer;
            }
        }
        keep.push(p.clone());
    }
    Ok(keep)
}

/// Classifies the irreducible components of the module variety for `d` at
/// truncation level `truncation`. Requires an acyclic quiver.
///
/// When the truncation level reaches the maximal path length the algebra is
/// hereditary, the variety is a single affine space, and the one component
/// comes straight from the generic-top recursion; otherwise all realizable
/// layerings are enumerated and the minimal pairs extracted.
pub fn classify(
    q: &Quiver,
    d: &DimVector,
    truncation: usize,
    opts: &ClassifyOptions,
) -> Result<Vec<Component>> {
    if !q.is_acyclic() {
        return Err(Error::AcyclicRequired);
    }
    check_dim(q, d)?;
    if opts.trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }

    let maxlen = q.max_path_length().expect("acyclic");
    let minimal = if truncation >= maxlen {
        let rad = hereditary_layering_padded(q, d, Some(truncation))?;
        let soc = generic_socle_layering(&rad, q)?;
        vec![LayeredPair { rad, soc }]
    } else {
        minimal_pairs(&rad_soc_pairs(q, d, truncation)?)?
    };

    let mut sorted = minimal;
    sorted.sort_by_key(|p| p.rad.flatten());

    sorted
        .into_iter()
        .enumerate()
        .map(|(idx, pair)| enrich(q, pair, idx as u64, opts))
        .collect()
}

fn enrich(q: &Quiver, pair: LayeredPair, idx: u64, opts: &ClassifyOptions) -> Result<Component> {
    let skeleton = first_skeleton(&pair.rad, q)?;
    let presentation = build_presentation(&skeleton, q);
    let c0 = c_layers(&pair.rad, q)?.c[0].clone();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(idx + 1);
    let mut endo_dim = usize::MAX;
    for _ in 0..opts.trials {
        let rep = instantiate_generically(q, &presentation, &pair.rad, &mut rng, opts.prime)?;
        endo_dim = endo_dim.min(rep.endo_dim(q));
    }

    Ok(Component {
        generically_indecomposable: endo_dim == 1,
        rad: pair.rad,
        soc: pair.soc,
        skeleton,
        presentation,
        c0,
        endo_dim,
    })
}

/// Generic endomorphism dimension of the modules with radical layering `s`:
/// instantiate a generic presentation `opts.trials` times and keep the
/// smallest nullity observed.
pub fn generic_endo_dim(
    q: &Quiver,
    s: &SemisimpleSequence,
    opts: &ClassifyOptions,
) -> Result<usize> {
    if opts.trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    let skeleton = first_skeleton(s, q)?;
    let presentation = build_presentation(&skeleton, q);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut endo = usize::MAX;
    for _ in 0..opts.trials {
        let rep = instantiate_generically(q, &presentation, s, &mut rng, opts.prime)?;
        endo = endo.min(rep.endo_dim(q));
    }
    Ok(endo)
}

/// Draws random nonzero scalars and instantiates, retrying a couple of times
/// if the instantiation fails to land in the expected layering. Persistent
/// failure indicates a bug, not bad luck.
pub fn instantiate_generically(
    q: &Quiver,
    presentation: &GenericPresentation,
    rad: &SemisimpleSequence,
    rng: &mut ChaCha8Rng,
    prime: u64,
) -> Result<Representation> {
    for _ in 0..3 {
        let scalars: Vec<u64> =
            (0..presentation.scalar_count()).map(|_| rng.gen_range(1..prime)).collect();
        let rep = presentation.instantiate(q, &scalars, prime)?;
        if rep.radical_layering(q, rad.truncation())? == *rad {
            return Ok(rep);
        }
    }
    Err(Error::Internal(
        "instantiation repeatedly failed to reproduce its radical layering".into(),
    ))
}

fn check_dim(q: &Quiver, d: &DimVector) -> Result<()> {
    if d.len() != q.vertex_count() {
        return Err(Error::LengthMismatch { expected: q.vertex_count(), found: d.len() });
    }
    if !d.is_nonnegative() {
        return Err(Error::InvalidInput("dimension vector entries must be nonnegative".into()));
    }
    Ok(())
}

/// Serialization mirror of a [`Component`] with paths rendered as strings;
/// this is the JSON schema emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub rad: Vec<Vec<i64>>,
    pub soc: Vec<Vec<i64>>,
    pub c0: Vec<i64>,
    pub endo_dim: usize,
    pub generically_indecomposable: bool,
    /// Skeleton paths in canonical order, e.g. `"b5 a3 z_2"`.
    pub skeleton: Vec<String>,
    pub presentation: PresentationRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    /// 1-based vertex of each top element.
    pub tops: Vec<usize>,
    pub relations: Vec<RelationRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub critical: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub path: String,
    pub scalar: String,
}

impl Component {
    pub fn to_record(&self, q: &Quiver) -> ComponentRecord {
        ComponentRecord {
            rad: self.rad.layers().iter().map(|l| l.iter().copied().collect()).collect(),
            soc: self.soc.layers().iter().map(|l| l.iter().copied().collect()).collect(),
            c0: self.c0.iter().copied().collect(),
            endo_dim: self.endo_dim,
            generically_indecomposable: self.generically_indecomposable,
            skeleton: self.skeleton.paths().iter().map(|p| p.format(q)).collect(),
            presentation: PresentationRecord {
                tops: self.skeleton.tops().iter().map(|&v| v + 1).collect(),
                relations: self
                    .presentation
                    .relations()
                    .iter()
                    .map(|r| RelationRecord {
                        critical: r.critical.format(q),
                        terms: r
                            .terms
                            .iter()
                            .map(|(p, sym)| TermRecord {
                                path: p.format(q),
                                scalar: format!("x{}", sym + 1),
                            })
                            .collect(),
                    })
                    .collect(),
            },
        }
    }
}

/// Components as a JSON array (the machine-readable classifier output).
pub fn components_to_json(components: &[Component], q: &Quiver) -> serde_json::Value {
    let records: Vec<ComponentRecord> = components.iter().map(|c| c.to_record(q)).collect();
    serde_json::to_value(records).expect("records serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dv, kronecker, nine_vertex, seq, seven_vertex, six_vertex};

    #[test]
    fn generic_top_examples() {
        let q = nine_vertex();
        let d = dv(&[0, 1, 1, 0, 3, 2, 3, 5, 10]);
        assert_eq!(generic_top(&d, &q), dv(&[0, 1, 1, 0, 2, 0, 0, 1, 0]));
        assert_eq!(generic_top(&DimVector::zeros(9), &q), DimVector::zeros(9));
        // mass on sinks is its own top
        let sink_mass = dv(&[0, 0, 0, 0, 0, 0, 0, 0, 4]);
        assert_eq!(generic_top(&sink_mass, &q), sink_mass);
    }

    #[test]
    fn hereditary_layering_nine_vertex() {
        let q = nine_vertex();
        let d = dv(&[0, 1, 1, 0, 3, 2, 3, 5, 10]);
        let s = hereditary_generic_layering(&q, &d).unwrap();
        assert_eq!(s.layer(0), &dv(&[0, 1, 1, 0, 2, 0, 0, 1, 0]));
        // remainder after the top layer
        assert_eq!(d.sub(s.layer(0)), dv(&[0, 0, 0, 0, 1, 2, 3, 4, 10]));
        assert_eq!(s.total(), d);
        assert!(s.is_realizable(&q));
    }

    #[test]
    fn hereditary_layering_kronecker_and_unit() {
        let q = kronecker();
        assert_eq!(
            hereditary_generic_layering(&q, &dv(&[1, 2])).unwrap(),
            seq(&[&[1, 0], &[0, 2]])
        );
        assert_eq!(
            hereditary_generic_layering(&q, &dv(&[1, 0])).unwrap(),
            seq(&[&[1, 0], &[0, 0]])
        );
    }

    #[test]
    fn rad_soc_pairs_kronecker() {
        let q = kronecker();
        let pairs = rad_soc_pairs(&q, &dv(&[1, 2]), 1).unwrap();
        assert_eq!(pairs.len(), 3);
        let wanted = LayeredPair {
            rad: seq(&[&[1, 0], &[0, 2]]),
            soc: seq(&[&[0, 2], &[1, 0]]),
        };
        assert!(pairs.contains(&wanted));
    }

    #[test]
    fn rad_soc_pairs_zero_dimension() {
        let q = kronecker();
        let pairs = rad_soc_pairs(&q, &DimVector::zeros(2), 1).unwrap();
        assert_eq!(pairs.len(), 1);
        assert!(pairs[0].rad.is_zero());
        assert!(pairs[0].soc.is_zero());
    }

    #[test]
    fn minimal_pairs_small_cases() {
        let singleton = vec![LayeredPair {
            rad: seq(&[&[1, 0], &[0, 2]]),
            soc: seq(&[&[0, 2], &[1, 0]]),
        }];
        assert_eq!(minimal_pairs(&singleton).unwrap(), singleton);

        let bigger = LayeredPair {
            rad: seq(&[&[1, 2], &[0, 0]]),
            soc: seq(&[&[1, 2], &[0, 0]]),
        };
        let smaller = LayeredPair {
            rad: seq(&[&[1, 0], &[0, 2]]),
            soc: seq(&[&[0, 2], &[1, 0]]),
        };
        let both = vec![bigger, smaller.clone()];
        assert_eq!(minimal_pairs(&both).unwrap(), vec![smaller]);
    }

    #[test]
    fn classify_rejects_cyclic() {
        let q = crate::quiver::Quiver::from_arrows(2, vec![("a", 1, 2), ("b", 2, 1)]).unwrap();
        assert!(matches!(
            classify(&q, &dv(&[1, 1]), 1, &ClassifyOptions::default()),
            Err(Error::AcyclicRequired)
        ));
    }

    #[test]
    fn classify_kronecker_single_component() {
        let q = kronecker();
        let comps = classify(&q, &dv(&[1, 2]), 1, &ClassifyOptions::default()).unwrap();
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert_eq!(c.rad, seq(&[&[1, 0], &[0, 2]]));
        assert_eq!(c.soc, seq(&[&[0, 2], &[1, 0]]));
        assert_eq!(c.c0, DimVector::zeros(2));
        assert_eq!(c.endo_dim, 1);
        assert!(c.generically_indecomposable);
        assert!(c.presentation.relations().is_empty());
    }

    #[test]
    fn classify_matches_enumeration_in_hereditary_case() {
        // the greedy layering must be the unique dominance-minimal
        // realizable layering
        let q = seven_vertex();
        let d = DimVector::from(vec![1; 7]);
        let truncation = 6;
        let greedy = hereditary_generic_layering(&q, &d).unwrap();
        let mut minimum: Option<SemisimpleSequence> = None;
        for s in enumerate_realizable(&q, &d, truncation) {
            minimum = Some(match minimum {
                None => s,
                Some(m) => {
                    if s.dominance_leq(&m).unwrap() {
                        s
                    } else {
                        m
                    }
                }
            });
        }
        let minimum = minimum.unwrap();
        assert_eq!(greedy, minimum);
        for s in enumerate_realizable(&q, &d, truncation) {
            assert!(minimum.dominance_leq(&s).unwrap(), "{minimum} vs {s}");
        }
    }

    #[test]
    fn duality_swaps_pair_sets_on_kronecker() {
        let q = kronecker();
        let op = q.opposite();
        let d = dv(&[1, 2]);
        let opts = ClassifyOptions::default();
        let left: Vec<(SemisimpleSequence, SemisimpleSequence)> = classify(&q, &d, 1, &opts)
            .unwrap()
            .into_iter()
            .map(|c| (c.soc, c.rad))
            .collect();
        let right: Vec<(SemisimpleSequence, SemisimpleSequence)> = classify(&op, &d, 1, &opts)
            .unwrap()
            .into_iter()
            .map(|c| (c.rad, c.soc))
            .collect();
        assert_eq!(left.len(), right.len());
        for pair in &left {
            assert!(right.contains(pair));
        }
    }

    #[test]
    fn nine_vertex_generic_endo_dims() {
        // the generic module for the full dimension vector splits off the
        // simple summand at vertex 2; removing it leaves a generically
        // indecomposable module
        let q = nine_vertex();
        let full = hereditary_generic_layering(&q, &dv(&[0, 1, 1, 0, 3, 2, 3, 5, 10])).unwrap();
        let opts = ClassifyOptions::default();
        assert_eq!(generic_endo_dim(&q, &full, &opts).unwrap(), 2);

        let without_summand =
            hereditary_generic_layering(&q, &dv(&[0, 0, 1, 0, 3, 2, 3, 5, 10])).unwrap();
        assert_eq!(generic_endo_dim(&q, &without_summand, &opts).unwrap(), 1);
    }

    #[test]
    fn records_round_trip() {
        let q = kronecker();
        let comps = classify(&q, &dv(&[1, 2]), 1, &ClassifyOptions::default()).unwrap();
        let json = components_to_json(&comps, &q);
        let text = serde_json::to_string_pretty(&json).unwrap();
        let parsed: Vec<ComponentRecord> = serde_json::from_str(&text).unwrap();
        let direct: Vec<ComponentRecord> = comps.iter().map(|c| c.to_record(&q)).collect();
        assert_eq!(parsed, direct);
    }

    #[test]
    fn bridge_quiver_components_are_incomparable_and_realizable() {
        let q = six_vertex();
        let d = DimVector::from(vec![1; 6]);
        let comps = classify(&q, &d, 2, &ClassifyOptions::default()).unwrap();
        let pairs = rad_soc_pairs(&q, &d, 2).unwrap();
        assert_eq!(comps.len(), minimal_pairs(&pairs).unwrap().len());
        for c in &comps {
            assert!(c.rad.is_realizable(&q));
        }
        for (i, a) in comps.iter().enumerate() {
            for (j, b) in comps.iter().enumerate() {
                if i != j {
                    let a_pair = LayeredPair { rad: a.rad.clone(), soc: a.soc.clone() };
                    let b_pair = LayeredPair { rad: b.rad.clone(), soc: b.soc.clone() };
                    assert!(!a_pair.pair_leq(&b_pair).unwrap());
                }
            }
        }
    }
}
