//! Shared fixtures for the integration suites: the worked quivers, the
//! displayed skeleton, and seeded random generators.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use repvar::layers::{DimVector, SemisimpleSequence};
use repvar::quiver::Quiver;
use repvar::skeleta::Skeleton;

pub fn dv(entries: &[i64]) -> DimVector {
    DimVector::from(entries.to_vec())
}

pub fn seq(layers: &[&[i64]]) -> SemisimpleSequence {
    SemisimpleSequence::new(layers.iter().map(|l| dv(l)).collect()).unwrap()
}

pub fn kronecker() -> Quiver {
    Quiver::from_arrows(2, vec![("a1", 1, 2), ("a2", 1, 2)]).unwrap()
}

/// Six vertices: chains 1 -> 2 -> 3 and 4 -> 5 -> 6 bridged by b: 2 -> 5.
pub fn six_vertex() -> Quiver {
    Quiver::from_arrows(
        6,
        vec![("a1", 1, 2), ("a2", 2, 3), ("b", 2, 5), ("a4", 4, 5), ("a5", 5, 6)],
    )
    .unwrap()
}

/// Seven vertices with arrows a_i: i -> i+1 and b_i: i -> i+2.
pub fn seven_vertex() -> Quiver {
    let mut arrows = Vec::new();
    for i in 1..=6 {
        arrows.push((format!("a{i}"), i, i + 1));
    }
    for i in 1..=5 {
        arrows.push((format!("b{i}"), i, i + 2));
    }
    Quiver::from_arrows(7, arrows).unwrap()
}

/// The nine-vertex hereditary worked example.
pub fn nine_vertex() -> Quiver {
    Quiver::from_arrows(
        9,
        vec![
            ("b1", 1, 2),
            ("a1", 1, 3),
            ("a2", 2, 4),
            ("a3", 3, 5),
            ("b3", 3, 7),
            ("a4", 4, 5),
            ("b5", 5, 6),
            ("a5", 5, 7),
            ("g5", 5, 9),
            ("a6", 6, 8),
            ("b6", 6, 8),
            ("a7", 7, 9),
            ("a8", 8, 9),
        ],
    )
    .unwrap()
}

/// The skeleton displayed for the nine-vertex example: five tops at vertices
/// 2, 3, 5, 5, 8 and the drawn solid-edge tree under each.
pub fn nine_vertex_skeleton(q: &Quiver) -> Skeleton {
    Skeleton::from_named_paths(
        q,
        6,
        &[2, 3, 5, 5, 8],
        &[
            (2, vec!["b3"]),
            (2, vec!["a3"]),
            (2, vec!["b3", "a7"]),
            (2, vec!["a3", "b5"]),
            (2, vec!["a3", "a5"]),
            (2, vec!["a3", "g5"]),
            (2, vec!["a3", "b5", "b6"]),
            (2, vec!["a3", "b5", "a6"]),
            (2, vec!["a3", "a5", "a7"]),
            (2, vec!["a3", "b5", "b6", "a8"]),
            (2, vec!["a3", "b5", "a6", "a8"]),
            (3, vec!["b5"]),
            (3, vec!["g5"]),
            (3, vec!["b5", "b6"]),
            (3, vec!["b5", "a6"]),
            (3, vec!["b5", "b6", "a8"]),
            (3, vec!["b5", "a6", "a8"]),
            (4, vec!["a5"]),
            (4, vec!["g5"]),
            (4, vec!["a5", "a7"]),
        ],
    )
    .unwrap()
}

/// The nine layerings readable from the displayed L = 3 component diagrams
/// of the seven-vertex example.
pub fn seven_vertex_l3_fixtures() -> Vec<SemisimpleSequence> {
    vec![
        // (A)
        seq(&[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1],
        ]),
        // (B)
        seq(&[
            &[1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1],
        ]),
        // (C)
        seq(&[
            &[1, 0, 0, 0, 0, 0, 1],
            &[0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 0],
        ]),
        seq(&[
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
        seq(&[
            &[1, 0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
        seq(&[
            &[1, 0, 0, 1, 0, 0, 0],
            &[0, 1, 0, 0, 1, 0, 0],
            &[0, 0, 1, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
        seq(&[
            &[1, 0, 0, 1, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1],
        ]),
        seq(&[
            &[1, 0, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 0, 0, 1],
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
        ]),
        seq(&[
            &[1, 1, 0, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        ]),
    ]
}

/// Random quiver on at most `n_max` vertices; when `acyclic`, arrows only
/// run from lower to higher vertex numbers.
pub fn random_quiver(rng: &mut ChaCha8Rng, n_max: usize, acyclic: bool) -> Quiver {
    let n = rng.gen_range(1..=n_max);
    let arrow_count = rng.gen_range(0..=2 * n);
    let mut arrows = Vec::new();
    for k in 0..arrow_count {
        let s = rng.gen_range(1..=n);
        let t = rng.gen_range(1..=n);
        let (s, t) = if acyclic {
            if s == t {
                continue;
            }
            (s.min(t), s.max(t))
        } else {
            (s, t)
        };
        arrows.push((format!("a{k}"), s, t));
    }
    Quiver::from_arrows(n, arrows).unwrap()
}

/// Random realizable sequence: the first layer is free, every later layer is
/// bounded by the first radical layer of its predecessor's projective cover.
pub fn random_realizable(
    rng: &mut ChaCha8Rng,
    q: &Quiver,
    truncation: usize,
    max_entry: i64,
) -> SemisimpleSequence {
    let b = q.adjacency();
    let n = q.vertex_count();
    let mut layers = Vec::with_capacity(truncation + 1);
    let first: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
    layers.push(DimVector::from(first));
    for l in 0..truncation {
        let cap = b.apply(&layers[l]);
        let next: Vec<i64> =
            (0..n).map(|v| rng.gen_range(0..=cap[v].min(max_entry))).collect();
        layers.push(DimVector::from(next));
    }
    SemisimpleSequence::new(layers).unwrap()
}
