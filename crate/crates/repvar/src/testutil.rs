//! Shared fixtures for unit tests: the worked quivers and small builders.

use crate::layers::{DimVector, SemisimpleSequence};
use crate::quiver::Quiver;

pub fn dv(entries: &[i64]) -> DimVector {
    DimVector::from(entries.to_vec())
}

pub fn seq(layers: &[&[i64]]) -> SemisimpleSequence {
    SemisimpleSequence::new(layers.iter().map(|l| dv(l)).collect()).unwrap()
}

/// Two vertices, two parallel arrows `1 -> 2`.
pub fn kronecker() -> Quiver {
    Quiver::from_arrows(2, vec![("a1", 1, 2), ("a2", 1, 2)]).unwrap()
}

/// Two chains `1 -> 2 -> 3` and `4 -> 5 -> 6` bridged by `b: 2 -> 5`.
pub fn six_vertex() -> Quiver {
    Quiver::from_arrows(
        6,
        vec![("a1", 1, 2), ("a2", 2, 3), ("b", 2, 5), ("a4", 4, 5), ("a5", 5, 6)],
    )
    .unwrap()
}

/// Seven vertices with arrows `a_i: i -> i+1` and `b_i: i -> i+2`.
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

/// The nine-vertex quiver used in the hereditary worked example.
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
