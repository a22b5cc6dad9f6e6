//! Classification of the irreducible components of the module varieties
//! `Rep_d` of a truncated path algebra over an acyclic quiver, together with
//! the generic invariants of each component: radical and socle layerings,
//! skeleta, minimal projective presentations, the largest generic semisimple
//! summand, and generic endomorphism dimensions.
//!
//! The crate is organized around the pipeline
//!
//! 1. [`quiver`] — quiver data model, adjacency matrices, path enumeration;
//! 2. [`layers`] — dimension vectors, semisimple sequences, the dominance
//!    order, and pruned enumeration of realizable sequences;
//! 3. [`socle`] — the generic-socle machinery (layer recursion and the
//!    closed sup formula);
//! 4. [`skeleta`] — skeleton enumeration and generic minimal projective
//!    presentations;
//! 5. [`repcalc`] — a concrete finite-field representation engine used as an
//!    independent oracle;
//! 6. [`components`] — the classifier producing one [`components::Component`]
//!    per irreducible component.
//!
//! Truncation convention: the algebra is the path algebra modulo all paths of
//! length `L + 1`, so the radical satisfies `J^(L+1) = 0` and every layering
//! has exactly `L + 1` entries.

pub mod components;
pub mod error;
pub(crate) mod fp;
pub mod layers;
pub mod quiver;
pub mod repcalc;
pub mod skeleta;
pub mod socle;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};

/// Default prime for finite-field instantiations (a large Mersenne prime).
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Default RNG seed; all randomized computations are reproducible by default.
pub const DEFAULT_SEED: u64 = 42;

/// Default number of independent scalar draws for randomized invariants.
pub const DEFAULT_TRIALS: usize = 3;
