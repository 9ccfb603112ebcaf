//! Uniform random sorting networks: exact samplers, bijections, counting,
//! and desk-scale verification of the associated limit laws.
//!
//! A sorting network here is a shortest path from the identity to the
//! reverse permutation in the Cayley graph of the symmetric group generated
//! by adjacent transpositions, i.e. a maximal chain in the weak Bruhat
//! order. The crate provides:
//!
//! * [`perm`] — permutations, sorting networks, configurations, scaled
//!   trajectories and point measures, and the exact symmetry bijections.
//! * [`tableaux`] — partitions, standard Young tableaux, hook lengths and
//!   exact dimension counting with big integers.
//! * [`hookwalk`] — exact-uniform tableau sampling by hook walks, the
//!   coupled sampler for nested shapes, and the uniform network sampler.
//! * [`eg`] — the Edelman–Greene bijection (promotion, insertion, forward
//!   and inverse maps) and the first-row tracker.
//! * [`counting`] — Stanley's product formula, reduced-word counts,
//!   exhaustive enumeration, and exact pass-through probabilities.
//! * [`limits`] — semicircle law, limit-profile contours, octagon and
//!   Hölder checkers, Archimedes measures.
//! * [`geometry`] — the permutahedron sphere, great circles, angular
//!   tracking and sine-curve fits.
//! * [`rng`] — the pinned, reproducible random stream used by every
//!   sampler.
//! * [`stats`] — small statistical helpers (empirical CDFs,
//!   Kolmogorov–Smirnov distances, chi-square tail probabilities).

pub mod counting;
pub mod eg;
pub mod geometry;
pub mod hookwalk;
pub mod limits;
pub mod perm;
pub mod rng;
pub mod stats;
pub mod tableaux;

pub use perm::{Permutation, ScaledPointMeasure, SortingNetwork};
pub use rng::RandomStream;
pub use tableaux::{BigCount, Partition, StandardYoungTableau};
