//! Generalized Mycielskian graphs and their distinguishing numbers.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - [`graph`]: immutable simple graphs and the structural predicates used
//!   throughout (twins, isolated vertices, cut vertices, stars).
//! - [`graph6`] and [`edgelist`]: byte/text codecs for graphs.
//! - [`mycielskian`]: the `mu_t(G)` construction with a role-tagged layout.
//! - [`automorphism`]: refinement-based automorphism search, orbits and
//!   color-preserving automorphism queries.
//! - [`distinguishing`]: colorings, the distinguishing test and the exact
//!   distinguishing number (with a brute-force oracle).
//! - [`constructions`]: explicit distinguishing colorings of `mu_t(G)` and
//!   the case predictor for `dist(mu_t(G))`.
#![no_std]

extern crate alloc;

pub mod automorphism;
pub mod coloring;
pub mod constructions;
pub mod distinguishing;
pub mod edgelist;
mod error;
pub mod graph;
pub mod graph6;
pub mod mycielskian;
pub mod perm;
mod refine;

pub use automorphism::{AutConfig, AutListing, GroupSummary};
pub use coloring::Coloring;
pub use constructions::{CaseTag, DistPrediction, PredictionKind};
pub use distinguishing::{DistConfig, DistResult};
pub use error::{Error, Result};
pub use graph::{Graph, NeighborhoodDegreeMultiset, StarShape};
pub use mycielskian::{FactReport, MycLayout, Role};
pub use perm::Permutation;
