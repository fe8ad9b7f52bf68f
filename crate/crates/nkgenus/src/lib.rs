//! Matching extendability, factor-criticality, and surface embeddings.
//!
//! The crate has four layers:
//!
//! * [`formulas`] — exact integer evaluation of the closed forms tying
//!   matching extendability and factor-criticality to the genus of the
//!   host surface, plus table generation and inversion consistency checks.
//! * [`graph`] — a small simple-graph toolkit: graph6/edge-list ingestion,
//!   generators, maximum matching on general graphs, vertex connectivity,
//!   bipartiteness, and induced-subgraph utilities.
//! * [`extendability`] — brute-force, witness-producing deciders for
//!   k-extendability, n-factor-criticality, and (n,k)-graphs, together
//!   with executable property suites for the classical structure theorems.
//! * [`embedding`] — signed rotation systems: face tracing, Euler
//!   contributions, control points, and desk-scale minimum-genus search.
//!
//! Everything is deterministic: randomized searches are seeded, and the
//! parallel deciders report the same witness regardless of thread count.

// Comparisons like `kappa >= k + 1` mirror the bounds exactly as the doc
// comments state them; rewriting them as strict inequalities would obscure
// that correspondence.
#![allow(clippy::int_plus_one)]

pub mod embedding;
pub mod extendability;
pub mod formulas;
pub mod graph;
