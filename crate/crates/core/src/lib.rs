//! Efficient dominating sets on bipartite graphs.
//!
//! An efficient dominating set (e.d.s.) of a graph G is a vertex set D such
//! that every vertex of G has exactly one member of its closed neighborhood
//! in D; equivalently, the closed neighborhoods of D partition the vertex
//! set. Deciding whether one exists is NP-complete even for chordal bipartite
//! graphs, but becomes polynomial on bipartite graphs without an induced
//! S(1,1,5) spider. This crate implements both sides of that boundary:
//!
//! - [`oracle`]: an exact backtracking decider/counter for any bipartite
//!   graph, returning the lexicographically smallest e.d.s.
//! - [`engine`] + [`driver`]: the forced-vertex reduction pipeline that
//!   shrinks S(1,1,5)-free instances until small residual components remain.
//! - [`pattern`]: induced path, C6, P8 and spider detection.
//! - [`domination`]: solution verification and the Forced/Excluded state map.
//! - [`generate`]: seeded random, planted-solution and named-family
//!   generators for testing and benchmarks.
//!
//! The `exhaustive` module (enabled by the feature of the same name, and in
//! tests) holds brute-force reference implementations; it is test machinery,
//! not part of the solving pipeline.

pub mod domination;
pub mod driver;
pub mod engine;
#[cfg(any(test, feature = "exhaustive"))]
pub mod exhaustive;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod pattern;

pub use domination::{Conflict, ConflictReason, EdsSolution, Label, StateMap, VerifyReport};
pub use driver::{DriverConfig, SolveError, SolveOutcome, Strictness};
pub use graph::{BipartiteGraph, GraphError, Side, Vertex};
pub use pattern::{InducedWitness, PatternKind};
