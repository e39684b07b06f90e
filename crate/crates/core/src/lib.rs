//! Spatial-graph diagrams of the plum graphs P_{2n+1}: linking-number
//! invariants, crossing-change move spaces, exact unknotting-number
//! certification by L1 lattice search, and linear crossing-number bounds.
//!
//! The library is organized around a handful of exact combinatorial objects:
//!
//! * [`graph`]: planar multigraphs with rotation systems, cycles, spanning
//!   trees;
//! * [`plum`]: the plum graphs P_{2n+1} with their labelled region cycles;
//! * [`diagram`]: diagrams and projections as combinatorial planar maps,
//!   crossing changes, mirrors, resolutions, sub-diagram extraction;
//! * [`link`]: knot/link diagrams produced by restriction, linking number and
//!   writhe;
//! * [`invariants`]: the linking vector L(f), knot determinants, and
//!   one-sided nontriviality certificates;
//! * [`moves`]: the move space of linking-vector changes under a single
//!   crossing change, and its closed form B_{2n+1};
//! * [`l1`]: exact minimum-L1 integer representation over a generator set,
//!   certifying unknotting-number lower bounds;
//! * [`bounds`]: branch indices, reorder costs, the constants of the linear
//!   bound u(f) <= A c(f) + B, and descending-diagram change sets;
//! * [`io`]: JSON file formats for graphs, diagrams, projections and trees;
//! * [`acceptance`]: the runnable acceptance suite shared by the test target
//!   and the CLI selftest.
//!
//! Everything is exact integer arithmetic; no floating point is involved
//! anywhere in the certification paths.

pub mod acceptance;
pub mod bounds;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod l1;
pub mod link;
pub mod matrix;
pub mod moves;
pub mod plum;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
