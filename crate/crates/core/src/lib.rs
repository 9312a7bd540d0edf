//! Weisfeiler-Leman refinement, counting logic with its pebble game, and
//! the combinatorics of graphs embedded in surfaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: arc-coloured graphs, quotients, bridges, connectivity.
//! - [`wl`]: k-dimensional Weisfeiler-Leman refinement and its predicates.
//! - [`logic`]: counting-logic formulas, evaluation and the bijective pebble game.
//! - [`surface`]: signed rotation systems, faces, Euler genus, cutting along cycles.
//! - [`topo`]: shortest path systems, patches, necklaces and cut graphs.
//! - [`cfi`]: Cai-Fürer-Immerman pairs.
//! - [`oracle`]: brute-force isomorphism, automorphisms and enumeration.
//! - [`experiment`]: named, seeded experiments producing JSON reports.

pub mod cfi;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod logic;
pub mod oracle;
pub mod par;
pub mod surface;
pub mod topo;
pub mod wl;

pub use error::{Error, Result};
pub use graph::{Colour, ColouredGraph, Subgraph};
pub use par::ExecMode;
