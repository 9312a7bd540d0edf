//! Ground-truth oracles: isomorphism, automorphism orbits and enumeration
//! of small graphs.

pub mod enumerate;
pub mod iso;

pub use enumerate::{enumerate_graphs, enumerate_trees};
pub use iso::{
    automorphism_orbits, brute_force_isomorphic, find_isomorphism, find_isomorphism_with,
    random_automorphism, IsoLimits,
};
