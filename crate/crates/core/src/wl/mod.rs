//! k-dimensional Weisfeiler-Leman refinement.
//!
//! `C_0` colours every k-tuple by its atomic type. Round `i + 1` colours
//! `ū` by `C_i(ū)` together with the multiset, over all vertices `v`, of
//! `(atp(ū v), C_i(ū[k-1 ← v]), …, C_i(ū[0 ← v]))`. Refinement stops at
//! the first round that does not split a class.
//!
//! Several graphs can be refined jointly over one colour universe so that
//! colours are comparable between them; see [`refine_jointly`].

mod atomic;
mod export;
mod predicates;
mod refine;

pub use atomic::{atomic_type, AtomType};
pub use export::colouring_to_json;
pub use predicates::{
    determines_orbits_check, distinguishes, distinguishes_with, identifies_each, identifies_within,
    wl_dimension_within,
};
pub use refine::{
    refine_jointly, refines, same_partition, wl_refine, wl_refine_with, ColourId,
    JointRefinement, StableColouring, WlConfig,
};
