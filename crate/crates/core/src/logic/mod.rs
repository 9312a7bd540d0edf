//! Counting logic: formulas with counting quantifiers `∃^{≥p}`, their
//! evaluation on coloured graphs, formula width, and the bijective pebble
//! game that characterises k-WL equivalence.

mod builders;
mod eval;
mod formula;
mod pebble;
mod sample;
pub mod sexpr;

pub use builders::{
    chain_formula, chain_formula_three_vars, conn_formula, dist_exact_formula, dist_formula,
};
pub use eval::{eval, Assignment, Evaluator};
pub use formula::{Formula, Var};
pub use pebble::{bijective_pebble_game, PebbleGame};
pub use sample::{sample_formulas, sample_vars};

/// The width of a formula: the maximum number of free variables of any
/// subformula.
pub fn width(phi: &Formula) -> usize {
    phi.width()
}
