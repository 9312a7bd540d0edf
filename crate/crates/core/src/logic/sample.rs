use super::formula::{Formula, Var};
use crate::graph::Colour;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The variable names `x1, …, xk` used by sampled formulas.
pub fn sample_vars(k: usize) -> Vec<Var> {
    (1..=k).map(|i| Var::new(&format!("x{i}"))).collect()
}

fn atom<R: Rng>(rng: &mut R, vars: &[Var], colours: &[Colour]) -> Formula {
    let x = vars.choose(rng).unwrap().clone();
    let y = vars.choose(rng).unwrap().clone();
    match rng.gen_range(0..3) {
        0 => Formula::Eq(x, y),
        1 => Formula::Edge(x, y),
        _ => match colours.choose(rng) {
            Some(c) => Formula::Rel(c.clone(), x, y),
            None => Formula::Edge(x, y),
        },
    }
}

fn literal<R: Rng>(rng: &mut R, vars: &[Var], colours: &[Colour]) -> Formula {
    let a = atom(rng, vars, colours);
    if rng.gen_bool(0.5) {
        Formula::not(a)
    } else {
        a
    }
}

fn gen<R: Rng>(rng: &mut R, depth: usize, vars: &[Var], colours: &[Colour]) -> Formula {
    if depth <= 1 {
        return literal(rng, vars, colours);
    }
    let sub = |rng: &mut R| {
        let d = rng.gen_range(1..depth);
        gen(rng, d, vars, colours)
    };
    match rng.gen_range(0..6) {
        0 => Formula::not(gen(rng, depth - 1, vars, colours)),
        1 => {
            let a = gen(rng, depth - 1, vars, colours);
            Formula::or(a, sub(rng))
        }
        2 => {
            let a = gen(rng, depth - 1, vars, colours);
            Formula::and(a, sub(rng))
        }
        3 => {
            let x = vars.choose(rng).unwrap().clone();
            Formula::forall(x, gen(rng, depth - 1, vars, colours))
        }
        _ => {
            let x = vars.choose(rng).unwrap().clone();
            let p = rng.gen_range(1..=3);
            Formula::at_least(p, x, gen(rng, depth - 1, vars, colours))
        }
    }
}

/// `count` pseudo-random formulas over the variables `x1..xk` (so of width
/// at most `k`), nesting depth at most `depth`, reproducible from `seed`.
/// Depth 1 yields only atoms and negated atoms.
pub fn sample_formulas(
    k: usize,
    depth: usize,
    seed: u64,
    colour_universe: &[Colour],
    count: usize,
) -> Vec<Formula> {
    assert!(k >= 2 && depth >= 1, "sample_formulas needs k >= 2 and depth >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = sample_vars(k);
    (0..count)
        .map(|_| {
            let phi = gen(&mut rng, depth, &vars, colour_universe);
            debug_assert!(phi.width() <= k);
            phi
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let u = [Colour::plain()];
        assert_eq!(sample_formulas(3, 4, 9, &u, 50), sample_formulas(3, 4, 9, &u, 50));
        assert_ne!(sample_formulas(3, 4, 9, &u, 50), sample_formulas(3, 4, 10, &u, 50));
    }

    #[test]
    fn width_bound() {
        for k in 2..5 {
            for phi in sample_formulas(k, 5, k as u64, &[Colour::plain()], 200) {
                assert!(phi.width() <= k);
                assert!(phi.variables().len() <= k);
            }
        }
    }

    #[test]
    fn depth_one_literals() {
        for phi in sample_formulas(2, 1, 3, &[Colour::plain()], 100) {
            let atom = match &phi {
                Formula::Not(a) => a.as_ref(),
                a => a,
            };
            assert!(matches!(atom, Formula::Eq(..) | Formula::Edge(..) | Formula::Rel(..)));
        }
    }
}
