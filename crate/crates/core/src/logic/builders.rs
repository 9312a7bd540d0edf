use super::formula::{Formula, Var};
use crate::error::{Error, Result};

fn dist_between(k: usize, a: &Var, b: &Var) -> Formula {
    if k == 0 {
        return Formula::Eq(a.clone(), b.clone());
    }
    let y = Var::new(&format!("y{k}"));
    let step = Formula::exists(
        y.clone(),
        Formula::and(Formula::Edge(a.clone(), y.clone()), dist_between(k - 1, &y, b)),
    );
    Formula::or(Formula::Eq(a.clone(), b.clone()), step)
}

/// `dist≤k(x, x')`: `x = x'` for `k = 0`, otherwise
/// `x = x' ∨ ∃y_k (E(x, y_k) ∧ dist≤k-1(y_k, x'))`.
pub fn dist_formula(k: i64) -> Result<Formula> {
    if k < 0 {
        return Err(Error::InvalidArgument("distance bound must be non-negative".into()));
    }
    Ok(dist_between(k as usize, &Var::new("x"), &Var::new("x'")))
}

/// `dist=k(x, x') = dist≤k(x, x') ∧ ¬dist≤k-1(x, x')` for `k ≥ 1`.
pub fn dist_exact_formula(k: i64) -> Result<Formula> {
    if k < 1 {
        return Err(Error::InvalidArgument("exact distance needs k >= 1".into()));
    }
    Ok(Formula::and(
        dist_formula(k)?,
        Formula::not(dist_formula(k - 1)?),
    ))
}

/// `conn_n = ∀x ∀x' dist≤n-1(x, x')`: connectedness on graphs of order ≤ n.
pub fn conn_formula(n: usize) -> Formula {
    let inner = dist_formula(n.saturating_sub(1) as i64).expect("non-negative");
    Formula::forall("x", Formula::forall("x'", inner))
}

/// The seven-variable chain `∃x1(E(x,x1) ∧ ∃x2(E(x1,x2) ∧ … ∃x5 E(x5,y)))`.
pub fn chain_formula() -> Formula {
    let mut phi = Formula::exists("x5", Formula::edge("x5", "y"));
    for (a, b) in [("x3", "x4"), ("x2", "x3"), ("x1", "x2"), ("x", "x1")] {
        phi = Formula::exists(b, Formula::and(Formula::edge(a, b), phi));
    }
    phi
}

/// The same chain with bound variables reused, over `{x, y, z}`.
pub fn chain_formula_three_vars() -> Formula {
    let mut phi = Formula::exists("z", Formula::edge("z", "y"));
    for (a, b) in [("z", "x"), ("x", "z"), ("z", "x"), ("x", "z")] {
        phi = Formula::exists(b, Formula::and(Formula::edge(a, b), phi));
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::logic::eval::{eval, Assignment};

    #[test]
    fn widths() {
        assert_eq!(chain_formula().width(), 3);
        assert_eq!(chain_formula().variables().len(), 7);
        assert_eq!(chain_formula_three_vars().width(), 3);
        assert_eq!(chain_formula_three_vars().variables().len(), 3);
        assert_eq!(dist_formula(0).unwrap().width(), 2);
        for k in 1..6 {
            assert_eq!(dist_formula(k).unwrap().width(), 3);
        }
        assert!(dist_formula(-1).is_err());
    }

    #[test]
    fn dist_on_p4() {
        let g = path(4);
        let d2 = dist_formula(2).unwrap();
        let at = |a, b| Assignment::new().with("x", a).with("x'", b);
        assert!(eval(&g, &d2, &at(0, 2)).unwrap());
        assert!(!eval(&g, &d2, &at(0, 3)).unwrap());
        assert!(eval(&g, &d2, &at(0, 1)).unwrap());
        let d0 = dist_formula(0).unwrap();
        assert!(eval(&g, &d0, &at(1, 1)).unwrap());
        assert!(!eval(&g, &d0, &at(1, 2)).unwrap());
        let e2 = dist_exact_formula(2).unwrap();
        assert!(eval(&g, &e2, &at(3, 1)).unwrap());
        assert!(!eval(&g, &e2, &at(3, 2)).unwrap());
    }

    #[test]
    fn conn_detects_connectivity() {
        let none = Assignment::new();
        assert!(eval(&cycle(5), &conn_formula(5), &none).unwrap());
        let two = cycle(3).disjoint_union(&path(2));
        assert!(!eval(&two, &conn_formula(5), &none).unwrap());
        assert!(eval(&path(2), &conn_formula(2), &none).unwrap());
    }

    #[test]
    fn chain_variants_agree() {
        for g in [path(6), cycle(5), petersen(), path(2).disjoint_union(&path(3))] {
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let nu = Assignment::new().with("x", x).with("y", y);
                    assert_eq!(
                        eval(&g, &chain_formula(), &nu).unwrap(),
                        eval(&g, &chain_formula_three_vars(), &nu).unwrap()
                    );
                }
            }
        }
    }
}
