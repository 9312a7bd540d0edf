use crate::graph::Colour;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// An interned variable name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Var {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Var {
        Var::new(s)
    }
}

/// Counting-logic formulas. Conjunction, universal quantification and the
/// other derived connectives are built by the constructors below and are
/// not separate nodes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Eq(Var, Var),
    Edge(Var, Var),
    Rel(Colour, Var, Var),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `∃^{≥p} x φ`, `p ≥ 1`.
    Count(usize, Var, Box<Formula>),
}

impl Formula {
    pub fn eq(x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::Eq(x.into(), y.into())
    }

    pub fn edge(x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::Edge(x.into(), y.into())
    }

    pub fn rel(c: Colour, x: impl Into<Var>, y: impl Into<Var>) -> Formula {
        Formula::Rel(c, x.into(), y.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(phi: Formula) -> Formula {
        Formula::Not(Box::new(phi))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::or(Formula::not(a), Formula::not(b)))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::or(Formula::not(a), b)
    }

    /// `∃^{≥p} x φ`; `p` must be at least 1.
    pub fn at_least(p: usize, x: impl Into<Var>, phi: Formula) -> Formula {
        assert!(p >= 1, "counting quantifier needs p >= 1");
        Formula::Count(p, x.into(), Box::new(phi))
    }

    pub fn exists(x: impl Into<Var>, phi: Formula) -> Formula {
        Formula::at_least(1, x, phi)
    }

    pub fn forall(x: impl Into<Var>, phi: Formula) -> Formula {
        Formula::not(Formula::exists(x, Formula::not(phi)))
    }

    /// `∃^{<p} x φ`.
    pub fn fewer_than(p: usize, x: impl Into<Var>, phi: Formula) -> Formula {
        Formula::not(Formula::at_least(p, x, phi))
    }

    /// `∃^{=p} x φ`; for `p = 0` this is `¬∃x φ`.
    pub fn exactly(p: usize, x: impl Into<Var>, phi: Formula) -> Formula {
        let x = x.into();
        if p == 0 {
            return Formula::not(Formula::exists(x, phi));
        }
        Formula::and(
            Formula::at_least(p, x.clone(), phi.clone()),
            Formula::not(Formula::at_least(p + 1, x, phi)),
        )
    }

    /// `∀x (x = x)`.
    pub fn truth() -> Formula {
        Formula::forall("x", Formula::eq("x", "x"))
    }

    pub fn falsity() -> Formula {
        Formula::not(Formula::truth())
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        match self {
            Formula::Eq(x, y) | Formula::Edge(x, y) | Formula::Rel(_, x, y) => {
                [x.clone(), y.clone()].into_iter().collect()
            }
            Formula::Not(a) => a.free_vars(),
            Formula::Or(a, b) => {
                let mut s = a.free_vars();
                s.extend(b.free_vars());
                s
            }
            Formula::Count(_, x, a) => {
                let mut s = a.free_vars();
                s.remove(x);
                s
            }
        }
    }

    /// All variable names occurring free or bound.
    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Eq(x, y) | Formula::Edge(x, y) | Formula::Rel(_, x, y) => {
                out.insert(x.clone());
                out.insert(y.clone());
            }
            Formula::Count(_, x, _) => {
                out.insert(x.clone());
            }
            _ => {}
        });
        out
    }

    fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Not(a) | Formula::Count(_, _, a) => a.visit(f),
            Formula::Or(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }

    /// Colours named by `R_c` atoms.
    pub fn colours(&self) -> BTreeSet<Colour> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Rel(c, _, _) = f {
                out.insert(c.clone());
            }
        });
        out
    }

    /// The maximum number of free variables of a subformula.
    pub fn width(&self) -> usize {
        let own = self.free_vars().len();
        let sub = match self {
            Formula::Not(a) | Formula::Count(_, _, a) => a.width(),
            Formula::Or(a, b) => a.width().max(b.width()),
            _ => 0,
        };
        own.max(sub)
    }

    /// Nesting depth of counting quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Not(a) => a.quantifier_depth(),
            Formula::Or(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Formula::Count(_, _, a) => 1 + a.quantifier_depth(),
            _ => 0,
        }
    }

    pub fn node_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::sexpr::print(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::sexpr::print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_variables_respect_binding() {
        let phi = Formula::or(
            Formula::edge("x", "y"),
            Formula::exists("x", Formula::eq("x", "z")),
        );
        let free: Vec<String> = phi.free_vars().iter().map(|v| v.to_string()).collect();
        assert_eq!(free, vec!["x", "y", "z"]);
        assert_eq!(phi.width(), 3);
    }

    #[test]
    fn atom_width() {
        assert_eq!(Formula::edge("x", "y").width(), 2);
        assert_eq!(Formula::eq("x", "x").width(), 1);
        assert_eq!(Formula::truth().width(), 1);
        assert!(Formula::truth().is_sentence());
    }
}
