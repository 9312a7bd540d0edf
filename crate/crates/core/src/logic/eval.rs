use super::formula::{Formula, Var};
use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};
use std::collections::{BTreeMap, HashMap};

/// A partial map from variables to vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<Var, usize>);

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn with(mut self, x: impl Into<Var>, v: usize) -> Assignment {
        self.0.insert(x.into(), v);
        self
    }

    pub fn set(&mut self, x: impl Into<Var>, v: usize) {
        self.0.insert(x.into(), v);
    }

    pub fn get(&self, x: &Var) -> Option<usize> {
        self.0.get(x).copied()
    }

    /// `x_1 ↦ t_0, …, x_k ↦ t_{k-1}`.
    pub fn from_tuple(vars: &[Var], tuple: &[usize]) -> Assignment {
        Assignment(vars.iter().cloned().zip(tuple.iter().copied()).collect())
    }
}

enum Node {
    Eq(usize, usize),
    Edge(usize, usize),
    Rel(Colour, usize, usize),
    Not(usize),
    Or(usize, usize),
    Count(usize, usize, usize),
}

/// Evaluates one formula on one graph, memoising subformula values keyed
/// on the values of their free variables. The cache lives as long as the
/// evaluator and is not shared.
pub struct Evaluator<'g> {
    g: &'g ColouredGraph,
    nodes: Vec<Node>,
    free: Vec<Vec<usize>>,
    root: usize,
    vars: Vec<Var>,
    memo: HashMap<(usize, Vec<usize>), bool>,
}

impl<'g> Evaluator<'g> {
    pub fn new(g: &'g ColouredGraph, phi: &Formula) -> Result<Evaluator<'g>> {
        let universe = g.colour_universe();
        for c in phi.colours() {
            if universe.binary_search(&c).is_err() {
                return Err(Error::UnknownColour(c.to_string()));
            }
        }
        let vars: Vec<Var> = phi.variables().into_iter().collect();
        let mut ev = Evaluator {
            g,
            nodes: Vec::new(),
            free: Vec::new(),
            root: 0,
            vars,
            memo: HashMap::new(),
        };
        ev.root = ev.compile(phi);
        Ok(ev)
    }

    fn var(&self, x: &Var) -> usize {
        self.vars.binary_search(x).unwrap()
    }

    fn compile(&mut self, phi: &Formula) -> usize {
        let node = match phi {
            Formula::Eq(x, y) => Node::Eq(self.var(x), self.var(y)),
            Formula::Edge(x, y) => Node::Edge(self.var(x), self.var(y)),
            Formula::Rel(c, x, y) => Node::Rel(c.clone(), self.var(x), self.var(y)),
            Formula::Not(a) => Node::Not(self.compile(a)),
            Formula::Or(a, b) => {
                let a = self.compile(a);
                let b = self.compile(b);
                Node::Or(a, b)
            }
            Formula::Count(p, x, a) => {
                let body = self.compile(a);
                Node::Count(*p, self.var(x), body)
            }
        };
        let free = phi.free_vars().iter().map(|x| self.var(x)).collect();
        self.nodes.push(node);
        self.free.push(free);
        self.nodes.len() - 1
    }

    pub fn eval(&mut self, nu: &Assignment) -> Result<bool> {
        let mut env = vec![usize::MAX; self.vars.len()];
        for &i in &self.free[self.root] {
            let v = nu
                .get(&self.vars[i])
                .ok_or_else(|| Error::UnboundVariable(self.vars[i].to_string()))?;
            if v >= self.g.order() {
                return Err(Error::VertexOutOfRange(v));
            }
            env[i] = v;
        }
        Ok(self.eval_node(self.root, &mut env))
    }

    fn eval_node(&mut self, i: usize, env: &mut Vec<usize>) -> bool {
        let key_vals: Vec<usize> = self.free[i].iter().map(|&x| env[x]).collect();
        if let Some(&b) = self.memo.get(&(i, key_vals.clone())) {
            return b;
        }
        let g = self.g;
        let result = match &self.nodes[i] {
            Node::Eq(x, y) => env[*x] == env[*y],
            Node::Edge(x, y) => g.adjacent(env[*x], env[*y]),
            Node::Rel(c, x, y) => g.colour(env[*x], env[*y]) == Some(c),
            &Node::Not(a) => !self.eval_node(a, env),
            &Node::Or(a, b) => self.eval_node(a, env) || self.eval_node(b, env),
            &Node::Count(p, x, body) => {
                let saved = env[x];
                let mut count = 0;
                for v in 0..g.order() {
                    env[x] = v;
                    if self.eval_node(body, env) {
                        count += 1;
                        if count >= p {
                            break;
                        }
                    }
                }
                env[x] = saved;
                count >= p
            }
        };
        self.memo.insert((i, key_vals), result);
        result
    }
}

/// `(G, ν) ⊨ φ`.
pub fn eval(g: &ColouredGraph, phi: &Formula, nu: &Assignment) -> Result<bool> {
    Evaluator::new(g, phi)?.eval(nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn counting_semantics() {
        let g = path(3);
        let some = Formula::exists("x", Formula::eq("x", "x"));
        assert!(eval(&g, &some, &Assignment::new()).unwrap());
        let four = Formula::at_least(4, "x", Formula::truth());
        assert!(!eval(&g, &four, &Assignment::new()).unwrap());
        let three = Formula::at_least(3, "x", Formula::truth());
        assert!(eval(&g, &three, &Assignment::new()).unwrap());
    }

    #[test]
    fn adjacency_on_p3() {
        let g = path(3);
        let e = Formula::edge("x", "y");
        assert!(!eval(&g, &e, &Assignment::new().with("x", 0).with("y", 2)).unwrap());
        assert!(eval(&g, &e, &Assignment::new().with("x", 0).with("y", 1)).unwrap());
    }

    #[test]
    fn errors() {
        let g = path(3);
        assert_eq!(
            eval(&g, &Formula::edge("x", "y"), &Assignment::new().with("x", 0)).unwrap_err(),
            Error::UnboundVariable("y".into())
        );
        let r = Formula::rel(Colour::atom("blue"), "x", "x");
        assert!(matches!(
            eval(&g, &r, &Assignment::new().with("x", 0)),
            Err(Error::UnknownColour(_))
        ));
    }

    #[test]
    fn colour_relations() {
        let mut g = path(2);
        g.set_arc_colour(0, 1, Colour::atom("d")).unwrap();
        let r = Formula::rel(Colour::atom("d"), "x", "y");
        assert!(eval(&g, &r, &Assignment::new().with("x", 0).with("y", 1)).unwrap());
        assert!(!eval(&g, &r, &Assignment::new().with("x", 1).with("y", 0)).unwrap());
        let plain = Formula::rel(Colour::plain(), "x", "x");
        assert!(eval(&g, &plain, &Assignment::new().with("x", 1)).unwrap());
    }

    #[test]
    fn shadowed_variable() {
        // ∃x (E x y) with x already bound outside: the quantifier rebinds x
        let g = path(3);
        let phi = Formula::and(Formula::eq("x", "y"), Formula::exists("x", Formula::edge("x", "y")));
        assert!(eval(&g, &phi, &Assignment::new().with("x", 0).with("y", 0)).unwrap());
    }
}
