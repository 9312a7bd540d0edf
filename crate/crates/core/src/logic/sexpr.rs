//! S-expression syntax for formulas.
//!
//! ```text
//! (= x y)  (E x y)  (R colour x y)
//! (not φ)  (or φ ψ …)  (and φ ψ …)  (implies φ ψ)
//! (geq p x φ)  (exists x φ)  (forall x φ)  true  false
//! colour := symbol | (ms colour …) | (ind i colour)
//! ```
//!
//! The printer re-sugars `¬(¬φ ∨ ¬ψ)` as `and`, `¬∃x¬φ` as `forall` and
//! `∃^{≥1}` as `exists`, so `parse(print(φ)) == φ`.

use super::formula::{Formula, Var};
use crate::error::{Error, Result};
use crate::graph::Colour;

#[derive(Debug, Clone, PartialEq)]
enum Sx {
    Atom(String),
    List(Vec<Sx>),
}

fn tokenize(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                out.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn read(tokens: &[String], pos: &mut usize) -> Result<Sx> {
    let t = tokens
        .get(*pos)
        .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
    *pos += 1;
    match t.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos).map(String::as_str) {
                    Some(")") => {
                        *pos += 1;
                        return Ok(Sx::List(items));
                    }
                    Some(_) => items.push(read(tokens, pos)?),
                    None => return Err(Error::Parse("unclosed parenthesis".into())),
                }
            }
        }
        ")" => Err(Error::Parse("unexpected )".into())),
        a => Ok(Sx::Atom(a.to_string())),
    }
}

fn var(s: &Sx) -> Result<Var> {
    match s {
        Sx::Atom(a) => Ok(Var::new(a)),
        _ => Err(Error::Parse(format!("expected variable, got {s:?}"))),
    }
}

fn colour(s: &Sx) -> Result<Colour> {
    match s {
        Sx::Atom(a) => Ok(Colour::atom(a)),
        Sx::List(items) => match items.first() {
            Some(Sx::Atom(h)) if h == "ms" => Ok(Colour::multiset(
                items[1..].iter().map(colour).collect::<Result<Vec<_>>>()?,
            )),
            Some(Sx::Atom(h)) if h == "ind" && items.len() == 3 => Ok(Colour::Individual {
                index: number(&items[1])?,
                base: Box::new(colour(&items[2])?),
            }),
            _ => Err(Error::Parse(format!("bad colour {s:?}"))),
        },
    }
}

fn number(s: &Sx) -> Result<usize> {
    match s {
        Sx::Atom(a) => a
            .parse()
            .map_err(|_| Error::Parse(format!("expected number, got {a}"))),
        _ => Err(Error::Parse(format!("expected number, got {s:?}"))),
    }
}

fn formula(s: &Sx) -> Result<Formula> {
    let items = match s {
        Sx::Atom(a) if a == "true" => return Ok(Formula::truth()),
        Sx::Atom(a) if a == "false" => return Ok(Formula::falsity()),
        Sx::Atom(a) => return Err(Error::Parse(format!("unexpected symbol {a}"))),
        Sx::List(items) => items,
    };
    let head = match items.first() {
        Some(Sx::Atom(h)) => h.as_str(),
        _ => return Err(Error::Parse("expected operator".into())),
    };
    let arity = |n: usize| -> Result<()> {
        if items.len() == n + 1 {
            Ok(())
        } else {
            Err(Error::Parse(format!("{head} expects {n} arguments")))
        }
    };
    match head {
        "=" => {
            arity(2)?;
            Ok(Formula::Eq(var(&items[1])?, var(&items[2])?))
        }
        "E" => {
            arity(2)?;
            Ok(Formula::Edge(var(&items[1])?, var(&items[2])?))
        }
        "R" => {
            arity(3)?;
            Ok(Formula::Rel(colour(&items[1])?, var(&items[2])?, var(&items[3])?))
        }
        "not" => {
            arity(1)?;
            Ok(Formula::not(formula(&items[1])?))
        }
        "or" | "and" => {
            if items.len() < 3 {
                return Err(Error::Parse(format!("{head} expects at least 2 arguments")));
            }
            let mut acc = formula(&items[1])?;
            for it in &items[2..] {
                let next = formula(it)?;
                acc = if head == "or" {
                    Formula::or(acc, next)
                } else {
                    Formula::and(acc, next)
                };
            }
            Ok(acc)
        }
        "implies" => {
            arity(2)?;
            Ok(Formula::implies(formula(&items[1])?, formula(&items[2])?))
        }
        "geq" => {
            arity(3)?;
            let p = number(&items[1])?;
            if p == 0 {
                return Err(Error::Parse("geq needs p >= 1".into()));
            }
            Ok(Formula::at_least(p, var(&items[2])?, formula(&items[3])?))
        }
        "exists" => {
            arity(2)?;
            Ok(Formula::exists(var(&items[1])?, formula(&items[2])?))
        }
        "forall" => {
            arity(2)?;
            Ok(Formula::forall(var(&items[1])?, formula(&items[2])?))
        }
        _ => Err(Error::Parse(format!("unknown operator {head}"))),
    }
}

pub fn parse(text: &str) -> Result<Formula> {
    let tokens = tokenize(text);
    let mut pos = 0;
    let sx = read(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    formula(&sx)
}

fn print_colour(c: &Colour, out: &mut String) {
    match c {
        Colour::Atom(a) => out.push_str(a),
        Colour::Multiset(items) => {
            out.push_str("(ms");
            for i in items {
                out.push(' ');
                print_colour(i, out);
            }
            out.push(')');
        }
        Colour::Individual { index, base } => {
            out.push_str(&format!("(ind {index} "));
            print_colour(base, out);
            out.push(')');
        }
    }
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Eq(x, y) => out.push_str(&format!("(= {x} {y})")),
        Formula::Edge(x, y) => out.push_str(&format!("(E {x} {y})")),
        Formula::Rel(c, x, y) => {
            out.push_str("(R ");
            print_colour(c, out);
            out.push_str(&format!(" {x} {y})"));
        }
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Or(a, b) => match (a.as_ref(), b.as_ref()) {
                (Formula::Not(a), Formula::Not(b)) => {
                    out.push_str("(and ");
                    write(a, out);
                    out.push(' ');
                    write(b, out);
                    out.push(')');
                }
                _ => {
                    out.push_str("(not ");
                    write(inner, out);
                    out.push(')');
                }
            },
            Formula::Count(1, x, body) if matches!(body.as_ref(), Formula::Not(_)) => {
                let Formula::Not(phi) = body.as_ref() else { unreachable!() };
                out.push_str(&format!("(forall {x} "));
                write(phi, out);
                out.push(')');
            }
            _ => {
                out.push_str("(not ");
                write(inner, out);
                out.push(')');
            }
        },
        Formula::Or(a, b) => {
            out.push_str("(or ");
            write(a, out);
            out.push(' ');
            write(b, out);
            out.push(')');
        }
        Formula::Count(1, x, body) => {
            out.push_str(&format!("(exists {x} "));
            write(body, out);
            out.push(')');
        }
        Formula::Count(p, x, body) => {
            out.push_str(&format!("(geq {p} {x} "));
            write(body, out);
            out.push(')');
        }
    }
}

pub fn print(f: &Formula) -> String {
    let mut s = String::new();
    write(f, &mut s);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_example_parses() {
        let f = parse("(geq 2 x (and (E x y) (not (= x y))))").unwrap();
        assert_eq!(print(&f), "(geq 2 x (and (E x y) (not (= x y))))");
        assert_eq!(f.width(), 2);
    }

    #[test]
    fn sugar_round_trips() {
        for s in [
            "(forall x (exists y (E x y)))",
            "(or (= x y) (R red x y))",
            "(R (ms a (ms) (ind 2 b)) x x)",
            "(not (or (E x y) (not (= y z))))",
            "(and (not (E x y)) (geq 3 z (E y z)))",
        ] {
            let f = parse(s).unwrap();
            assert_eq!(print(&f), s);
            assert_eq!(parse(&print(&f)).unwrap(), f);
        }
    }

    #[test]
    fn nary_and_constants() {
        let f = parse("(and (E x y) (E y z) (E z x))").unwrap();
        assert_eq!(f.width(), 3);
        assert_eq!(parse("true").unwrap(), Formula::truth());
        assert_eq!(parse("false").unwrap(), Formula::falsity());
        let imp = parse("(implies (E x y) (= x y))").unwrap();
        assert_eq!(imp, Formula::or(Formula::not(Formula::edge("x", "y")), Formula::eq("x", "y")));
    }

    #[test]
    fn errors() {
        for bad in ["(geq 0 x (= x x))", "(E x)", "(foo x y)", "(= x y", ")", "(= x y) z"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }
}
