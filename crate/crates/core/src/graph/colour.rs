use std::fmt;
use std::sync::Arc;

/// A colour term: an atom, a finite multiset of colours, or an
/// individualisation marker wrapping the colour it replaces.
///
/// Multisets are stored sorted, so derived equality and ordering are
/// structural and insensitive to insertion order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Atom(Arc<str>),
    Multiset(Vec<Colour>),
    Individual { index: usize, base: Box<Colour> },
}

impl Colour {
    pub fn atom(name: &str) -> Colour {
        Colour::Atom(Arc::from(name))
    }

    /// The designated colour of uncoloured graphs.
    pub fn plain() -> Colour {
        Colour::atom("1")
    }

    pub fn multiset<I: IntoIterator<Item = Colour>>(items: I) -> Colour {
        let mut v: Vec<Colour> = items.into_iter().collect();
        v.sort();
        Colour::Multiset(v)
    }

    pub fn empty() -> Colour {
        Colour::Multiset(Vec::new())
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Colour::Atom(_))
    }
}

impl fmt::Debug for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colour::Atom(a) => write!(f, "{a}"),
            Colour::Multiset(items) => {
                write!(f, "{{{{")?;
                for (i, c) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "}}}}")
            }
            Colour::Individual { index, base } => write!(f, "#{index}[{base}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_ignores_order() {
        let a = Colour::atom("a");
        let b = Colour::atom("b");
        assert_eq!(
            Colour::multiset([a.clone(), b.clone(), a.clone()]),
            Colour::multiset([b, a.clone(), a])
        );
    }

    #[test]
    fn nesting_is_structural() {
        let a = Colour::atom("a");
        let inner = Colour::multiset([a.clone()]);
        assert_ne!(Colour::multiset([inner.clone()]), inner);
        assert_ne!(Colour::multiset([a.clone(), a.clone()]), Colour::multiset([a]));
    }

    #[test]
    fn display() {
        let c = Colour::multiset([Colour::atom("x"), Colour::empty()]);
        assert_eq!(c.to_string(), "{{x,{{}}}}");
    }
}
