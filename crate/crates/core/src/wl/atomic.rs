use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};

/// The isomorphism type of the ordered substructure induced by a tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomType {
    pub k: usize,
    /// `equal[i]` is the first position holding the same vertex as `i`.
    pub equal: Vec<usize>,
    /// Row-major `k × k` adjacency of the entries.
    pub adjacency: Vec<bool>,
    /// Row-major `k × k` colours `χ(u_i, u_j)`, `None` where undefined.
    pub colours: Vec<Option<Colour>>,
}

pub fn atomic_type(g: &ColouredGraph, tuple: &[usize]) -> Result<AtomType> {
    if tuple.is_empty() {
        return Err(Error::InvalidArgument("empty tuple".into()));
    }
    if let Some(&v) = tuple.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange(v));
    }
    let k = tuple.len();
    let equal = (0..k)
        .map(|i| (0..=i).find(|&j| tuple[j] == tuple[i]).unwrap())
        .collect();
    let mut adjacency = Vec::with_capacity(k * k);
    let mut colours = Vec::with_capacity(k * k);
    for &a in tuple {
        for &b in tuple {
            adjacency.push(g.adjacent(a, b));
            colours.push(g.colour(a, b).cloned());
        }
    }
    Ok(AtomType {
        k,
        equal,
        adjacency,
        colours,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn loops_are_equal() {
        let g = path(3);
        assert_eq!(atomic_type(&g, &[0, 0]).unwrap(), atomic_type(&g, &[2, 2]).unwrap());
    }

    #[test]
    fn adjacency_differs() {
        let g = path(3);
        assert_ne!(atomic_type(&g, &[0, 1]).unwrap(), atomic_type(&g, &[0, 2]).unwrap());
    }

    #[test]
    fn asymmetric_arcs() {
        let mut g = path(2);
        g.set_arc_colour(0, 1, Colour::atom("out")).unwrap();
        assert_ne!(atomic_type(&g, &[0, 1]).unwrap(), atomic_type(&g, &[1, 0]).unwrap());
        assert!(atomic_type(&g, &[]).is_err());
        assert!(atomic_type(&g, &[3]).is_err());
    }
}
