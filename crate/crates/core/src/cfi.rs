//! Cai-Fürer-Immerman pairs.
//!
//! A base vertex `v` of degree `d` becomes a gadget with one middle vertex
//! per even-size subset `S` of its neighbours and two outer vertices
//! `a(v, w, 0)`, `a(v, w, 1)` per neighbour `w`; the middle vertex of `S`
//! is joined to `a(v, w, [w ∈ S])`. A base edge `vw` joins `a(v, w, i)` to
//! `a(w, v, i)`, except on the twisted edge, where it joins `a(v, w, i)`
//! to `a(w, v, 1 - i)`. Middle vertices are coloured by their base vertex
//! and outer vertices by their base arc.

use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};
use crate::wl::{distinguishes_with, WlConfig};

#[derive(Clone, Debug)]
pub struct CfiPair {
    pub base: ColouredGraph,
    pub untwisted: ColouredGraph,
    pub twisted: ColouredGraph,
    /// The base edge whose connections are crossed in `twisted`.
    pub twist: (usize, usize),
}

/// Number of vertices of either output graph.
pub fn cfi_order(base: &ColouredGraph) -> usize {
    (0..base.order())
        .map(|v| {
            let d = base.degree(v);
            (1usize << (d - 1)) + 2 * d
        })
        .sum()
}

struct Layout {
    /// First middle vertex of each gadget.
    middle: Vec<usize>,
    /// First outer vertex of each gadget.
    outer: Vec<usize>,
    n: usize,
}

fn layout(base: &ColouredGraph) -> Layout {
    let mut middle = Vec::new();
    let mut outer = Vec::new();
    let mut next = 0;
    for v in 0..base.order() {
        let d = base.degree(v);
        middle.push(next);
        next += 1 << (d - 1);
        outer.push(next);
        next += 2 * d;
    }
    Layout { middle, outer, n: next }
}

fn build(base: &ColouredGraph, lay: &Layout, twist: Option<(usize, usize)>) -> ColouredGraph {
    let outer = |v: usize, w: usize, bit: usize| {
        let i = base.neighbours(v).iter().position(|&x| x == w).unwrap();
        lay.outer[v] + 2 * i + bit
    };
    let mut edges = Vec::new();
    let mut colours = vec![Colour::plain(); lay.n];
    for v in 0..base.order() {
        let nbrs = base.neighbours(v);
        let d = nbrs.len();
        let mut m = lay.middle[v];
        for s in 0u32..(1 << d) {
            if s.count_ones() % 2 != 0 {
                continue;
            }
            colours[m] = Colour::atom(&format!("m{v}"));
            for (i, &w) in nbrs.iter().enumerate() {
                edges.push((m, outer(v, w, ((s >> i) & 1) as usize)));
            }
            m += 1;
        }
        for &w in nbrs {
            for bit in 0..2 {
                colours[outer(v, w, bit)] = Colour::atom(&format!("a{v}-{w}"));
            }
        }
    }
    for &(v, w) in base.edges() {
        let crossed = twist == Some((v, w));
        for bit in 0..2 {
            let other = if crossed { 1 - bit } else { bit };
            edges.push((outer(v, w, bit), outer(w, v, other)));
        }
    }
    ColouredGraph::from_edges(lay.n, &edges)
        .with_vertex_colours(colours)
        .expect("one colour per vertex")
}

/// The untwisted and twisted CFI graphs over `base`, twisting its least
/// edge.
pub fn cfi_pair(base: &ColouredGraph) -> Result<CfiPair> {
    if base.size() == 0 {
        return Err(Error::InvalidArgument("base has no edges".into()));
    }
    if let Some(v) = (0..base.order()).find(|&v| base.degree(v) < 2) {
        return Err(Error::InvalidArgument(format!("base vertex {v} has degree {}", base.degree(v))));
    }
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let lay = layout(base);
    let twist = base.edges()[0];
    Ok(CfiPair {
        base: base.clone(),
        untwisted: build(base, &lay, None),
        twisted: build(base, &lay, Some(twist)),
        twist,
    })
}

/// The least `k ≤ k_max` for which k-WL distinguishes the pair.
pub fn cfi_threshold(pair: &CfiPair, k_max: usize, cfg: &WlConfig) -> Result<Option<usize>> {
    for k in 1..=k_max {
        if distinguishes_with(&pair.untwisted, &pair.twisted, k, cfg)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn sizes() {
        let p = cfi_pair(&complete(4)).unwrap();
        assert_eq!(p.untwisted.order(), 40);
        assert_eq!(cfi_order(&complete(4)), 40);
        assert_eq!(p.twist, (0, 1));
        assert_eq!(cfi_pair(&cycle(3)).unwrap().twisted.order(), 18);
    }

    #[test]
    fn cubic_base_gives_cubic_outputs() {
        let p = cfi_pair(&complete(4)).unwrap();
        for g in [&p.untwisted, &p.twisted] {
            assert!((0..g.order()).all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn rejects_leaves() {
        assert!(cfi_pair(&path(3)).is_err());
    }

    #[test]
    fn cycle_base_splits_into_layers() {
        let p = cfi_pair(&cycle(3)).unwrap();
        assert!(!p.untwisted.is_connected());
        assert!(p.twisted.is_connected());
    }

    #[test]
    fn thresholds() {
        let cfg = WlConfig::default();
        assert_eq!(cfi_threshold(&cfi_pair(&cycle(3)).unwrap(), 3, &cfg).unwrap(), Some(2));
        assert_eq!(cfi_threshold(&cfi_pair(&complete(4)).unwrap(), 2, &cfg).unwrap(), None);
    }
}
