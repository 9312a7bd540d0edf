use super::{Colour, ColouredGraph, Subgraph};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Result of contracting a vertex set to a single vertex.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: ColouredGraph,
    /// `map[v]` is the vertex of the quotient that `v` becomes.
    pub map: Vec<usize>,
    /// The id of the contracted vertex (always the last one).
    pub contracted: usize,
}

/// Identifies all vertices of `w` into one fresh vertex.
///
/// The surviving vertices keep their relative order and are numbered
/// `0..n-|W|`; the contracted vertex is `n-|W|`. Its loop colour is the
/// empty multiset and an arc between it and `u` is coloured by the
/// multiset of the arc colours between `u` and the members of `w`
/// adjacent to `u`.
pub fn quotient_contract(g: &ColouredGraph, w: &[usize]) -> Result<Quotient> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = g.order();
    let mut in_w = vec![false; n];
    for &x in w {
        if x >= n {
            return Err(Error::VertexOutOfRange(x));
        }
        in_w[x] = true;
    }
    let mut map = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        if !in_w[v] {
            map[v] = next;
            next += 1;
        }
    }
    let contracted = next;
    for v in 0..n {
        if in_w[v] {
            map[v] = contracted;
        }
    }
    let mut edges = BTreeSet::new();
    for &(u, v) in g.edges() {
        match (in_w[u], in_w[v]) {
            (true, true) => {}
            _ => {
                edges.insert((map[u].min(map[v]), map[u].max(map[v])));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let mut q = ColouredGraph::from_edges(contracted + 1, &edges);
    for v in 0..n {
        if !in_w[v] {
            q.set_vertex_colour(map[v], g.vertex_colour(v).clone())?;
        }
    }
    q.set_vertex_colour(contracted, Colour::empty())?;
    for &(u, v) in g.edges() {
        if !in_w[u] && !in_w[v] {
            q.set_arc_colour(map[u], map[v], g.colour(u, v).unwrap().clone())?;
            q.set_arc_colour(map[v], map[u], g.colour(v, u).unwrap().clone())?;
        }
    }
    for u in 0..n {
        if in_w[u] {
            continue;
        }
        let ws: Vec<usize> = g.neighbours(u).iter().copied().filter(|&x| in_w[x]).collect();
        if ws.is_empty() {
            continue;
        }
        let to_w = Colour::multiset(ws.iter().map(|&x| g.colour(u, x).unwrap().clone()));
        let from_w = Colour::multiset(ws.iter().map(|&x| g.colour(x, u).unwrap().clone()));
        q.set_arc_colour(map[u], contracted, to_w)?;
        q.set_arc_colour(contracted, map[u], from_w)?;
    }
    Ok(Quotient {
        graph: q,
        map,
        contracted,
    })
}

/// Connected components of `G \ excluded`, each sorted, ordered by least vertex.
pub fn connected_components(g: &ColouredGraph, excluded: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &x in excluded {
        if x < n {
            seen[x] = true;
        }
    }
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// An `H`-bridge: a residual edge with both ends in `H`, or a component
/// of `G \ H` together with its attachments and the edges meeting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
    pub attachment: BTreeSet<usize>,
}

impl Bridge {
    pub fn is_trivial(&self) -> bool {
        self.edges.len() == 1 && self.vertices.len() == 2 && self.attachment.len() == 2
    }

    /// Vertices of the bridge not in `H`.
    pub fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .copied()
            .filter(move |v| !self.attachment.contains(v))
    }
}

/// All `H`-bridges of `G`: non-trivial ones ordered by least interior
/// vertex, followed by trivial ones in edge order.
pub fn find_bridges(g: &ColouredGraph, h: &Subgraph) -> Result<Vec<Bridge>> {
    if !h.is_subgraph_of(g) {
        return Err(Error::NotSubgraph("H is not a subgraph of G".into()));
    }
    let mut out = Vec::new();
    for comp in connected_components(g, &h.vertices) {
        let inside: BTreeSet<usize> = comp.iter().copied().collect();
        let mut vertices = inside.clone();
        let mut edges = BTreeSet::new();
        let mut attachment = BTreeSet::new();
        for &u in &comp {
            for &w in g.neighbours(u) {
                edges.insert((u.min(w), u.max(w)));
                if !inside.contains(&w) {
                    attachment.insert(w);
                    vertices.insert(w);
                }
            }
        }
        out.push(Bridge {
            vertices,
            edges,
            attachment,
        });
    }
    for &(u, v) in g.edges() {
        if h.vertices.contains(&u) && h.vertices.contains(&v) && !h.edges.contains(&(u, v)) {
            out.push(Bridge {
                vertices: [u, v].into_iter().collect(),
                edges: [(u, v)].into_iter().collect(),
                attachment: [u, v].into_iter().collect(),
            });
        }
    }
    Ok(out)
}

/// True iff `|G| > k` and removing fewer than `k` vertices never
/// disconnects the graph. Exhaustive over separators.
pub fn is_k_connected(g: &ColouredGraph, k: usize) -> bool {
    let n = g.order();
    if k == 0 || n <= k {
        return false;
    }
    let mut sep = Vec::new();
    fn rec(g: &ColouredGraph, k: usize, start: usize, sep: &mut Vec<usize>) -> bool {
        let removed: BTreeSet<usize> = sep.iter().copied().collect();
        if connected_components(g, &removed).len() > 1 {
            return false;
        }
        if sep.len() + 1 == k {
            return true;
        }
        for v in start..g.order() {
            sep.push(v);
            let ok = rec(g, k, v + 1, sep);
            sep.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(g, k, 0, &mut sep)
}

/// Gives `vs[i]` the fresh colour `Individual { index: i, .. }`.
pub fn individualise(g: &ColouredGraph, vs: &[usize]) -> Result<ColouredGraph> {
    let mut seen = BTreeSet::new();
    let mut out = g.clone();
    for (i, &v) in vs.iter().enumerate() {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(Error::DuplicateVertex(v));
        }
        let base = Box::new(g.vertex_colour(v).clone());
        out.set_vertex_colour(v, Colour::Individual { index: i, base })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn full_contraction() {
        let g = complete(4);
        let q = quotient_contract(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(q.graph.order(), 1);
        assert_eq!(q.graph.size(), 0);
        assert_eq!(q.graph.vertex_colour(0), &Colour::empty());
    }

    #[test]
    fn path_ends_contracted() {
        let g = path(3);
        let q = quotient_contract(&g, &[0, 2]).unwrap();
        assert_eq!(q.graph.order(), 2);
        assert_eq!(q.graph.edges(), &[(0, 1)]);
        let pair = Colour::multiset([Colour::plain(), Colour::plain()]);
        assert_eq!(q.graph.colour(1, 0), Some(&pair));
        assert_eq!(q.graph.colour(0, 1), Some(&pair));
        assert_eq!(q.contracted, 1);
    }

    #[test]
    fn quotient_errors() {
        let g = path(3);
        assert_eq!(quotient_contract(&g, &[]).unwrap_err(), Error::EmptySet);
        assert_eq!(
            quotient_contract(&g, &[5]).unwrap_err(),
            Error::VertexOutOfRange(5)
        );
    }

    #[test]
    fn bridges_of_k4_over_triangle() {
        let g = complete(4);
        let h = Subgraph::induced(&g, [0, 1, 2]);
        let b = find_bridges(&g, &h).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].attachment, [0, 1, 2].into_iter().collect());
        assert_eq!(b[0].edges.len(), 3);
        assert!(find_bridges(&g, &Subgraph::whole(&g)).unwrap().is_empty());
    }

    #[test]
    fn bridges_of_c5_over_path() {
        let g = cycle(5);
        let h = Subgraph::new([0, 1, 2], [(0, 1), (1, 2)]);
        let b = find_bridges(&g, &h).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].attachment, [0, 2].into_iter().collect());
        assert_eq!(b[0].interior().collect::<Vec<_>>(), vec![3, 4]);
    }

    #[test]
    fn trivial_bridge() {
        let g = cycle(4);
        let h = Subgraph::new([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)]);
        let b = find_bridges(&g, &h).unwrap();
        assert_eq!(b.len(), 1);
        assert!(b[0].is_trivial());
        let bad = Subgraph::new([0, 2], [(0, 2)]);
        assert!(find_bridges(&g, &bad).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(is_k_connected(&complete(4), 3));
        assert!(!is_k_connected(&complete(4), 4));
        assert!(!is_k_connected(&cycle(5), 3));
        assert!(is_k_connected(&cycle(5), 2));
        assert!(is_k_connected(&petersen(), 3));
        assert!(!is_k_connected(&path(3), 2));
    }

    #[test]
    fn components() {
        let g = cycle(6);
        let comps = connected_components(&g, &[0, 3].into_iter().collect());
        assert_eq!(comps, vec![vec![1, 2], vec![4, 5]]);
        assert_eq!(connected_components(&g, &BTreeSet::new()).len(), 1);
        assert!(connected_components(&g, &(0..6).collect()).is_empty());
    }

    #[test]
    fn individualise_checks() {
        let g = cycle(4);
        assert_eq!(individualise(&g, &[]).unwrap(), g);
        assert_eq!(
            individualise(&g, &[1, 1]).unwrap_err(),
            Error::DuplicateVertex(1)
        );
        let h = individualise(&g, &[2]).unwrap();
        assert!(matches!(h.vertex_colour(2), Colour::Individual { index: 0, .. }));
    }
}
