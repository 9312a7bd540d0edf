//! Finite simple graphs with arc colourings.
//!
//! Vertices are `0..n`. Every vertex carries a colour `χ(v,v)` and both
//! orientations of every edge carry a colour, which may differ.

mod colour;
pub mod json;
mod ops;

pub use colour::Colour;
pub use ops::{
    connected_components, find_bridges, individualise, is_k_connected, quotient_contract, Bridge,
    Quotient,
};

use crate::error::{Error, Result};
use std::collections::{BTreeSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColouredGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    vertex_colours: Vec<Colour>,
    // arc_colours[2e] = χ(u,v), arc_colours[2e+1] = χ(v,u) for edges[e] = (u,v), u < v
    arc_colours: Vec<Colour>,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl ColouredGraph {
    /// An uncoloured graph: every vertex and arc gets [`Colour::plain`].
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<ColouredGraph> {
        let mut sorted = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sorted.push(norm(u, v));
        }
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let m = sorted.len();
        Ok(ColouredGraph {
            n,
            edges: sorted,
            adj,
            vertex_colours: vec![Colour::plain(); n],
            arc_colours: vec![Colour::plain(); 2 * m],
        })
    }

    /// Panicking constructor for literals in tests and generators.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> ColouredGraph {
        ColouredGraph::new(n, edges).expect("valid edge list")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        self.edges.binary_search(&norm(u, v)).ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertex_colour(&self, v: usize) -> &Colour {
        &self.vertex_colours[v]
    }

    pub fn vertex_colours(&self) -> &[Colour] {
        &self.vertex_colours
    }

    /// `χ(u,v)`: the vertex colour when `u == v`, the arc colour for an
    /// edge, `None` otherwise.
    pub fn colour(&self, u: usize, v: usize) -> Option<&Colour> {
        if u == v {
            return self.vertex_colours.get(u);
        }
        let e = self.edge_index(u, v)?;
        Some(&self.arc_colours[2 * e + usize::from(u > v)])
    }

    pub fn set_vertex_colour(&mut self, v: usize, c: Colour) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v));
        }
        self.vertex_colours[v] = c;
        Ok(())
    }

    pub fn set_arc_colour(&mut self, u: usize, v: usize, c: Colour) -> Result<()> {
        let e = self
            .edge_index(u, v)
            .ok_or_else(|| Error::NotAnEdge(format!("{u}-{v}")))?;
        self.arc_colours[2 * e + usize::from(u > v)] = c;
        Ok(())
    }

    pub fn with_vertex_colours(mut self, colours: Vec<Colour>) -> Result<ColouredGraph> {
        if colours.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} vertex colours for {} vertices",
                colours.len(),
                self.n
            )));
        }
        self.vertex_colours = colours;
        Ok(self)
    }

    /// True iff every vertex and every arc carries the same colour.
    pub fn is_uncoloured(&self) -> bool {
        let c = match self.vertex_colours.first() {
            Some(c) => c,
            None => return true,
        };
        self.vertex_colours.iter().all(|x| x == c) && self.arc_colours.iter().all(|x| x == c)
    }

    /// All colours occurring in the graph, sorted and deduplicated.
    pub fn colour_universe(&self) -> Vec<Colour> {
        let mut all: Vec<Colour> = self
            .vertex_colours
            .iter()
            .chain(self.arc_colours.iter())
            .cloned()
            .collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || connected_components(self, &BTreeSet::new()).len() == 1
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The graph induced on `vertices`, with vertex `i` of the result
    /// corresponding to `vertices[i]`. Colours are inherited.
    pub fn induced(&self, vertices: &[usize]) -> ColouredGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        self.rebuild(vertices, &edges)
    }

    /// The subgraph with the given vertices and those of `edges` whose
    /// endpoints are both kept. Vertex `i` of the result is `vertices[i]`.
    pub fn subgraph(&self, vertices: &[usize], edges: &[(usize, usize)]) -> ColouredGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let local: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        self.rebuild(vertices, &local)
    }

    fn rebuild(&self, vertices: &[usize], local_edges: &[(usize, usize)]) -> ColouredGraph {
        let mut g = ColouredGraph::from_edges(vertices.len(), local_edges);
        for (i, &v) in vertices.iter().enumerate() {
            g.vertex_colours[i] = self.vertex_colours[v].clone();
        }
        for e in 0..g.edges.len() {
            let (a, b) = g.edges[e];
            let (u, v) = (vertices[a], vertices[b]);
            g.arc_colours[2 * e] = self.colour(u, v).expect("edge").clone();
            g.arc_colours[2 * e + 1] = self.colour(v, u).expect("edge").clone();
        }
        g
    }

    /// The image of the graph under the vertex bijection `perm`
    /// (vertex `v` becomes `perm[v]`).
    pub fn permute(&self, perm: &[usize]) -> ColouredGraph {
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let mut g = ColouredGraph::from_edges(self.n, &edges);
        for v in 0..self.n {
            g.vertex_colours[perm[v]] = self.vertex_colours[v].clone();
        }
        for &(u, v) in &self.edges {
            g.set_arc_colour(perm[u], perm[v], self.colour(u, v).unwrap().clone())
                .unwrap();
            g.set_arc_colour(perm[v], perm[u], self.colour(v, u).unwrap().clone())
                .unwrap();
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &ColouredGraph) -> ColouredGraph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        let mut g = ColouredGraph::from_edges(self.n + other.n, &edges);
        g.vertex_colours = self
            .vertex_colours
            .iter()
            .chain(other.vertex_colours.iter())
            .cloned()
            .collect();
        for (h, shift) in [(self, 0), (other, off)] {
            for &(u, v) in &h.edges {
                g.set_arc_colour(u + shift, v + shift, h.colour(u, v).unwrap().clone())
                    .unwrap();
                g.set_arc_colour(v + shift, u + shift, h.colour(v, u).unwrap().clone())
                    .unwrap();
            }
        }
        g
    }

    /// Checks that `perm` is a colour-preserving isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &ColouredGraph, perm: &[usize]) -> bool {
        if self.n != other.n || self.size() != other.size() || perm.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..self.n).all(|v| self.vertex_colours[v] == other.vertex_colours[perm[v]])
            && self.edges.iter().all(|&(u, v)| {
                other.adjacent(perm[u], perm[v])
                    && self.colour(u, v) == other.colour(perm[u], perm[v])
                    && self.colour(v, u) == other.colour(perm[v], perm[u])
            })
    }
}

/// A subgraph given by vertex and edge sets of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subgraph {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Subgraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Subgraph
    where
        V: IntoIterator<Item = usize>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| norm(u, v)).collect();
        let mut vertices: BTreeSet<usize> = vertices.into_iter().collect();
        for &(u, v) in &edges {
            vertices.insert(u);
            vertices.insert(v);
        }
        Subgraph { vertices, edges }
    }

    /// The subgraph of `g` induced on `vertices`.
    pub fn induced(g: &ColouredGraph, vertices: impl IntoIterator<Item = usize>) -> Subgraph {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let edges = g
            .edges()
            .iter()
            .copied()
            .filter(|(u, v)| vertices.contains(u) && vertices.contains(v))
            .collect();
        Subgraph { vertices, edges }
    }

    pub fn whole(g: &ColouredGraph) -> Subgraph {
        Subgraph {
            vertices: (0..g.order()).collect(),
            edges: g.edges().iter().copied().collect(),
        }
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&norm(u, v))
    }

    pub fn is_subgraph_of(&self, g: &ColouredGraph) -> bool {
        self.vertices.iter().all(|&v| v < g.order())
            && self.edges.iter().all(|&(u, v)| {
                g.adjacent(u, v) && self.vertices.contains(&u) && self.vertices.contains(&v)
            })
    }

    pub fn union(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    /// The subgraph as a standalone graph, plus the map from new to old ids.
    pub fn to_graph(&self, g: &ColouredGraph) -> (ColouredGraph, Vec<usize>) {
        let verts: Vec<usize> = self.vertices.iter().copied().collect();
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        (g.subgraph(&verts, &edges), verts)
    }
}

/// Small named graphs used by tests, experiments and the CLI.
pub mod families {
    use super::ColouredGraph;

    pub fn path(n: usize) -> ColouredGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        ColouredGraph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> ColouredGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColouredGraph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> ColouredGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        ColouredGraph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> ColouredGraph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        ColouredGraph::from_edges(a + b, &edges)
    }

    /// The `r × c` grid on the torus; vertex `(i, j)` is `i * c + j`.
    pub fn torus_grid(r: usize, c: usize) -> ColouredGraph {
        let mut edges = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                edges.push((v, i * c + (j + 1) % c));
                edges.push((v, ((i + 1) % r) * c + j));
            }
        }
        ColouredGraph::from_edges(r * c, &edges)
    }

    pub fn petersen() -> ColouredGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        ColouredGraph::from_edges(10, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(ColouredGraph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(ColouredGraph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange(2)));
        assert_eq!(
            ColouredGraph::new(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn asymmetric_arc_colours() {
        let mut g = path(2);
        g.set_arc_colour(0, 1, Colour::atom("f")).unwrap();
        assert_eq!(g.colour(0, 1), Some(&Colour::atom("f")));
        assert_eq!(g.colour(1, 0), Some(&Colour::plain()));
        assert_eq!(g.colour(0, 0), Some(&Colour::plain()));
        assert!(!g.is_uncoloured());
    }

    #[test]
    fn permute_is_isomorphism() {
        let mut g = path(4);
        g.set_arc_colour(1, 2, Colour::atom("r")).unwrap();
        let perm = [2, 0, 3, 1];
        let h = g.permute(&perm);
        assert!(g.is_isomorphism(&h, &perm));
        assert!(!g.is_isomorphism(&h, &[0, 1, 2, 3]));
    }

    #[test]
    fn torus_grid_counts() {
        let g = torus_grid(3, 3);
        assert_eq!((g.order(), g.size()), (9, 18));
        assert!(g.neighbours(0).len() == 4);
        assert_eq!(petersen().size(), 15);
    }

    #[test]
    fn induced_keeps_colours() {
        let mut g = cycle(5);
        g.set_vertex_colour(3, Colour::atom("red")).unwrap();
        g.set_arc_colour(3, 4, Colour::atom("x")).unwrap();
        let h = g.induced(&[3, 4]);
        assert_eq!(h.vertex_colour(0), &Colour::atom("red"));
        assert_eq!(h.colour(0, 1), Some(&Colour::atom("x")));
        assert_eq!(h.size(), 1);
    }
}
