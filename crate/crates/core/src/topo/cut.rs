use super::necklace::Necklace;
use super::patch::internal_graph;
use crate::error::Result;
use crate::graph::Subgraph;
use crate::surface::EmbeddedGraph;
use std::collections::BTreeSet;

/// The inside, outside and cut graph of a necklace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceCut {
    /// `I(B)`: the internal graphs of the non-trivial beads and the edges
    /// of the trivial ones.
    pub inside: Subgraph,
    /// Vertices in the interior of the region.
    pub interior: BTreeSet<usize>,
    /// Darts of the edges contained in the region.
    pub region_darts: Vec<usize>,
    /// `O(B)`.
    pub outside: Subgraph,
    /// `Cut(B) = O(B) \ art(B)`.
    pub cut: Subgraph,
}

impl NecklaceCut {
    /// Connected components of the cut graph.
    pub fn components(&self) -> Vec<Subgraph> {
        subgraph_components(&self.cut)
    }
}

/// Connected components of a subgraph, ordered by least vertex.
pub fn subgraph_components(h: &Subgraph) -> Vec<Subgraph> {
    let verts: Vec<usize> = h.vertices.iter().copied().collect();
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in &h.edges {
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Subgraph> = Default::default();
    for (i, &v) in verts.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().vertices.insert(v);
    }
    for &(a, b) in &h.edges {
        let r = find(&mut parent, idx(a));
        groups.get_mut(&r).unwrap().edges.insert((a, b));
    }
    groups.into_values().collect()
}

/// Removes the interior of the necklace region and then its articulation
/// vertices.
pub fn cut_graph(emb: &EmbeddedGraph, b: &Necklace) -> Result<NecklaceCut> {
    let g = emb.graph();
    let mut inside = Subgraph::default();
    let mut interior = BTreeSet::new();
    let mut interior_edges = BTreeSet::new();
    for bead in &b.beads {
        let q = &bead.patch.sps;
        match &bead.patch.boundary {
            None => {
                inside = inside.union(&q.subgraph());
            }
            Some(c) => {
                let i = internal_graph(emb, &bead.patch)?;
                let cyc = Subgraph::new(
                    c.iter().copied(),
                    (0..c.len()).map(|k| (c[k], c[(k + 1) % c.len()])),
                );
                interior.extend(i.vertices.difference(&cyc.vertices).copied());
                interior_edges.extend(i.edges.difference(&cyc.edges).copied());
                inside = inside.union(&i);
            }
        }
    }
    let region_darts = inside
        .edges
        .iter()
        .flat_map(|&(x, y)| {
            let e = g.edge_index(x, y).unwrap();
            [2 * e, 2 * e + 1]
        })
        .collect();
    let outside = Subgraph {
        vertices: (0..g.order()).filter(|v| !interior.contains(v)).collect(),
        edges: g
            .edges()
            .iter()
            .copied()
            .filter(|&(x, y)| !interior.contains(&x) && !interior.contains(&y) && !interior_edges.contains(&(x, y)))
            .collect(),
    };
    let art = b.art_vertices();
    let cut = Subgraph {
        vertices: outside.vertices.difference(&art).copied().collect(),
        edges: outside
            .edges
            .iter()
            .copied()
            .filter(|(x, y)| !art.contains(x) && !art.contains(y))
            .collect(),
    };
    Ok(NecklaceCut {
        inside,
        interior,
        region_darts,
        outside,
        cut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::standard::*;
    use crate::surface::is_planar;
    use crate::topo::find_reducing_necklace;

    #[test]
    fn three_by_three_cut_is_a_prism() {
        let e = torus_grid_embedding(3, 3);
        let b = find_reducing_necklace(&e).unwrap();
        let cut = cut_graph(&e, &b).unwrap();
        assert!(cut.interior.is_empty());
        assert_eq!(cut.outside, Subgraph::whole(e.graph()));
        let comps = cut.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices.len(), 6);
        assert_eq!(comps[0].edges.len(), 9);
        assert!(is_planar(&comps[0].to_graph(e.graph()).0));
    }

    #[test]
    fn toroidal_k5_cut_is_planar() {
        let e = toroidal_k5();
        let b = find_reducing_necklace(&e).unwrap();
        let cut = cut_graph(&e, &b).unwrap();
        for c in cut.components() {
            assert!(is_planar(&c.to_graph(e.graph()).0));
        }
    }
}
