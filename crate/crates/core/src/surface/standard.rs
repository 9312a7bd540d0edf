//! Explicit embeddings used as fixtures and in the bundled corpus.

use super::embedding::EmbeddedGraph;
use crate::graph::families::{complete, complete_bipartite, torus_grid};

/// The `r × c` torus grid with every vertex rotating right, up, left, down.
pub fn torus_grid_embedding(r: usize, c: usize) -> EmbeddedGraph {
    assert!(r >= 3 && c >= 3, "torus grid needs r, c >= 3");
    let g = torus_grid(r, c);
    let rot = (0..r * c)
        .map(|v| {
            let (i, j) = (v / c, v % c);
            vec![
                i * c + (j + 1) % c,
                ((i + r - 1) % r) * c + j,
                i * c + (j + c - 1) % c,
                ((i + 1) % r) * c + j,
            ]
        })
        .collect();
    let m = g.size();
    EmbeddedGraph::new(g, rot, vec![1; m]).expect("torus grid rotation")
}

/// `K5` on the torus: vertex `i` rotates `i+1, i+2, i+4, i+3` (mod 5),
/// giving five faces.
pub fn toroidal_k5() -> EmbeddedGraph {
    let rot = (0..5)
        .map(|i| [1, 2, 4, 3].iter().map(|x| (i + x) % 5).collect())
        .collect();
    EmbeddedGraph::new(complete(5), rot, vec![1; 10]).expect("toroidal K5 rotation")
}

/// `K3,3` on the torus with sides `{0,1,2}` and `{3,4,5}`, three hexagonal faces.
pub fn toroidal_k33() -> EmbeddedGraph {
    let rot = (0..6)
        .map(|v| if v < 3 { vec![3, 4, 5] } else { vec![0, 1, 2] })
        .collect();
    EmbeddedGraph::new(complete_bipartite(3, 3), rot, vec![1; 9]).expect("toroidal K3,3 rotation")
}

/// Two `3 × 3` torus grids joined by the edge `0–9`: Euler genus 4.
pub fn double_torus() -> EmbeddedGraph {
    let a = torus_grid_embedding(3, 3);
    let g = a.graph().disjoint_union(a.graph());
    let mut edges = g.edges().to_vec();
    edges.push((0, 9));
    let g = crate::graph::ColouredGraph::from_edges(18, &edges);
    let mut rot: Vec<Vec<usize>> = (0..18)
        .map(|v| a.neighbour_rotation(v % 9).iter().map(|&w| w + 9 * (v / 9)).collect())
        .collect();
    rot[0].push(9);
    rot[9].push(0);
    let m = g.size();
    EmbeddedGraph::new(g, rot, vec![1; m]).expect("double torus rotation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::faces::{embedding_euler_genus, trace_faces};

    #[test]
    fn fixtures_have_expected_genus() {
        let k5 = toroidal_k5();
        assert_eq!(trace_faces(&k5).unwrap().len(), 5);
        assert_eq!(embedding_euler_genus(&k5).unwrap(), 2);
        let k33 = toroidal_k33();
        assert_eq!(trace_faces(&k33).unwrap().len(), 3);
        assert_eq!(embedding_euler_genus(&k33).unwrap(), 2);
        for (r, c) in [(3, 3), (4, 4), (3, 5)] {
            let t = torus_grid_embedding(r, c);
            let faces = trace_faces(&t).unwrap();
            assert_eq!(faces.len(), r * c);
            assert!(faces.iter().all(|f| f.len() == 4));
            assert_eq!(embedding_euler_genus(&t).unwrap(), 2);
        }
        assert_eq!(embedding_euler_genus(&double_torus()).unwrap(), 4);
    }
}
