use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use std::collections::HashMap;

/// A graph with a signed rotation system.
///
/// Edge `e = (u, v)` with `u < v` has the darts `2e` (from `u`) and
/// `2e + 1` (from `v`). Each vertex lists its outgoing darts in cyclic
/// order; an edge of sign `-1` reverses the local orientation when it is
/// traversed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    graph: ColouredGraph,
    rotation: Vec<Vec<usize>>,
    signs: Vec<i8>,
    pos: Vec<usize>,
}

impl EmbeddedGraph {
    /// Builds an embedding from per-vertex cyclic neighbour orders and
    /// per-edge signs (indexed like `graph.edges()`).
    pub fn new(graph: ColouredGraph, neighbours: Vec<Vec<usize>>, signs: Vec<i8>) -> Result<Self> {
        let n = graph.order();
        if neighbours.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "{} rotations for {} vertices",
                neighbours.len(),
                n
            )));
        }
        if signs.len() != graph.size() {
            return Err(Error::InvalidEmbedding(format!(
                "{} signs for {} edges",
                signs.len(),
                graph.size()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidEmbedding("signs must be +1 or -1".into()));
        }
        let mut rotation = Vec::with_capacity(n);
        for (v, ns) in neighbours.iter().enumerate() {
            let mut sorted = ns.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbours(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at {v} is not a permutation of its neighbours"
                )));
            }
            rotation.push(
                ns.iter()
                    .map(|&w| {
                        let e = graph.edge_index(v, w).unwrap();
                        2 * e + usize::from(v > w)
                    })
                    .collect(),
            );
        }
        Ok(Self::from_darts(graph, rotation, signs))
    }

    pub(crate) fn from_darts(graph: ColouredGraph, rotation: Vec<Vec<usize>>, signs: Vec<i8>) -> Self {
        let mut pos = vec![0; 2 * graph.size()];
        for r in &rotation {
            for (i, &d) in r.iter().enumerate() {
                pos[d] = i;
            }
        }
        EmbeddedGraph {
            graph,
            rotation,
            signs,
            pos,
        }
    }

    /// An orientable embedding whose faces are the given closed vertex
    /// walks, each edge traversed once in each direction.
    pub fn from_oriented_faces(graph: ColouredGraph, faces: &[Vec<usize>]) -> Result<Self> {
        let n = graph.order();
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for f in faces {
            let t = f.len();
            for i in 0..t {
                let prev = f[(i + t - 1) % t];
                let v = f[i];
                let next = f[(i + 1) % t];
                if succ[v].insert(prev, next).is_some() {
                    return Err(Error::InvalidEmbedding(format!(
                        "corner {prev}-{v} used twice"
                    )));
                }
            }
        }
        let mut neighbours = Vec::with_capacity(n);
        for v in 0..n {
            let deg = graph.degree(v);
            if deg == 0 {
                neighbours.push(Vec::new());
                continue;
            }
            let start = graph.neighbours(v)[0];
            let mut order = vec![start];
            let mut cur = start;
            loop {
                cur = *succ[v]
                    .get(&cur)
                    .ok_or_else(|| Error::InvalidEmbedding(format!("faces miss a corner at {v}")))?;
                if cur == start {
                    break;
                }
                order.push(cur);
                if order.len() > deg {
                    break;
                }
            }
            if order.len() != deg {
                return Err(Error::InvalidEmbedding(format!(
                    "faces do not close up around {v}"
                )));
            }
            neighbours.push(order);
        }
        let signs = vec![1; graph.size()];
        Self::new(graph, neighbours, signs)
    }

    pub fn graph(&self) -> &ColouredGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    pub fn num_darts(&self) -> usize {
        2 * self.graph.size()
    }

    pub fn tail(&self, d: usize) -> usize {
        let (u, v) = self.graph.edges()[d / 2];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(d ^ 1)
    }

    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        self.graph.edge_index(u, v).map(|e| 2 * e + usize::from(u > v))
    }

    pub fn sign(&self, e: usize) -> i8 {
        self.signs[e]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Cyclic neighbour order at `v`.
    pub fn neighbour_rotation(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&d| self.head(d)).collect()
    }

    pub fn succ(&self, d: usize) -> usize {
        let r = &self.rotation[self.tail(d)];
        r[(self.pos[d] + 1) % r.len()]
    }

    pub fn pred(&self, d: usize) -> usize {
        let r = &self.rotation[self.tail(d)];
        r[(self.pos[d] + r.len() - 1) % r.len()]
    }

    /// The face-tracing successor of the flag `(d, s)`.
    pub fn next_flag(&self, d: usize, s: i8) -> (usize, i8) {
        let s2 = s * self.signs[d / 2];
        let r = d ^ 1;
        (if s2 > 0 { self.succ(r) } else { self.pred(r) }, s2)
    }

    /// The same face traversed backwards.
    pub fn reverse_flag(&self, d: usize, s: i8) -> (usize, i8) {
        (d ^ 1, -s * self.signs[d / 2])
    }

    /// True iff some switching makes all signs positive, i.e. every cycle
    /// has an even number of negative edges.
    pub fn is_orientable(&self) -> bool {
        let n = self.order();
        let mut side: Vec<i8> = vec![0; n];
        for s in 0..n {
            if side[s] != 0 {
                continue;
            }
            side[s] = 1;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &d in &self.rotation[u] {
                    let w = self.head(d);
                    let want = side[u] * self.signs[d / 2];
                    if side[w] == 0 {
                        side[w] = want;
                        stack.push(w);
                    } else if side[w] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The embedding induced on a subgraph: rotations restricted to the
    /// kept edges, signs inherited. Vertex `i` of the result is
    /// `vertices[i]`.
    pub fn restrict(&self, vertices: &[usize], edges: &[(usize, usize)]) -> EmbeddedGraph {
        let g = self.graph.subgraph(vertices, edges);
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let neighbours = vertices
            .iter()
            .map(|&v| {
                self.neighbour_rotation(v)
                    .into_iter()
                    .filter(|&w| index[w] != usize::MAX && g.adjacent(index[v], index[w]))
                    .map(|w| index[w])
                    .collect()
            })
            .collect();
        let signs = g
            .edges()
            .iter()
            .map(|&(a, b)| self.signs[self.graph.edge_index(vertices[a], vertices[b]).unwrap()])
            .collect();
        EmbeddedGraph::new(g, neighbours, signs).expect("restricted rotation system")
    }

    /// Relabels vertices by `perm`, keeping rotations and signs.
    pub fn permute(&self, perm: &[usize]) -> EmbeddedGraph {
        let g = self.graph.permute(perm);
        let n = self.order();
        let mut neighbours = vec![Vec::new(); n];
        for v in 0..n {
            neighbours[perm[v]] = self.neighbour_rotation(v).iter().map(|&w| perm[w]).collect();
        }
        let mut signs = vec![1; g.size()];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            signs[g.edge_index(perm[u], perm[v]).unwrap()] = self.signs[e];
        }
        EmbeddedGraph::new(g, neighbours, signs).expect("relabelled embedding")
    }

    /// Reverses the rotation at `v` and flips the signs at `v`; the
    /// embedding is unchanged up to homeomorphism.
    pub fn switch_vertex(&self, v: usize) -> EmbeddedGraph {
        let mut out = self.clone();
        out.rotation[v].reverse();
        for &d in &self.rotation[v] {
            out.signs[d / 2] = -out.signs[d / 2];
        }
        EmbeddedGraph::from_darts(out.graph, out.rotation, out.signs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn rejects_bad_rotations() {
        let g = cycle(3);
        assert!(EmbeddedGraph::new(g.clone(), vec![vec![1, 2], vec![0, 2]], vec![1; 3]).is_err());
        assert!(EmbeddedGraph::new(g.clone(), vec![vec![1, 1], vec![0, 2], vec![0, 1]], vec![1; 3]).is_err());
        assert!(EmbeddedGraph::new(g, vec![vec![1, 2], vec![0, 2], vec![0, 1]], vec![1, 0, 1]).is_err());
    }

    #[test]
    fn darts() {
        let g = path(3);
        let e = EmbeddedGraph::new(g, vec![vec![1], vec![0, 2], vec![1]], vec![1, -1]).unwrap();
        assert_eq!(e.dart(0, 1), Some(0));
        assert_eq!(e.dart(1, 0), Some(1));
        assert_eq!(e.tail(3), 2);
        assert_eq!(e.head(3), 1);
        assert_eq!(e.succ(1), 2);
        assert!(e.is_orientable());
    }

    #[test]
    fn orientability_of_signed_triangle() {
        let g = cycle(3);
        let rot = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        let e = EmbeddedGraph::new(g, rot, vec![1, 1, -1]).unwrap();
        assert!(!e.is_orientable());
        assert!(!e.switch_vertex(0).is_orientable());
    }
}
