use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, Subgraph};
use std::collections::BTreeSet;

/// Upper limit on the number of enumerated shortest paths.
pub const MAX_PATHS: usize = 1 << 20;

/// A shortest path system: shortest paths from `source` to `sink`, each
/// stored as its vertex sequence. Paths are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sps {
    pub source: usize,
    pub sink: usize,
    pub paths: Vec<Vec<usize>>,
}

impl Sps {
    /// Builds an sps from explicit paths, checking that they are paths of
    /// `g` of equal length between the same endpoints.
    pub fn from_paths(g: &ColouredGraph, mut paths: Vec<Vec<usize>>) -> Result<Sps> {
        let first = paths.first().ok_or(Error::EmptySet)?.clone();
        let (source, sink) = (first[0], *first.last().unwrap());
        for p in &paths {
            if p.len() != first.len() || p[0] != source || *p.last().unwrap() != sink {
                return Err(Error::InvalidArgument("paths differ in endpoints or length".into()));
            }
            if p.iter().collect::<BTreeSet<_>>().len() != p.len() {
                return Err(Error::InvalidArgument("path repeats a vertex".into()));
            }
            if let Some(w) = p.windows(2).find(|w| !g.adjacent(w[0], w[1])) {
                return Err(Error::NotAnEdge(format!("{}-{}", w[0], w[1])));
            }
        }
        paths.sort();
        paths.dedup();
        Ok(Sps { source, sink, paths })
    }

    /// Number of edges on each path.
    pub fn length(&self) -> usize {
        self.paths[0].len() - 1
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect()
    }

    /// `G(Q)`.
    pub fn subgraph(&self) -> Subgraph {
        Subgraph::new(self.vertices(), self.edges())
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices().len() <= 2
    }

    /// Distance from the source, or `None` if `v` is not on the system.
    pub fn height(&self, v: usize) -> Option<usize> {
        self.paths.iter().find_map(|p| p.iter().position(|&x| x == v))
    }

    /// Vertices on every path, ordered by height.
    pub fn articulation(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.paths[0].clone();
        out.retain(|v| self.paths.iter().all(|p| p.contains(v)));
        out
    }

    pub fn proper_articulation(&self) -> Vec<usize> {
        let mut a = self.articulation();
        a.retain(|&v| v != self.source && v != self.sink);
        a
    }

    /// `v ⊴ w`: `v` appears no later than `w` on some path.
    pub fn precedes(&self, v: usize, w: usize) -> bool {
        self.paths.iter().any(|p| {
            match (p.iter().position(|&x| x == v), p.iter().position(|&x| x == w)) {
                (Some(i), Some(j)) => i <= j,
                _ => false,
            }
        })
    }

    /// The segment `Q[v, w]`: the `v`–`w` subpaths of all paths through both.
    pub fn segment(&self, v: usize, w: usize) -> Result<Sps> {
        if !self.precedes(v, w) {
            return Err(Error::Precondition(format!("{v} and {w} are not ordered in the sps")));
        }
        let mut paths: Vec<Vec<usize>> = self
            .paths
            .iter()
            .filter_map(|p| {
                let i = p.iter().position(|&x| x == v)?;
                let j = p.iter().position(|&x| x == w)?;
                Some(p[i..=j].to_vec())
            })
            .collect();
        paths.sort();
        paths.dedup();
        Ok(Sps {
            source: v,
            sink: w,
            paths,
        })
    }

    /// Every shortest source–sink path inside `G(Q)` belongs to the system.
    pub fn is_closed(&self, g: &ColouredGraph) -> bool {
        let (h, verts) = self.subgraph().to_graph(g);
        let local = |v: usize| verts.binary_search(&v).unwrap();
        let inner = match canonical_sps(&h, local(self.source), local(self.sink)) {
            Ok(s) => s,
            Err(_) => return false,
        };
        let mut mapped: Vec<Vec<usize>> = inner
            .paths
            .iter()
            .map(|p| p.iter().map(|&i| verts[i]).collect())
            .collect();
        mapped.sort();
        mapped == self.paths
    }
}

/// All shortest `u`–`u'` paths of `g`.
pub fn canonical_sps(g: &ColouredGraph, u: usize, u2: usize) -> Result<Sps> {
    let n = g.order();
    for x in [u, u2] {
        if x >= n {
            return Err(Error::VertexOutOfRange(x));
        }
    }
    let from_u = g.distances_from(u);
    let to_sink = g.distances_from(u2);
    let d = from_u[u2];
    if d == usize::MAX {
        return Err(Error::Disconnected);
    }
    let mut paths = Vec::new();
    let mut stack = vec![(u, 0usize)];
    let mut path = vec![u];
    // depth-first over the shortest-path DAG, `stack` holds (vertex, next neighbour)
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if v == u2 {
            paths.push(path.clone());
            if paths.len() > MAX_PATHS {
                return Err(Error::SizeBound {
                    order: paths.len(),
                    bound: MAX_PATHS,
                });
            }
            stack.pop();
            path.pop();
            continue;
        }
        let nbrs = g.neighbours(v);
        let next = (top.1..nbrs.len()).find(|&k| {
            let w = nbrs[k];
            from_u[w] == from_u[v] + 1 && to_sink[w] + from_u[w] == d
        });
        match next {
            Some(k) => {
                top.1 = k + 1;
                stack.push((nbrs[k], 0));
                path.push(nbrs[k]);
            }
            None => {
                stack.pop();
                path.pop();
            }
        }
    }
    paths.sort();
    Ok(Sps {
        source: u,
        sink: u2,
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn adjacent_pair_is_trivial() {
        let q = canonical_sps(&cycle(5), 0, 1).unwrap();
        assert_eq!(q.paths, vec![vec![0, 1]]);
        assert!(q.is_trivial());
        assert_eq!(q.articulation(), vec![0, 1]);
    }

    #[test]
    fn antipodal_square() {
        let q = canonical_sps(&cycle(4), 0, 2).unwrap();
        assert_eq!(q.paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert_eq!(q.articulation(), vec![0, 2]);
        assert_eq!(q.segment(0, 2).unwrap(), q);
        assert!(q.is_closed(&cycle(4)));
    }

    #[test]
    fn path_endpoints() {
        let q = canonical_sps(&path(5), 0, 4).unwrap();
        assert_eq!(q.proper_articulation(), vec![1, 2, 3]);
        assert_eq!(q.height(3), Some(3));
        assert_eq!(q.segment(1, 3).unwrap().paths, vec![vec![1, 2, 3]]);
        assert!(q.segment(3, 1).is_err());
    }

    #[test]
    fn theta_heights() {
        // K_{2,3} with u = 0, u' = 1
        let g = complete_bipartite(2, 3);
        let q = canonical_sps(&g, 0, 1).unwrap();
        assert_eq!(q.paths.len(), 3);
        for m in 2..5 {
            assert_eq!(q.height(m), Some(1));
        }
        assert_eq!(q.articulation(), vec![0, 1]);
    }

    #[test]
    fn disconnected_pair() {
        let g = path(2).disjoint_union(&path(2));
        assert_eq!(canonical_sps(&g, 0, 3).unwrap_err(), Error::Disconnected);
    }
}
