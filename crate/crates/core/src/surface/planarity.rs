//! Blocks and planar embedding by path addition (Demoucron, Malgrange,
//! Pertuiset).

use super::embedding::EmbeddedGraph;
use crate::graph::ColouredGraph;
use std::collections::{BTreeSet, VecDeque};

/// Biconnected components as sets of edge indices, in discovery order.
/// Isolated vertices belong to no block.
pub fn blocks(g: &ColouredGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, pe) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbours(v)[top.2];
                top.2 += 1;
                let e = g.edge_index(v, w).unwrap();
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

fn find_cycle(g: &ColouredGraph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, usize::MAX)];
        while let Some((v, p)) = stack.pop() {
            for &w in g.neighbours(v) {
                if w == p {
                    continue;
                }
                if seen[w] {
                    // w is an ancestor or a discovered sibling; walk both up
                    let mut a = vec![v];
                    let mut x = v;
                    while parent[x] != usize::MAX {
                        x = parent[x];
                        a.push(x);
                    }
                    let mut b = vec![w];
                    let mut y = w;
                    while parent[y] != usize::MAX {
                        y = parent[y];
                        b.push(y);
                    }
                    while a.len() > 1 && b.len() > 1 && a[a.len() - 2] == b[b.len() - 2] {
                        a.pop();
                        b.pop();
                    }
                    // a and b now end at their lowest common ancestor
                    b.pop();
                    b.reverse();
                    a.extend(b);
                    if a.len() >= 3 {
                        return Some(a);
                    }
                    continue;
                }
                seen[w] = true;
                parent[w] = v;
                stack.push((w, v));
            }
        }
    }
    None
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices (empty for a single chord).
    interior: BTreeSet<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(g: &ColouredGraph, in_h: &[bool], h_edges: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.order();
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: BTreeSet::new(),
                chord: Some((u, v)),
            });
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let mut interior = BTreeSet::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        comp[s] = s;
        while let Some(v) = queue.pop_front() {
            interior.insert(v);
            for &w in g.neighbours(v) {
                if in_h[w] {
                    attachments.insert(w);
                } else if comp[w] == usize::MAX {
                    comp[w] = s;
                    queue.push_back(w);
                }
            }
        }
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            interior,
            chord: None,
        });
    }
    out
}

fn fragment_path(g: &ColouredGraph, f: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = f.chord {
        return vec![u, v];
    }
    let a = f.attachments[0];
    let mut parent = std::collections::HashMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbours(a) {
        if f.interior.contains(&w) && !parent.contains_key(&w) {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbours(v) {
            if f.interior.contains(&w) {
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                    e.insert(v);
                    queue.push_back(w);
                }
            } else if w != a && f.attachments.binary_search(&w).is_ok() {
                let mut path = vec![w, v];
                let mut x = v;
                while parent[&x] != a {
                    x = parent[&x];
                    path.push(x);
                }
                path.push(a);
                path.reverse();
                return path;
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

/// Oriented facial cycles of a planar embedding of a biconnected graph
/// with at least three vertices, or `None` if it is not planar.
pub fn biconnected_planar_faces(g: &ColouredGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let cycle = find_cycle(g)?;
    let mut in_h = vec![false; n];
    let mut h_edges = BTreeSet::new();
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[u] = true;
        h_edges.insert((u.min(v), u.max(v)));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    while h_edges.len() < g.size() {
        let frags = fragments(g, &in_h, &h_edges);
        let admissible: Vec<Vec<usize>> = frags
            .iter()
            .map(|f| {
                (0..faces.len())
                    .filter(|&i| f.attachments.iter().all(|a| faces[i].contains(a)))
                    .collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let fi = admissible[pick][0];
        let path = fragment_path(g, &frags[pick]);
        for w in path.windows(2) {
            in_h[w[0]] = true;
            in_h[w[1]] = true;
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        let face = faces.swap_remove(fi);
        let (a, b) = (path[0], path[path.len() - 1]);
        let t = face.len();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = (0..t)
            .map(|j| face[(ia + j) % t])
            .take((ib + t - ia) % t + 1)
            .collect();
        f1.extend(inner.iter().rev());
        let mut f2: Vec<usize> = (0..t)
            .map(|j| face[(ib + j) % t])
            .take((ia + t - ib) % t + 1)
            .collect();
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

pub fn is_planar(g: &ColouredGraph) -> bool {
    planar_embedding(g).is_some()
}

/// A planar rotation system for `g` (any number of components), or `None`.
pub fn planar_embedding(g: &ColouredGraph) -> Option<EmbeddedGraph> {
    let n = g.order();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        let edges: Vec<(usize, usize)> = block.iter().map(|&e| g.edges()[e]).collect();
        let verts: Vec<usize> = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if edges.len() == 1 {
            let (u, v) = edges[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let local = g.subgraph(&verts, &edges);
        let faces = biconnected_planar_faces(&local)?;
        let emb = EmbeddedGraph::from_oriented_faces(local, &faces).ok()?;
        for (i, &v) in verts.iter().enumerate() {
            rot[v].extend(emb.neighbour_rotation(i).iter().map(|&j| verts[j]));
        }
    }
    EmbeddedGraph::new(g.clone(), rot, vec![1; g.size()]).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::surface::faces::embedding_euler_genus;

    #[test]
    fn blocks_of_bowtie() {
        let g = ColouredGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(blocks(&g).len(), 2);
        assert_eq!(blocks(&path(4)).len(), 3);
        assert_eq!(blocks(&petersen()).len(), 1);
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen()));
        assert!(is_planar(&complete(4)));
        assert!(is_planar(&complete_bipartite(2, 5)));
    }

    #[test]
    fn planar_embeddings_have_genus_zero() {
        let bowtie = ColouredGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        for g in [complete(4), cycle(7), path(5), bowtie, complete_bipartite(2, 4)] {
            if !g.is_connected() {
                continue;
            }
            let e = planar_embedding(&g).unwrap();
            assert_eq!(embedding_euler_genus(&e).unwrap(), 0);
        }
    }
}
