use super::cut::subgraph_components;
use super::patch::{internal_graph, is_patch, is_simplifying, patch_within, Patch};
use super::sps::{canonical_sps, Sps};
use crate::error::{Error, Result};
use crate::graph::{find_bridges, Subgraph};
use crate::par;
use crate::surface::{face_table, EmbeddedGraph, GenusConfig};
use std::collections::{BTreeMap, BTreeSet};

/// Segments of `patch` that are patches themselves, `patch` included,
/// ordered by vertex count and then by paths. Their disks are chosen
/// inside the disk of `patch`.
pub fn subpatches(emb: &EmbeddedGraph, patch: &Patch) -> Vec<Patch> {
    let q = &patch.sps;
    if patch.is_trivial() {
        return vec![patch.clone()];
    }
    let verts: Vec<usize> = q.vertices().into_iter().collect();
    let mut out: Vec<Patch> = Vec::new();
    let mut seen = BTreeSet::new();
    for &v in &verts {
        for &w in &verts {
            if v == w || !q.precedes(v, w) {
                continue;
            }
            let seg = q.segment(v, w).expect("ordered pair");
            if !seg.proper_articulation().is_empty() || !seen.insert(seg.clone()) {
                continue;
            }
            if let Some(p) = patch_within(emb, &seg, Some(&patch.disk_faces)) {
                out.push(p);
            }
        }
    }
    out.sort_by_key(|p| (p.sps.vertices().len(), p.sps.paths.clone()));
    out
}

/// The regional graph `J(Q)` and the faces of its region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub graph: Subgraph,
    pub faces: Vec<usize>,
}

/// `J(Q)`: the edges of `Q` together with the internal graphs of its
/// non-trivial non-simplifying subpatches.
pub fn region(emb: &EmbeddedGraph, genus: usize, patch: &Patch, cfg: &GenusConfig) -> Result<Region> {
    let g = emb.graph();
    let mut graph = patch.sps.subgraph();
    let mut faces = BTreeSet::new();
    for sub in subpatches(emb, patch) {
        if sub.is_trivial() || is_simplifying(g, genus, &sub.sps.subgraph(), cfg)? {
            continue;
        }
        graph = graph.union(&internal_graph(emb, &sub)?);
        faces.extend(sub.disk_faces.iter().copied());
    }
    Ok(Region {
        graph,
        faces: faces.into_iter().collect(),
    })
}

pub fn regional_graph(emb: &EmbeddedGraph, genus: usize, patch: &Patch, cfg: &GenusConfig) -> Result<Subgraph> {
    Ok(region(emb, genus, patch, cfg)?.graph)
}

/// A simplifying patch all of whose proper subpatches are non-simplifying.
///
/// Canonical systems are scanned over vertex pairs in order; the first
/// simplifying patch found is replaced by its smallest simplifying
/// subpatch.
pub fn minimal_simplifying_patch(emb: &EmbeddedGraph, genus: usize, cfg: &GenusConfig) -> Result<Option<Patch>> {
    let g = emb.graph();
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let found = par::find_first(cfg.mode, pairs.len(), |k| {
        let (a, b) = pairs[k];
        let q = match canonical_sps(g, a, b) {
            Ok(q) => q,
            Err(e) => return Some(Err(e)),
        };
        let p = is_patch(emb, &q)?;
        match is_simplifying(g, genus, &q.subgraph(), cfg) {
            Ok(true) => Some(Ok(p)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let Some(found) = found else { return Ok(None) };
    let found = found?;
    for sub in subpatches(emb, &found) {
        if is_simplifying(g, genus, &sub.sps.subgraph(), cfg)? {
            return Ok(Some(sub));
        }
    }
    unreachable!("a patch is among its own subpatches")
}

/// The fibre decomposition of a simplifying non-trivial patch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibres {
    pub regional: Subgraph,
    /// Vertices of each component of `J \ {u, u'}`, ordered by least vertex.
    pub parts: Vec<BTreeSet<usize>>,
    /// The paths of `Q` inside each part.
    pub fibres: Vec<Sps>,
    /// Pairs of parts joined by a `J`-bridge.
    pub adjacent: BTreeSet<(usize, usize)>,
    /// The two fibres not joined by any bridge, if the rest form a path.
    pub dangling: Option<(usize, usize)>,
    /// The cyclic order of the fibres, when bridges determine it.
    pub cyclic_order: Option<Vec<usize>>,
    /// Number of connected regions of the disk outside the regional graph.
    pub gaps: usize,
}

fn cyclic_order(l: usize, adjacent: &BTreeSet<(usize, usize)>) -> (Option<Vec<usize>>, Option<(usize, usize)>) {
    if l == 1 {
        return (Some(vec![0]), None);
    }
    if l == 2 {
        let dangling = (!adjacent.contains(&(0, 1))).then_some((0, 1));
        return (Some(vec![0, 1]), dangling);
    }
    let mut nbrs = vec![Vec::new(); l];
    for &(a, b) in adjacent {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let ends: Vec<usize> = (0..l).filter(|&i| nbrs[i].len() == 1).collect();
    if nbrs.iter().any(|x| x.len() > 2 || x.is_empty()) || !(ends.is_empty() || ends.len() == 2) {
        return (None, None);
    }
    let start = ends.first().copied().unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = nbrs[cur].iter().copied().filter(|&x| x != prev).min();
        match next {
            Some(x) if x != start && !order.contains(&x) => {
                order.push(x);
                prev = cur;
                cur = x;
            }
            _ => break,
        }
    }
    if order.len() != l {
        return (None, None);
    }
    let dangling = (ends.len() == 2).then(|| (ends[0], ends[1]));
    (Some(order), dangling)
}

pub fn fibres(emb: &EmbeddedGraph, genus: usize, patch: &Patch, cfg: &GenusConfig) -> Result<Fibres> {
    let g = emb.graph();
    let q = &patch.sps;
    if patch.is_trivial() {
        return Err(Error::Precondition("fibres of a trivial patch".into()));
    }
    if !is_simplifying(g, genus, &q.subgraph(), cfg)? {
        return Err(Error::Precondition("fibres of a non-simplifying patch".into()));
    }
    let reg = region(emb, genus, patch, cfg)?;
    let j = reg.graph;
    let ends = BTreeSet::from([q.source, q.sink]);
    let core = Subgraph {
        vertices: j.vertices.difference(&ends).copied().collect(),
        edges: j
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| !ends.contains(a) && !ends.contains(b))
            .collect(),
    };
    let parts: Vec<BTreeSet<usize>> = subgraph_components(&core).into_iter().map(|c| c.vertices).collect();
    let part_of: BTreeMap<usize, usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.iter().map(move |&v| (v, i)))
        .collect();
    let fibres: Vec<Sps> = (0..parts.len())
        .map(|i| Sps {
            source: q.source,
            sink: q.sink,
            paths: q
                .paths
                .iter()
                .filter(|p| p[1..p.len() - 1].iter().all(|v| part_of.get(v) == Some(&i)))
                .cloned()
                .collect(),
        })
        .collect();
    let mut adjacent = BTreeSet::new();
    for bridge in find_bridges(g, &j)? {
        let touched: BTreeSet<usize> = bridge.attachment.iter().filter_map(|v| part_of.get(v).copied()).collect();
        let touched: Vec<usize> = touched.into_iter().collect();
        for (k, &a) in touched.iter().enumerate() {
            for &b in &touched[k + 1..] {
                adjacent.insert((a, b));
            }
        }
    }
    let (order, dangling) = cyclic_order(parts.len(), &adjacent);
    let gaps = count_gaps(emb, patch, &j, &reg.faces);
    Ok(Fibres {
        regional: j,
        parts,
        fibres,
        adjacent,
        dangling,
        cyclic_order: order,
        gaps,
    })
}

/// Components of the disk of `patch` minus the region: faces outside the
/// region, glued along edges and vertices not in `J`.
fn count_gaps(emb: &EmbeddedGraph, patch: &Patch, j: &Subgraph, region_faces: &[usize]) -> usize {
    let table = face_table(emb);
    let g = emb.graph();
    let faces: Vec<usize> = patch
        .disk_faces
        .iter()
        .copied()
        .filter(|f| region_faces.binary_search(f).is_err())
        .collect();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut owner: BTreeMap<(bool, usize), usize> = BTreeMap::new();
    for (i, &f) in faces.iter().enumerate() {
        let face = &table.faces[f];
        let keys = face
            .edges()
            .filter(|&e| !j.edges.contains(&g.edges()[e]))
            .map(|e| (true, e))
            .chain(face.vertices(emb).into_iter().filter(|v| !j.vertices.contains(v)).map(|v| (false, v)))
            .collect::<Vec<_>>();
        for k in keys {
            match owner.get(&k) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, i));
                    parent[a] = b;
                }
                None => {
                    owner.insert(k, i);
                }
            }
        }
    }
    (0..faces.len()).filter(|&i| find(&mut parent, i) == i).count()
}
