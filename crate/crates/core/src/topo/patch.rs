use super::sps::Sps;
use crate::error::{Error, Result};
use crate::graph::{connected_components, ColouredGraph, Subgraph};
use crate::surface::{cut_along_cycle, face_table, genus_at_most, is_planar, trace_faces, EmbeddedGraph, GenusConfig};
use std::collections::BTreeSet;

/// An sps without proper articulation vertices whose graph lies in a disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    pub sps: Sps,
    /// `C(Q)` as a vertex cycle, for non-trivial patches.
    pub boundary: Option<Vec<usize>>,
    /// Faces of the embedding inside the disk `D(Q)`, indexed like
    /// `face_table(E).faces`.
    pub disk_faces: Vec<usize>,
}

impl Patch {
    pub fn is_trivial(&self) -> bool {
        self.boundary.is_none()
    }
}

/// Candidate disk for a 2-connected `h`: a boundary cycle of `h` and the
/// faces on its disk side containing the rest of `h`.
struct DiskSide {
    boundary: Vec<usize>,
    faces: Vec<usize>,
    vertices: usize,
}

fn disk_sides(emb: &EmbeddedGraph, h: &Subgraph) -> Vec<DiskSide> {
    let verts: Vec<usize> = h.vertices.iter().copied().collect();
    let edges: Vec<(usize, usize)> = h.edges.iter().copied().collect();
    let local = emb.restrict(&verts, &edges);
    let local_faces = match trace_faces(&local) {
        Ok(f) => f,
        Err(_) => return Vec::new(),
    };
    // a graph inside a disk has a planar induced rotation system
    if 2 + local.size() != local.order() + local_faces.len() {
        return Vec::new();
    }
    let g = emb.graph();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for f in &local_faces {
        let cyc: Vec<usize> = f.vertices(&local).iter().map(|&i| verts[i]).collect();
        if cyc.len() < 3 || cyc.iter().collect::<BTreeSet<_>>().len() != cyc.len() {
            continue;
        }
        let key = {
            let mut k = cyc.clone();
            k.sort_unstable();
            k
        };
        let Ok(cut) = cut_along_cycle(emb, &cyc) else { continue };
        let cyc_edges: BTreeSet<(usize, usize)> = (0..cyc.len())
            .map(|i| {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                (a.min(b), a.max(b))
            })
            .collect();
        for p in cut.disk_pieces() {
            let piece = &cut.pieces[p];
            let piece_edges: BTreeSet<(usize, usize)> =
                piece.edge_origin.iter().map(|&e| g.edges()[e]).collect();
            if !h.edges.iter().all(|e| cyc_edges.contains(e) || piece_edges.contains(e)) {
                continue;
            }
            let interior = piece.interior_vertices();
            if !h.vertices.iter().all(|v| cyc.contains(v) || interior.contains(v)) {
                continue;
            }
            let faces: Vec<usize> = (0..cut.face_piece.len()).filter(|&i| cut.face_piece[i] == p).collect();
            let vertices = piece.vertex_origin.iter().collect::<BTreeSet<_>>().len();
            if seen.insert((key.clone(), faces.clone())) {
                out.push(DiskSide {
                    boundary: cyc.clone(),
                    faces,
                    vertices,
                });
            }
        }
    }
    out
}

/// Rotates a cycle to start at its least vertex, then towards the smaller
/// neighbour.
fn normalise_cycle(c: &[usize]) -> Vec<usize> {
    let l = c.len();
    let i = (0..l).min_by_key(|&i| c[i]).unwrap();
    let fwd: Vec<usize> = (0..l).map(|k| c[(i + k) % l]).collect();
    if fwd[1] <= fwd[l - 1] {
        fwd
    } else {
        (0..l).map(|k| c[(i + l - k) % l]).collect()
    }
}

/// Whether `sps` is a patch of `E`, with its disk certificate.
///
/// When several disks are bounded by cycles of `G(Q)`, the one with fewer
/// vertices is used, ties broken by the smaller face set.
pub fn is_patch(emb: &EmbeddedGraph, sps: &Sps) -> Option<Patch> {
    patch_within(emb, sps, None)
}

/// Like [`is_patch`], restricted to disks made of faces in `within`.
pub(crate) fn patch_within(emb: &EmbeddedGraph, sps: &Sps, within: Option<&[usize]>) -> Option<Patch> {
    if sps.is_trivial() {
        return Some(Patch {
            sps: sps.clone(),
            boundary: None,
            disk_faces: Vec::new(),
        });
    }
    if !sps.proper_articulation().is_empty() {
        return None;
    }
    let best = disk_sides(emb, &sps.subgraph())
        .into_iter()
        .filter(|d| within.is_none_or(|w| d.faces.iter().all(|f| w.binary_search(f).is_ok())))
        .min_by(|a, b| (a.vertices, &a.faces).cmp(&(b.vertices, &b.faces)))?;
    Some(Patch {
        sps: sps.clone(),
        boundary: Some(normalise_cycle(&best.boundary)),
        disk_faces: best.faces,
    })
}

/// Whether some disk of `E` contains the subgraph `h`: each block of `h`
/// lies in a disk bounded by one of its cycles.
pub fn lies_in_disk(emb: &EmbeddedGraph, h: &Subgraph) -> bool {
    let (local, verts) = h.to_graph(emb.graph());
    crate::surface::blocks(&local).into_iter().all(|block| {
        if block.len() == 1 {
            return true;
        }
        let edges: Vec<(usize, usize)> = block
            .iter()
            .map(|&e| {
                let (a, b) = local.edges()[e];
                (verts[a], verts[b])
            })
            .collect();
        !disk_sides(emb, &Subgraph::new([], edges)).is_empty()
    })
}

/// The subgraph of `E` in the closed disk of a non-trivial patch.
pub fn internal_graph(emb: &EmbeddedGraph, patch: &Patch) -> Result<Subgraph> {
    if patch.is_trivial() {
        return Err(Error::Precondition("internal graph of a trivial patch".into()));
    }
    Ok(faces_subgraph(emb, &patch.disk_faces))
}

/// Vertices and edges on the boundaries of the given faces.
pub(crate) fn faces_subgraph(emb: &EmbeddedGraph, faces: &[usize]) -> Subgraph {
    let table = face_table(emb);
    let g = emb.graph();
    let mut edges = BTreeSet::new();
    for &f in faces {
        for e in table.faces[f].edges() {
            edges.insert(g.edges()[e]);
        }
    }
    Subgraph::new([], edges)
}

/// Components of `G \ V(H)` as sorted vertex lists.
pub(crate) fn residual_components(g: &ColouredGraph, h: &Subgraph) -> Vec<Vec<usize>> {
    connected_components(g, &h.vertices)
}

fn in_lower_class(g: &ColouredGraph, comp: &[usize], genus: usize, cfg: &GenusConfig) -> Result<bool> {
    let c = g.induced(comp);
    if is_planar(&c) {
        return Ok(true);
    }
    if genus == 0 {
        return Ok(false);
    }
    genus_at_most(&c, genus - 1, cfg)
}

/// Every component of `G \ V(H)` has Euler genus at most `g - 1`.
pub fn is_simplifying(g: &ColouredGraph, genus: usize, h: &Subgraph, cfg: &GenusConfig) -> Result<bool> {
    if genus == 0 {
        return Err(Error::InvalidArgument("Euler genus must be at least 1".into()));
    }
    for comp in residual_components(g, h) {
        if !in_lower_class(g, &comp, genus, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique component of `G \ V(Q)` of Euler genus at least `g`, or
/// `None` if `Q` is simplifying. All other components must be planar.
pub fn nonplanar_component(
    g: &ColouredGraph,
    genus: usize,
    sps: &Sps,
    cfg: &GenusConfig,
) -> Result<Option<Vec<usize>>> {
    if genus == 0 {
        return Err(Error::InvalidArgument("Euler genus must be at least 1".into()));
    }
    let comps = residual_components(g, &sps.subgraph());
    let mut big = Vec::new();
    for comp in &comps {
        if !in_lower_class(g, comp, genus, cfg)? {
            big.push(comp.clone());
        }
    }
    match big.len() {
        0 => Ok(None),
        1 => {
            if let Some(c) = comps.iter().find(|c| **c != big[0] && !is_planar(&g.induced(c))) {
                return Err(Error::Precondition(format!(
                    "component containing {} is neither planar nor the exceptional one",
                    c[0]
                )));
            }
            Ok(big.pop())
        }
        k => Err(Error::Precondition(format!("{k} components outside the lower genus class"))),
    }
}
