//! Cutting an embedded graph along a cycle and gluing disks onto the
//! resulting boundary copies.

use super::embedding::EmbeddedGraph;
use super::faces::{embedding_euler_genus, face_table};
use crate::error::{Error, Result};
use crate::graph::{connected_components, ColouredGraph};
use std::collections::BTreeSet;

/// Edge indices of the cycle `c = (v_0, …, v_{l-1})`.
pub fn cycle_edges(g: &ColouredGraph, c: &[usize]) -> Result<Vec<usize>> {
    let l = c.len();
    if l < 3 {
        return Err(Error::NotACycle(format!("length {l} < 3")));
    }
    if let Some(&v) = c.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange(v));
    }
    if c.iter().collect::<BTreeSet<_>>().len() != l {
        return Err(Error::NotACycle("repeated vertex".into()));
    }
    (0..l)
        .map(|i| {
            g.edge_index(c[i], c[(i + 1) % l])
                .ok_or_else(|| Error::NotACycle(format!("{} and {} are not adjacent", c[i], c[(i + 1) % l])))
        })
        .collect()
}

/// One connected piece of a cut, with maps back to the original graph.
#[derive(Clone, Debug)]
pub struct CutPiece {
    pub embedding: EmbeddedGraph,
    /// Original vertex of each piece vertex.
    pub vertex_origin: Vec<usize>,
    /// Original edge of each piece edge.
    pub edge_origin: Vec<usize>,
    /// Piece vertices that are copies of cycle vertices.
    pub boundary: Vec<usize>,
}

impl CutPiece {
    pub fn euler_genus(&self) -> usize {
        embedding_euler_genus(&self.embedding).expect("pieces are connected")
    }

    /// Original vertices with a copy in this piece that are not on the cycle.
    pub fn interior_vertices(&self) -> BTreeSet<usize> {
        let b: BTreeSet<usize> = self.boundary.iter().copied().collect();
        (0..self.vertex_origin.len())
            .filter(|i| !b.contains(i))
            .map(|i| self.vertex_origin[i])
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct CutResult {
    pub pieces: Vec<CutPiece>,
    /// Piece containing each face of the original embedding, indexed like
    /// `face_table(E).faces`.
    pub face_piece: Vec<usize>,
    /// The cycle reverses local orientation.
    pub one_sided: bool,
}

impl CutResult {
    /// Indices of the pieces that are spheres, i.e. the disk sides of `C`.
    pub fn disk_pieces(&self) -> Vec<usize> {
        if self.pieces.len() != 2 {
            return Vec::new();
        }
        (0..2).filter(|&i| self.pieces[i].euler_genus() == 0).collect()
    }

    pub fn total_euler_genus(&self) -> usize {
        self.pieces.iter().map(CutPiece::euler_genus).sum()
    }
}

/// Cuts `E` along the cycle `c` and closes each boundary copy with a disk.
///
/// Walking along `c`, each cycle vertex is split into a left and a right
/// copy; the darts strictly between the two cycle darts in rotation order
/// go to one copy and the others to the other. When the cycle reverses
/// orientation the two boundary strands are joined crosswise, leaving a
/// single boundary of twice the length.
pub fn cut_along_cycle(emb: &EmbeddedGraph, c: &[usize]) -> Result<CutResult> {
    let g = emb.graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cedges = cycle_edges(g, c)?;
    let l = c.len();
    let n = g.order();
    let mut cyc_index = vec![usize::MAX; n];
    for (i, &v) in c.iter().enumerate() {
        cyc_index[v] = i;
    }
    let mut orient = vec![1i8; l];
    for i in 1..l {
        orient[i] = orient[i - 1] * emb.sign(cedges[i - 1]);
    }
    let product = orient[l - 1] * emb.sign(cedges[l - 1]);
    let crosswise = product < 0;

    // new vertex ids: non-cycle vertices first, then L_i = base + 2i, R_i = base + 2i + 1
    let mut plain_id = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if cyc_index[v] == usize::MAX {
            plain_id[v] = next;
            next += 1;
        }
    }
    let base = next;
    let total = base + 2 * l;
    let left = |i: usize| base + 2 * i;
    let right = |i: usize| base + 2 * i + 1;

    // side[d] for darts at cycle vertices: 0 = in [a, X], 1 = in [b, Y]
    let mut part_a: Vec<Vec<usize>> = vec![Vec::new(); l];
    let mut part_b: Vec<Vec<usize>> = vec![Vec::new(); l];
    let mut side = vec![u8::MAX; emb.num_darts()];
    for i in 0..l {
        let v = c[i];
        let a = emb.dart(v, c[(i + 1) % l]).unwrap();
        let b = emb.dart(v, c[(i + l - 1) % l]).unwrap();
        let rot = emb.rotation(v);
        let k = rot.len();
        let pa = rot.iter().position(|&d| d == a).unwrap();
        let pb = rot.iter().position(|&d| d == b).unwrap();
        let dist = (pb + k - pa) % k;
        for j in 0..=dist {
            let d = rot[(pa + j) % k];
            part_a[i].push(d);
            if d != b {
                side[d] = 0;
            }
        }
        for j in 0..=(k - dist) {
            let d = rot[(pb + j) % k];
            part_b[i].push(d);
            if d != a {
                side[d] = 1;
            }
        }
    }
    // copy holding a dart's part: part A goes left when orient = +1
    let copy_for = |i: usize, part: u8| -> usize {
        if (part == 0) == (orient[i] > 0) {
            left(i)
        } else {
            right(i)
        }
    };
    let tail_copy = |d: usize| -> usize {
        let v = emb.tail(d);
        match cyc_index[v] {
            usize::MAX => plain_id[v],
            i => copy_for(i, side[d]),
        }
    };
    let close = |i: usize, is_left: bool| -> usize {
        // the far end of the copy of e_i leaving the given copy of v_i
        if i + 1 < l {
            if is_left {
                left(i + 1)
            } else {
                right(i + 1)
            }
        } else if is_left != crosswise {
            left(0)
        } else {
            right(0)
        }
    };
    let back = |i: usize, is_left: bool| -> usize {
        // the far end of the copy of e_{i-1} arriving at the given copy of v_i
        if i > 0 {
            if is_left {
                left(i - 1)
            } else {
                right(i - 1)
            }
        } else if is_left != crosswise {
            left(l - 1)
        } else {
            right(l - 1)
        }
    };

    let mut origin = vec![0usize; total];
    for v in 0..n {
        if plain_id[v] != usize::MAX {
            origin[plain_id[v]] = v;
        }
    }
    for (i, &v) in c.iter().enumerate() {
        origin[left(i)] = v;
        origin[right(i)] = v;
    }

    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); total];
    for v in 0..n {
        if plain_id[v] != usize::MAX {
            neighbours[plain_id[v]] = emb.rotation(v).iter().map(|&d| tail_copy(d ^ 1)).collect();
        }
    }
    for i in 0..l {
        let a = emb.dart(c[i], c[(i + 1) % l]).unwrap();
        let b = emb.dart(c[i], c[(i + l - 1) % l]).unwrap();
        for is_left in [true, false] {
            let holds_a = (is_left == (orient[i] > 0)) as u8;
            let part = if holds_a == 1 { &part_a[i] } else { &part_b[i] };
            let me = if is_left { left(i) } else { right(i) };
            neighbours[me] = part
                .iter()
                .map(|&d| {
                    if d == a {
                        close(i, is_left)
                    } else if d == b {
                        back(i, is_left)
                    } else {
                        tail_copy(d ^ 1)
                    }
                })
                .collect();
        }
    }

    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, ns) in neighbours.iter().enumerate() {
        for &w in ns {
            edges.insert((u.min(w), u.max(w)));
        }
    }
    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    let mut cut = ColouredGraph::new(total, &edge_list)
        .map_err(|e| Error::InvalidEmbedding(format!("cut produced an invalid graph: {e}")))?;
    for x in 0..total {
        cut.set_vertex_colour(x, g.vertex_colour(origin[x]).clone())?;
    }
    let mut edge_origin = vec![0; edge_list.len()];
    let mut signs = vec![1i8; edge_list.len()];
    for (e, &(x, y)) in edge_list.iter().enumerate() {
        let oe = g.edge_index(origin[x], origin[y]).expect("copies of an edge");
        edge_origin[e] = oe;
        signs[e] = emb.sign(oe);
        cut.set_arc_colour(x, y, g.colour(origin[x], origin[y]).unwrap().clone())?;
        cut.set_arc_colour(y, x, g.colour(origin[y], origin[x]).unwrap().clone())?;
    }
    let whole = EmbeddedGraph::new(cut, neighbours, signs)?;

    let comps = connected_components(whole.graph(), &BTreeSet::new());
    let mut piece_of = vec![0; total];
    let mut local = vec![0; total];
    for (p, comp) in comps.iter().enumerate() {
        for (j, &x) in comp.iter().enumerate() {
            piece_of[x] = p;
            local[x] = j;
        }
    }
    let mut pieces = Vec::new();
    for comp in &comps {
        let pg = whole.graph().induced(comp);
        let rot: Vec<Vec<usize>> = comp
            .iter()
            .map(|&x| whole.neighbour_rotation(x).iter().map(|&y| local[y]).collect())
            .collect();
        let mut psigns = vec![1i8; pg.size()];
        let mut porigin = vec![0; pg.size()];
        for (e, &(a, b)) in pg.edges().iter().enumerate() {
            let we = whole.graph().edge_index(comp[a], comp[b]).unwrap();
            psigns[e] = whole.sign(we);
            porigin[e] = edge_origin[we];
        }
        pieces.push(CutPiece {
            embedding: EmbeddedGraph::new(pg, rot, psigns)?,
            vertex_origin: comp.iter().map(|&x| origin[x]).collect(),
            edge_origin: porigin,
            boundary: comp
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x >= base)
                .map(|(j, _)| j)
                .collect(),
        });
    }

    let table = face_table(emb);
    let face_piece = table
        .faces
        .iter()
        .map(|f| {
            let (d, s) = f.flags[0];
            let (d2, s2) = emb.next_flag(d, s);
            let v = emb.head(d);
            let copy = match cyc_index[v] {
                usize::MAX => plain_id[v],
                i => {
                    let x = if s2 > 0 { d ^ 1 } else { d2 };
                    copy_for(i, side[x])
                }
            };
            piece_of[copy]
        })
        .collect();

    Ok(CutResult {
        pieces,
        face_piece,
        one_sided: crosswise,
    })
}

/// Whether `c` bounds a disk in `E`.
pub fn is_contractible(emb: &EmbeddedGraph, c: &[usize]) -> Result<bool> {
    Ok(!cut_along_cycle(emb, c)?.disk_pieces().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::faces::trace_faces;
    use crate::surface::standard::{torus_grid_embedding, toroidal_k5};
    use crate::surface::planarity::planar_embedding;
    use crate::graph::families::*;

    #[test]
    fn planar_cycles_are_contractible() {
        let e = planar_embedding(&complete(4)).unwrap();
        for c in [[0, 1, 2], [0, 1, 3], [1, 2, 3]] {
            assert!(is_contractible(&e, &c).unwrap());
        }
        let cut = cut_along_cycle(&e, &[0, 1, 2, 3]).unwrap();
        assert_eq!(cut.pieces.len(), 2);
        assert_eq!(cut.total_euler_genus(), 0);
    }

    #[test]
    fn torus_meridian() {
        let e = torus_grid_embedding(3, 3);
        let cut = cut_along_cycle(&e, &[0, 1, 2]).unwrap();
        assert_eq!(cut.pieces.len(), 1);
        assert_eq!(cut.pieces[0].euler_genus(), 0);
        assert!(!cut.one_sided);
        assert!(!is_contractible(&e, &[0, 1, 2]).unwrap());
        // a face boundary is contractible
        assert!(is_contractible(&e, &[0, 1, 4, 3]).unwrap());
    }

    #[test]
    fn dart_count_doubles_on_cycle() {
        let e = toroidal_k5();
        let c = [0, 1, 2];
        let cut = cut_along_cycle(&e, &c).unwrap();
        let darts: usize = cut.pieces.iter().map(|p| p.embedding.num_darts()).sum();
        assert_eq!(darts, e.num_darts() + 2 * c.len());
        let faces: usize = cut.pieces.iter().map(|p| trace_faces(&p.embedding).unwrap().len()).sum();
        assert_eq!(faces, trace_faces(&e).unwrap().len() + 2);
    }

    #[test]
    fn projective_cycle_is_one_sided() {
        let e = EmbeddedGraph::new(cycle(3), vec![vec![1, 2], vec![0, 2], vec![0, 1]], vec![1, 1, -1]).unwrap();
        let cut = cut_along_cycle(&e, &[0, 1, 2]).unwrap();
        assert!(cut.one_sided);
        assert_eq!(cut.pieces.len(), 1);
        assert_eq!(cut.pieces[0].euler_genus(), 0);
    }

    #[test]
    fn rejects_non_cycles() {
        let e = torus_grid_embedding(3, 3);
        assert!(matches!(cut_along_cycle(&e, &[0, 1]), Err(Error::NotACycle(_))));
        assert!(matches!(cut_along_cycle(&e, &[0, 1, 5]), Err(Error::NotACycle(_))));
        assert!(matches!(cut_along_cycle(&e, &[0, 1, 1]), Err(Error::NotACycle(_))));
    }
}
