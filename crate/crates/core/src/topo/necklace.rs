use super::patch::{is_patch, lies_in_disk, Patch};
use super::sps::{canonical_sps, Sps};
use crate::error::{Error, Result};
use crate::graph::Subgraph;
use crate::surface::{
    cycles_of_length, embedding_euler_genus, is_contractible, shortest_noncontractible_cycles, EmbeddedGraph,
};
use std::collections::BTreeSet;

/// Upper limit on path triples tried when looking for a reducing cycle.
pub const MAX_TRIPLES: usize = 1 << 18;

/// An articulation vertex of a necklace with its position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArtVertex {
    pub vertex: usize,
    /// Index `i` of the system `Q^i` it belongs to.
    pub fibre: usize,
    pub height: usize,
}

/// A segment of `Q^i` between consecutive articulation vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bead {
    pub fibre: usize,
    pub index: usize,
    pub patch: Patch,
}

impl Bead {
    pub fn is_trivial(&self) -> bool {
        self.patch.is_trivial()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Necklace {
    pub u: [usize; 3],
    /// `Q^i` is the canonical sps from `u^i` to `u^{i+1}`.
    pub sps: [Sps; 3],
    /// Articulation vertices ordered by system, then height.
    pub art: Vec<ArtVertex>,
    pub beads: Vec<Bead>,
    /// A non-contractible cycle made of one path from each system.
    pub reducing_cycle: Vec<usize>,
}

impl Necklace {
    pub fn art_vertices(&self) -> BTreeSet<usize> {
        self.art.iter().map(|a| a.vertex).collect()
    }

    /// `G(B)`.
    pub fn subgraph(&self) -> Subgraph {
        self.sps
            .iter()
            .fold(Subgraph::default(), |acc, q| acc.union(&q.subgraph()))
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::Necklace(msg.into())
}

fn check_meets(sps: &[Sps; 3], u: [usize; 3]) -> Result<()> {
    for i in 0..3 {
        let a = sps[i].vertices();
        let b = sps[(i + 1) % 3].vertices();
        let common: Vec<usize> = a.intersection(&b).copied().collect();
        if common != [u[(i + 1) % 3]] {
            return Err(violation(format!(
                "systems {i} and {} share {:?}, not just {}",
                (i + 1) % 3,
                common,
                u[(i + 1) % 3]
            )));
        }
    }
    Ok(())
}

/// Finds paths, one per system, whose union is a non-contractible cycle.
fn reducing_cycle(emb: &EmbeddedGraph, sps: &[Sps; 3]) -> Result<Option<Vec<usize>>> {
    let total: usize = sps.iter().map(|q| q.paths.len()).product();
    if total > MAX_TRIPLES {
        return Err(Error::SizeBound {
            order: total,
            bound: MAX_TRIPLES,
        });
    }
    for p0 in &sps[0].paths {
        for p1 in &sps[1].paths {
            for p2 in &sps[2].paths {
                let mut c = p0.clone();
                c.extend(&p1[1..]);
                c.extend(&p2[1..p2.len() - 1]);
                if !is_contractible(emb, &c)? {
                    return Ok(Some(c));
                }
            }
        }
    }
    Ok(None)
}

/// Builds the necklace on `u` and checks the three defining conditions
/// and that it is reducing.
pub fn build_necklace(emb: &EmbeddedGraph, u: [usize; 3]) -> Result<Necklace> {
    let g = emb.graph();
    if u[0] == u[1] || u[1] == u[2] || u[0] == u[2] {
        return Err(violation("endpoints are not pairwise distinct"));
    }
    let sps = [
        canonical_sps(g, u[0], u[1])?,
        canonical_sps(g, u[1], u[2])?,
        canonical_sps(g, u[2], u[0])?,
    ];
    check_meets(&sps, u)?;
    let mut art = Vec::new();
    let mut beads = Vec::new();
    for (i, q) in sps.iter().enumerate() {
        let a = q.articulation();
        for (j, w) in a.windows(2).enumerate() {
            let seg = q.segment(w[0], w[1])?;
            let patch = is_patch(emb, &seg)
                .ok_or_else(|| violation(format!("segment {j} of system {i} lies in no disk")))?;
            beads.push(Bead {
                fibre: i,
                index: j,
                patch,
            });
        }
        for &v in &a[..a.len() - 1] {
            art.push(ArtVertex {
                vertex: v,
                fibre: i,
                height: q.height(v).unwrap(),
            });
        }
    }
    let reducing_cycle =
        reducing_cycle(emb, &sps)?.ok_or_else(|| violation("every cycle through the three systems is contractible"))?;
    Ok(Necklace {
        u,
        sps,
        art,
        beads,
        reducing_cycle,
    })
}

/// Re-checks a necklace from scratch: canonical systems, distinct
/// endpoints, pairwise meetings, disks and the reducing cycle. The disk
/// condition is checked twice, by testing every cycle of `G(Q^i)` for
/// contractibility and by disk certificates, and the two must agree.
pub fn verify_necklace(emb: &EmbeddedGraph, b: &Necklace) -> Result<()> {
    let g = emb.graph();
    let u = b.u;
    if u[0] == u[1] || u[1] == u[2] || u[0] == u[2] {
        return Err(violation("endpoints are not pairwise distinct"));
    }
    for i in 0..3 {
        if b.sps[i] != canonical_sps(g, u[i], u[(i + 1) % 3])? {
            return Err(violation(format!("system {i} is not canonical")));
        }
    }
    check_meets(&b.sps, u)?;
    for (i, q) in b.sps.iter().enumerate() {
        let h = q.subgraph();
        let (local, verts) = h.to_graph(g);
        let mut all_contractible = true;
        'len: for len in 3..=local.order() {
            for c in cycles_of_length(&local, len) {
                let c: Vec<usize> = c.iter().map(|&x| verts[x]).collect();
                if !is_contractible(emb, &c)? {
                    all_contractible = false;
                    break 'len;
                }
            }
        }
        let certified = lies_in_disk(emb, &h);
        if all_contractible != certified {
            return Err(violation(format!("disk checks disagree on system {i}")));
        }
        if !certified {
            return Err(violation(format!("system {i} lies in no disk")));
        }
    }
    let c = &b.reducing_cycle;
    let cset: BTreeSet<usize> = c.iter().copied().collect();
    if cset.len() != c.len() {
        return Err(violation("reducing cycle repeats a vertex"));
    }
    let edges: BTreeSet<(usize, usize)> = (0..c.len())
        .map(|k| {
            let (x, y) = (c[k], c[(k + 1) % c.len()]);
            (x.min(y), x.max(y))
        })
        .collect();
    for q in &b.sps {
        let hit = q.paths.iter().any(|p| {
            p.windows(2)
                .all(|w| edges.contains(&(w[0].min(w[1]), w[0].max(w[1]))))
        });
        if !hit {
            return Err(violation("reducing cycle does not follow a path of each system"));
        }
    }
    let path_edges: usize = b.sps.iter().map(Sps::length).sum();
    if path_edges != c.len() || is_contractible(emb, c)? {
        return Err(violation("reducing cycle is not a non-contractible union of three paths"));
    }
    Ok(())
}

/// Offsets on a cycle of length `l` whose pairwise cyclic distances lie
/// between `floor(l/3)` and `ceil(l/3)`, the evenly spaced one first.
pub fn balanced_offsets(l: usize) -> Vec<[usize; 3]> {
    let (lo, hi) = (l / 3, l.div_ceil(3));
    let d = |a: usize, b: usize| {
        let x = a.abs_diff(b);
        x.min(l - x)
    };
    let ok = |t: &[usize; 3]| [d(t[0], t[1]), d(t[1], t[2]), d(t[0], t[2])].iter().all(|&x| lo <= x && x <= hi);
    let first = [0, l.div_ceil(3), (2 * l).div_ceil(3)];
    let mut out = Vec::new();
    if ok(&first) {
        out.push(first);
    }
    for a in 0..l {
        for b in a + 1..l {
            for c in b + 1..l {
                let t = [a, b, c];
                if t != first && ok(&t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// A reducing necklace built on a shortest non-contractible cycle.
///
/// Every shortest non-contractible cycle and every balanced choice of
/// three vertices on it is tried in order; the first necklace passing
/// verification is returned, otherwise the first violation.
pub fn find_reducing_necklace(emb: &EmbeddedGraph) -> Result<Necklace> {
    if embedding_euler_genus(emb)? == 0 {
        return Err(Error::Precondition("planar embedding has no reducing necklace".into()));
    }
    let cycles = shortest_noncontractible_cycles(emb)?;
    if cycles.is_empty() {
        return Err(Error::Precondition("no non-contractible cycle".into()));
    }
    let mut first_err = None;
    for c in &cycles {
        for t in balanced_offsets(c.len()) {
            let u = [c[t[0]], c[t[1]], c[t[2]]];
            match build_necklace(emb, u).and_then(|b| verify_necklace(emb, &b).map(|_| b)) {
                Ok(b) => return Ok(b),
                Err(e @ Error::Necklace(_)) => {
                    first_err.get_or_insert(e);
                }
                Err(e) => return Err(e),
            }
        }
    }
    Err(first_err.expect("at least one candidate was tried"))
}

/// Searches all vertex triples for a reducing necklace.
pub fn exhaustive_reducing_necklace(emb: &EmbeddedGraph) -> Result<Option<Necklace>> {
    let n = emb.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                match build_necklace(emb, [a, b, c]) {
                    Ok(nl) => {
                        verify_necklace(emb, &nl)?;
                        return Ok(Some(nl));
                    }
                    Err(Error::Necklace(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::planar_embedding;
    use crate::surface::standard::*;

    #[test]
    fn offsets() {
        assert_eq!(balanced_offsets(3), vec![[0, 1, 2]]);
        assert_eq!(balanced_offsets(4)[0], [0, 2, 3]);
        assert_eq!(balanced_offsets(6)[0], [0, 2, 4]);
        assert_eq!(balanced_offsets(7)[0], [0, 3, 5]);
    }

    #[test]
    fn three_by_three_row() {
        let e = torus_grid_embedding(3, 3);
        let b = find_reducing_necklace(&e).unwrap();
        assert_eq!(b.u, [0, 1, 2]);
        assert!(b.beads.iter().all(Bead::is_trivial));
        assert_eq!(b.art_vertices(), BTreeSet::from([0, 1, 2]));
        verify_necklace(&e, &b).unwrap();
    }

    #[test]
    fn toroidal_k5_triangle() {
        let e = toroidal_k5();
        let b = find_reducing_necklace(&e).unwrap();
        assert_eq!(b.reducing_cycle.len(), 3);
        verify_necklace(&e, &b).unwrap();
    }

    #[test]
    fn planar_rejected() {
        let e = planar_embedding(&crate::graph::families::complete(4)).unwrap();
        assert!(matches!(find_reducing_necklace(&e), Err(Error::Precondition(_))));
    }

    #[test]
    fn square_cycle_breaks_meeting_condition() {
        let e = torus_grid_embedding(4, 4);
        assert!(matches!(find_reducing_necklace(&e), Err(Error::Necklace(_))));
    }
}
