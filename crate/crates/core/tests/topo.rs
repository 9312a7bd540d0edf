use std::collections::{BTreeMap, BTreeSet};
use wlgenus::graph::Subgraph;
use wlgenus::surface::standard::{toroidal_k5, torus_grid_embedding};
use wlgenus::surface::{EmbeddedGraph, GenusConfig};
use wlgenus::topo::*;
use wlgenus::ColouredGraph;

/// Straight-line plane embedding: neighbours in counter-clockwise order.
fn plane(points: &[(f64, f64)], edges: &[(usize, usize)]) -> EmbeddedGraph {
    let g = ColouredGraph::new(points.len(), edges).unwrap();
    let rot = (0..points.len())
        .map(|v| {
            let (x, y) = points[v];
            let mut nb = g.neighbours(v).to_vec();
            nb.sort_by(|&a, &b| {
                let ang = |w: usize| (points[w].1 - y).atan2(points[w].0 - x);
                ang(a).partial_cmp(&ang(b)).unwrap()
            });
            nb
        })
        .collect();
    let m = g.size();
    EmbeddedGraph::new(g, rot, vec![1; m]).unwrap()
}

// u, u', a1..a3, b1..b3, x, y
const U: usize = 0;
const U2: usize = 1;

fn three_paths() -> (Vec<(f64, f64)>, Vec<(usize, usize)>) {
    let mut pts = vec![(0.0, 0.0), (0.0, 3.0)];
    pts.extend((1..=3).map(|i| (i as f64 - 2.0, 1.0)));
    pts.extend((1..=3).map(|i| (i as f64 - 2.0, 2.0)));
    pts.push((-0.5, 1.5));
    pts.push((0.5, 1.5));
    let mut edges = Vec::new();
    for i in 0..3 {
        edges.extend([(U, 2 + i), (2 + i, 5 + i), (5 + i, U2)]);
    }
    edges.extend([(2, 8), (3, 8), (6, 9), (7, 9)]);
    (pts, edges)
}

fn planar_fibres(emb: &EmbeddedGraph) -> Fibres {
    let q = canonical_sps(emb.graph(), U, U2).unwrap();
    assert_eq!(q.paths.len(), 3);
    let p = is_patch(emb, &q).expect("three shortest paths bound a disk");
    fibres(emb, 1, &p, &GenusConfig::default()).unwrap()
}

#[test]
fn fibres_with_an_outer_detour_dangle() {
    let (mut pts, mut edges) = three_paths();
    pts.extend([(-2.0, 0.0), (-2.0, 1.5), (-2.0, 3.0)]);
    edges.extend([(U, 10), (10, 11), (11, 12), (12, U2)]);
    let f = planar_fibres(&plane(&pts, &edges));
    let parts: Vec<BTreeSet<usize>> = vec![[2, 5].into(), [3, 6].into(), [4, 7].into()];
    assert_eq!(f.parts, parts);
    assert_eq!(f.fibres.len(), 3);
    assert!(f.fibres.iter().all(|q| q.paths.len() == 1));
    assert_eq!(f.adjacent, BTreeSet::from([(0, 1), (1, 2)]));
    assert_eq!(f.dangling, Some((0, 2)));
    assert_eq!(f.cyclic_order, Some(vec![0, 1, 2]));
    assert_eq!(f.gaps, 2);
}

#[test]
fn fibres_closed_by_a_lower_bridge_form_a_cycle() {
    let (mut pts, mut edges) = three_paths();
    pts.extend([(-1.0, -1.0), (1.0, -1.0)]);
    edges.extend([(2, 10), (10, 11), (11, 4)]);
    let f = planar_fibres(&plane(&pts, &edges));
    assert_eq!(f.adjacent, BTreeSet::from([(0, 1), (0, 2), (1, 2)]));
    assert_eq!(f.dangling, None);
    assert_eq!(f.cyclic_order, Some(vec![0, 1, 2]));
    assert_eq!(f.gaps, 2);
}

#[test]
fn two_fibres_joined_through_the_centre() {
    let pts = [(0.0, 0.0), (0.0, 2.0), (-1.0, 1.0), (1.0, 1.0), (0.0, 1.0)];
    let edges = [(0, 2), (0, 3), (2, 1), (3, 1), (2, 4), (3, 4)];
    let emb = plane(&pts, &edges);
    let q = canonical_sps(emb.graph(), 0, 1).unwrap();
    let p = is_patch(&emb, &q).unwrap();
    let f = fibres(&emb, 1, &p, &GenusConfig::default()).unwrap();
    assert_eq!(f.parts.len(), 2);
    assert_eq!(f.adjacent, BTreeSet::from([(0, 1)]));
    assert_eq!(f.dangling, None);
    assert_eq!(f.gaps, 1);
}

#[test]
fn fibres_reject_trivial_patches() {
    let (pts, edges) = three_paths();
    let emb = plane(&pts, &edges);
    let q = canonical_sps(emb.graph(), U, 2).unwrap();
    let p = is_patch(&emb, &q).unwrap();
    assert!(fibres(&emb, 1, &p, &GenusConfig::default()).is_err());
}

fn image(h: &Subgraph, perm: &[usize]) -> Subgraph {
    Subgraph::new(
        h.vertices.iter().map(|&v| perm[v]),
        h.edges.iter().map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b]))),
    )
}

/// Patches with their internal graphs, keyed by endpoints.
fn patches(emb: &EmbeddedGraph) -> BTreeMap<(usize, usize), (Sps, Subgraph)> {
    let n = emb.order();
    let mut out = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            let q = canonical_sps(emb.graph(), a, b).unwrap();
            if let Some(p) = is_patch(emb, &q) {
                let i = if p.is_trivial() { q.subgraph() } else { internal_graph(emb, &p).unwrap() };
                out.insert((a, b), (q, i));
            }
        }
    }
    out
}

#[test]
fn grid_translations_map_patches_to_patches() {
    let (r, c) = (4, 5);
    let emb = torus_grid_embedding(r, c);
    let all = patches(&emb);
    assert!(all.values().any(|(q, _)| !q.is_trivial()));
    for (di, dj) in [(0, 1), (1, 0), (2, 3)] {
        let perm: Vec<usize> = (0..r * c).map(|v| ((v / c + di) % r) * c + (v % c + dj) % c).collect();
        for (&(a, b), (q, i)) in &all {
            let key = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            let (q2, i2) = all.get(&key).expect("image of a patch is a patch");
            assert_eq!(q2.subgraph(), image(&q.subgraph(), &perm));
            assert_eq!(i2, &image(i, &perm));
        }
    }
}

#[test]
fn relabelling_commutes_with_internal_graphs() {
    for emb in [toroidal_k5(), torus_grid_embedding(3, 4)] {
        let n = emb.order();
        let perm: Vec<usize> = (0..n).map(|v| (7 * v + 1) % n).collect();
        assert_eq!(perm.iter().collect::<BTreeSet<_>>().len(), n, "affine map is a bijection");
        let before = patches(&emb);
        let after = patches(&emb.permute(&perm));
        assert_eq!(before.len(), after.len());
        for (&(a, b), (_, i)) in &before {
            let key = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            assert_eq!(after[&key].1, image(i, &perm));
        }
    }
}

#[test]
fn minimal_simplifying_patch_on_the_three_grid() {
    let emb = torus_grid_embedding(3, 3);
    let cfg = GenusConfig::default();
    let p = minimal_simplifying_patch(&emb, 2, &cfg).unwrap().expect("a row is simplifying");
    assert!(is_simplifying(emb.graph(), 2, &p.sps.subgraph(), &cfg).unwrap());
    for sub in subpatches(&emb, &p) {
        if sub.sps != p.sps {
            assert!(!is_simplifying(emb.graph(), 2, &sub.sps.subgraph(), &cfg).unwrap());
        }
    }
}

#[test]
fn necklaces_on_the_torus_cut_to_planar_pieces() {
    for emb in [torus_grid_embedding(3, 3), toroidal_k5(), torus_grid_embedding(5, 5)] {
        let b = find_reducing_necklace(&emb).unwrap();
        verify_necklace(&emb, &b).unwrap();
        let cut = cut_graph(&emb, &b).unwrap();
        for comp in cut.components() {
            let (h, _) = comp.to_graph(emb.graph());
            assert!(wlgenus::surface::is_planar(&h));
        }
    }
}
