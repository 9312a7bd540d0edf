//! Brute-force isomorphism by individualisation and refinement.
//!
//! The refinement used here is a self-contained equitable-partition
//! routine, independent of [`crate::wl`], so that the oracle can be used to
//! cross-check the WL engine.

use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashMap;

/// Limits for the backtracking search.
#[derive(Clone, Copy, Debug)]
pub struct IsoLimits {
    pub max_order: usize,
    pub max_nodes: u64,
}

impl Default for IsoLimits {
    fn default() -> Self {
        IsoLimits {
            max_order: 48,
            max_nodes: 2_000_000,
        }
    }
}

/// Dense encoding of a coloured graph over a colour universe shared with
/// the other side of the comparison.
struct Dense {
    n: usize,
    vcol: Vec<u32>,
    adj: Vec<Vec<(usize, u32, u32)>>,
}

fn encode_pair(g: &ColouredGraph, h: &ColouredGraph) -> (Dense, Dense) {
    let mut universe: Vec<&Colour> = Vec::new();
    for x in [g, h] {
        universe.extend(x.vertex_colours());
        for &(u, v) in x.edges() {
            universe.push(x.colour(u, v).unwrap());
            universe.push(x.colour(v, u).unwrap());
        }
    }
    universe.sort();
    universe.dedup();
    let id: HashMap<&Colour, u32> = universe.iter().enumerate().map(|(i, c)| (*c, i as u32)).collect();
    let enc = |x: &ColouredGraph| Dense {
        n: x.order(),
        vcol: x.vertex_colours().iter().map(|c| id[c]).collect(),
        adj: (0..x.order())
            .map(|u| {
                x.neighbours(u)
                    .iter()
                    .map(|&w| (w, id[x.colour(u, w).unwrap()], id[x.colour(w, u).unwrap()]))
                    .collect()
            })
            .collect(),
    };
    (enc(g), enc(h))
}

/// Refines two colourings to their coarsest common equitable partition.
/// Returns false if the two sides stop having equal class sizes.
fn equitable(a: &Dense, b: &Dense, ca: &mut [u32], cb: &mut [u32]) -> bool {
    let mut classes = distinct(ca, cb);
    loop {
        let sig = |d: &Dense, c: &[u32], v: usize| {
            let mut m: Vec<(u32, u32, u32)> = d.adj[v].iter().map(|&(w, x, y)| (x, y, c[w])).collect();
            m.sort_unstable();
            (c[v], m)
        };
        let sa: Vec<_> = (0..a.n).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..b.n).map(|v| sig(b, cb, v)).collect();
        let mut keys: Vec<&(u32, Vec<(u32, u32, u32)>)> = sa.iter().chain(sb.iter()).collect();
        keys.sort();
        keys.dedup();
        for v in 0..a.n {
            ca[v] = keys.binary_search(&&sa[v]).unwrap() as u32;
        }
        for v in 0..b.n {
            cb[v] = keys.binary_search(&&sb[v]).unwrap() as u32;
        }
        if !same_counts(ca, cb) {
            return false;
        }
        let now = keys.len();
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn distinct(ca: &[u32], cb: &[u32]) -> usize {
    let mut all: Vec<u32> = ca.iter().chain(cb).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn same_counts(ca: &[u32], cb: &[u32]) -> bool {
    let mut x = ca.to_vec();
    let mut y = cb.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

struct Search<'a, R> {
    a: &'a Dense,
    b: &'a Dense,
    nodes: u64,
    limits: IsoLimits,
    rng: Option<&'a mut R>,
}

impl<R: Rng> Search<'_, R> {
    fn run(&mut self, ca: Vec<u32>, cb: Vec<u32>) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::BudgetExhausted { best: None });
        }
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for &c in &ca {
            *counts.entry(c).or_default() += 1;
        }
        // target cell: smallest non-singleton, ties by colour
        let target = counts
            .iter()
            .filter(|(_, &k)| k > 1)
            .min_by_key(|(&c, &k)| (k, c))
            .map(|(&c, _)| c);
        let Some(cell) = target else {
            let mut pos: HashMap<u32, usize> = HashMap::new();
            for (w, &c) in cb.iter().enumerate() {
                pos.insert(c, w);
            }
            let map: Vec<usize> = ca.iter().map(|c| pos[c]).collect();
            return Ok(self.check(&map).then_some(map));
        };
        let v = ca.iter().position(|&c| c == cell).unwrap();
        let mut candidates: Vec<usize> = (0..self.b.n).filter(|&w| cb[w] == cell).collect();
        if let Some(rng) = self.rng.as_mut() {
            candidates.shuffle(*rng);
        }
        let fresh = ca.iter().chain(&cb).copied().max().unwrap_or(0) + 1;
        for w in candidates {
            let mut na = ca.clone();
            let mut nb = cb.clone();
            na[v] = fresh;
            nb[w] = fresh;
            if !equitable(self.a, self.b, &mut na, &mut nb) {
                continue;
            }
            if let Some(map) = self.run(na, nb)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }

    fn check(&self, map: &[usize]) -> bool {
        (0..self.a.n).all(|u| {
            self.a.vcol[u] == self.b.vcol[map[u]]
                && self.a.adj[u].len() == self.b.adj[map[u]].len()
                && self.a.adj[u].iter().all(|&(w, x, y)| {
                    self.b.adj[map[u]]
                        .iter()
                        .any(|&(w2, x2, y2)| w2 == map[w] && x2 == x && y2 == y)
                })
        })
    }
}

fn search<R: Rng>(
    g: &ColouredGraph,
    h: &ColouredGraph,
    limits: IsoLimits,
    rng: Option<&mut R>,
) -> Result<Option<Vec<usize>>> {
    let order = g.order().max(h.order());
    if order > limits.max_order {
        return Err(Error::SizeBound {
            order,
            bound: limits.max_order,
        });
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let (a, b) = encode_pair(g, h);
    let mut ca = a.vcol.clone();
    let mut cb = b.vcol.clone();
    if !same_counts(&ca, &cb) || !equitable(&a, &b, &mut ca, &mut cb) {
        return Ok(None);
    }
    let mut s = Search {
        a: &a,
        b: &b,
        nodes: 0,
        limits,
        rng,
    };
    let found = s.run(ca, cb)?;
    if let Some(map) = &found {
        assert!(g.is_isomorphism(h, map), "oracle produced an invalid witness");
    }
    Ok(found)
}

/// A colour-preserving isomorphism `G → H` if one exists.
pub fn find_isomorphism(g: &ColouredGraph, h: &ColouredGraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with(g, h, IsoLimits::default())
}

pub fn find_isomorphism_with(
    g: &ColouredGraph,
    h: &ColouredGraph,
    limits: IsoLimits,
) -> Result<Option<Vec<usize>>> {
    search::<rand_chacha::ChaCha8Rng>(g, h, limits, None)
}

pub fn brute_force_isomorphic(g: &ColouredGraph, h: &ColouredGraph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An automorphism found with a randomised branching order.
pub fn random_automorphism<R: Rng>(g: &ColouredGraph, rng: &mut R) -> Result<Vec<usize>> {
    let map = search(g, g, IsoLimits::default(), Some(rng))?;
    Ok(map.expect("identity is an automorphism"))
}

/// The orbit partition of `Aut(G)`: classes sorted, ordered by least vertex.
pub fn automorphism_orbits(g: &ColouredGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    let limits = IsoLimits::default();
    if n > limits.max_order {
        return Err(Error::SizeBound {
            order: n,
            bound: limits.max_order,
        });
    }
    let (a, b) = encode_pair(g, g);
    let mut ca = a.vcol.clone();
    let mut cb = b.vcol.clone();
    equitable(&a, &b, &mut ca, &mut cb);
    let mut orbit: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if orbit[v] != v {
            continue;
        }
        for w in v + 1..n {
            if orbit[w] != w || ca[w] != ca[v] {
                continue;
            }
            let gv = crate::graph::individualise(g, &[v])?;
            let gw = crate::graph::individualise(g, &[w])?;
            if find_isomorphism_with(&gv, &gw, limits)?.is_some() {
                orbit[w] = v;
            }
        }
    }
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        classes.entry(orbit[v]).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::individualise;
    use rand::SeedableRng;

    #[test]
    fn identity_and_relabelling() {
        let g = petersen();
        let map = find_isomorphism(&g, &g).unwrap().unwrap();
        assert!(g.is_isomorphism(&g, &map));
        let perm = [3, 7, 1, 0, 9, 2, 8, 4, 6, 5];
        assert!(brute_force_isomorphic(&g, &g.permute(&perm)).unwrap());
    }

    #[test]
    fn c6_vs_two_triangles() {
        let two = cycle(3).disjoint_union(&cycle(3));
        assert!(!brute_force_isomorphic(&cycle(6), &two).unwrap());
    }

    #[test]
    fn colours_matter() {
        let mut g = path(3);
        g.set_arc_colour(0, 1, Colour::atom("d")).unwrap();
        let mut h = path(3);
        h.set_arc_colour(1, 0, Colour::atom("d")).unwrap();
        assert!(!brute_force_isomorphic(&g, &h).unwrap());
        let mut h2 = path(3);
        h2.set_arc_colour(2, 1, Colour::atom("d")).unwrap();
        assert!(brute_force_isomorphic(&g, &h2).unwrap());
    }

    #[test]
    fn orbits() {
        assert_eq!(automorphism_orbits(&complete(5)).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(automorphism_orbits(&path(4)).unwrap(), vec![vec![0, 3], vec![1, 2]]);
        let c4 = individualise(&cycle(4), &[0]).unwrap();
        assert_eq!(automorphism_orbits(&c4).unwrap(), vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn random_automorphisms_are_valid() {
        let g = petersen();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut distinct = std::collections::BTreeSet::new();
        for _ in 0..20 {
            let a = random_automorphism(&g, &mut rng).unwrap();
            assert!(g.is_isomorphism(&g, &a));
            distinct.insert(a);
        }
        assert!(distinct.len() > 5);
    }

    #[test]
    fn size_bound() {
        let g = path(60);
        assert!(matches!(
            brute_force_isomorphic(&g, &g),
            Err(Error::SizeBound { .. })
        ));
    }
}
