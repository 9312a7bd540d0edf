use super::refine::{refine_jointly, JointRefinement, WlConfig};
use crate::error::Result;
use crate::graph::ColouredGraph;
use crate::oracle::{automorphism_orbits, brute_force_isomorphic};
use std::collections::BTreeMap;

/// True iff some colour of the joint k-WL refinement has different tuple
/// counts in `V(G)^k` and `V(H)^k`.
pub fn distinguishes(g: &ColouredGraph, h: &ColouredGraph, k: usize) -> Result<bool> {
    distinguishes_with(g, h, k, &WlConfig::default())
}

pub fn distinguishes_with(
    g: &ColouredGraph,
    h: &ColouredGraph,
    k: usize,
    cfg: &WlConfig,
) -> Result<bool> {
    Ok(refine_jointly(&[g, h], k, cfg)?.distinguishes(0, 1))
}

fn groups(j: &JointRefinement) -> Vec<Vec<usize>> {
    let mut by: BTreeMap<Vec<_>, Vec<usize>> = BTreeMap::new();
    for (i, c) in j.colourings.iter().enumerate() {
        by.entry(c.histogram()).or_default().push(i);
    }
    by.into_values().collect()
}

/// True iff k-WL distinguishes `G` from every member of `family` that the
/// isomorphism oracle reports as non-isomorphic to `G`.
pub fn identifies_within(g: &ColouredGraph, k: usize, family: &[ColouredGraph]) -> Result<bool> {
    let mut all: Vec<&ColouredGraph> = vec![g];
    all.extend(family.iter());
    let j = refine_jointly(&all, k, &WlConfig::default())?;
    let hg = j.colourings[0].histogram();
    for (i, h) in family.iter().enumerate() {
        if j.colourings[i + 1].histogram() == hg && !brute_force_isomorphic(g, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every member of `family`, whether k-WL identifies it within the
/// family. One joint refinement serves all members.
pub fn identifies_each(family: &[ColouredGraph], k: usize, cfg: &WlConfig) -> Result<Vec<bool>> {
    let refs: Vec<&ColouredGraph> = family.iter().collect();
    let j = refine_jointly(&refs, k, cfg)?;
    let mut out = vec![true; family.len()];
    for group in groups(&j) {
        for (x, &a) in group.iter().enumerate() {
            for &b in &group[x + 1..] {
                if !brute_force_isomorphic(&family[a], &family[b])? {
                    out[a] = false;
                    out[b] = false;
                }
            }
        }
    }
    Ok(out)
}

/// The least `k ≤ k_max` such that k-WL identifies `G` within `family`.
pub fn wl_dimension_within(
    g: &ColouredGraph,
    family: &[ColouredGraph],
    k_max: usize,
) -> Result<Option<usize>> {
    for k in 1..=k_max {
        if identifies_within(g, k, family)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// True iff the k-WL colours of diagonal tuples partition `V(G)` exactly
/// into automorphism orbits.
pub fn determines_orbits_check(g: &ColouredGraph, k: usize) -> Result<bool> {
    let s = super::wl_refine(g, k)?;
    Ok(s.vertex_classes() == automorphism_orbits(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::enumerate_graphs;

    fn two_triangles() -> ColouredGraph {
        cycle(3).disjoint_union(&cycle(3))
    }

    #[test]
    fn self_never_distinguished() {
        for k in 1..=3 {
            assert!(!distinguishes(&petersen(), &petersen(), k).unwrap());
        }
    }

    #[test]
    fn c6_vs_two_triangles() {
        assert!(!distinguishes(&cycle(6), &two_triangles(), 1).unwrap());
        assert!(distinguishes(&cycle(6), &two_triangles(), 2).unwrap());
    }

    #[test]
    fn different_orders_distinguished() {
        assert!(distinguishes(&path(3), &path(4), 1).unwrap());
    }

    #[test]
    fn identifies_singleton_family() {
        let g = cycle(5);
        assert!(identifies_within(&g, 1, std::slice::from_ref(&g)).unwrap());
    }

    #[test]
    fn c6_dimension_is_two() {
        let family = enumerate_graphs(6, false).unwrap();
        assert_eq!(family.len(), 156);
        assert_eq!(wl_dimension_within(&cycle(6), &family, 3).unwrap(), Some(2));
    }

    #[test]
    fn orbits_of_small_graphs() {
        assert!(determines_orbits_check(&cycle(5), 1).unwrap());
        assert!(determines_orbits_check(&path(4), 1).unwrap());
    }
}
