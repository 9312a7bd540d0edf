//! Isomorphism classes of small uncoloured graphs.
//!
//! Graphs on `n` vertices are grown from representatives on `n - 1`
//! vertices by adding a vertex with every possible neighbourhood; the
//! candidates are bucketed by a cheap invariant and deduplicated with the
//! isomorphism oracle.

use super::iso::brute_force_isomorphic;
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use std::collections::BTreeMap;

pub const MAX_ORDER: usize = 8;

fn invariant(g: &ColouredGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut rows: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbours(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            let tri = g
                .neighbours(v)
                .iter()
                .flat_map(|&a| g.neighbours(v).iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && g.adjacent(a, b))
                .count();
            let mut row = vec![g.degree(v), tri];
            row.extend(nd);
            row
        })
        .collect();
    rows.sort();
    rows
}

fn dedup(candidates: Vec<ColouredGraph>) -> Result<Vec<ColouredGraph>> {
    let mut buckets: BTreeMap<(usize, Vec<Vec<usize>>), Vec<ColouredGraph>> = BTreeMap::new();
    for g in candidates {
        let key = (g.size(), invariant(&g));
        let bucket = buckets.entry(key).or_default();
        let mut seen = false;
        for h in bucket.iter() {
            if brute_force_isomorphic(&g, h)? {
                seen = true;
                break;
            }
        }
        if !seen {
            bucket.push(g);
        }
    }
    Ok(buckets.into_values().flatten().collect())
}

/// One representative per isomorphism class of graphs of order `n`,
/// ordered by size and invariant.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<ColouredGraph>> {
    if n > MAX_ORDER {
        return Err(Error::SizeBound {
            order: n,
            bound: MAX_ORDER,
        });
    }
    let mut level = vec![ColouredGraph::from_edges(0, &[])];
    for m in 1..=n {
        let mut candidates = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut edges = g.edges().to_vec();
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        edges.push((u, m - 1));
                    }
                }
                candidates.push(ColouredGraph::from_edges(m, &edges));
            }
        }
        level = dedup(candidates)?;
    }
    if connected_only {
        level.retain(|g| g.is_connected());
    }
    Ok(level)
}

/// One representative per isomorphism class of trees of order `n`.
pub fn enumerate_trees(n: usize) -> Result<Vec<ColouredGraph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![ColouredGraph::from_edges(1, &[])];
    for m in 2..=n {
        let mut candidates = Vec::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, m - 1));
                candidates.push(ColouredGraph::from_edges(m, &edges));
            }
        }
        level = dedup(candidates)?;
    }
    Ok(level)
}
