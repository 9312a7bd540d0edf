use super::embedding::EmbeddedGraph;
use super::surgery::is_contractible;
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::par::{self, ExecMode};

/// Every cycle of exactly `len` vertices, once each, written from its
/// least vertex in the direction whose second vertex is smaller than the
/// last. Output is sorted.
pub fn cycles_of_length(g: &ColouredGraph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    let n = g.order();
    let mut on_path = vec![false; n];
    fn extend(
        g: &ColouredGraph,
        len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if g.adjacent(last, s) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbours(last) {
            if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(g, len, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        on_path[s] = true;
        let mut path = vec![s];
        extend(g, len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}

fn sorted_key(c: &[usize]) -> Vec<usize> {
    let mut k = c.to_vec();
    k.sort_unstable();
    k
}

/// All non-contractible cycles of minimum length, ordered by sorted vertex
/// list and then by sequence.
pub fn shortest_noncontractible_cycles(emb: &EmbeddedGraph) -> Result<Vec<Vec<usize>>> {
    if !emb.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    for len in 3..=emb.order() {
        let mut cands = cycles_of_length(emb.graph(), len);
        cands.sort_by_key(|c| (sorted_key(c), c.clone()));
        let verdicts = par::map_slice(ExecMode::default(), &cands, |c| is_contractible(emb, c));
        let mut found = Vec::new();
        for (c, v) in cands.into_iter().zip(verdicts) {
            if !v? {
                found.push(c);
            }
        }
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

/// A shortest non-contractible cycle, ties broken by the lexicographically
/// least sorted vertex list; `None` when every cycle is contractible.
pub fn shortest_noncontractible_cycle(emb: &EmbeddedGraph) -> Result<Option<Vec<usize>>> {
    if !emb.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    for len in 3..=emb.order() {
        let mut cands = cycles_of_length(emb.graph(), len);
        cands.sort_by_key(|c| (sorted_key(c), c.clone()));
        let hit = par::find_first(ExecMode::default(), cands.len(), |i| {
            match is_contractible(emb, &cands[i]) {
                Ok(false) => Some(Ok(i)),
                Ok(true) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(r) = hit {
            return Ok(Some(cands[r?].clone()));
        }
    }
    Ok(None)
}
