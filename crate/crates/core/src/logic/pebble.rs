//! The bijective (k+1)-pebble game.
//!
//! A position is a pair of k-tuples `(ū, v̄)`. Each round Duplicator picks
//! a bijection `f: V(G) → V(H)`, Spoiler picks `v` and places the extra
//! pebble pair on `(v, f(v))`; the extended position must be a partial
//! isomorphism, after which Spoiler lifts one of the k original pairs.
//! Duplicator's winning positions are computed as a greatest fixpoint,
//! with Duplicator's choice of bijection decided by bipartite matching.

use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};

pub struct PebbleGame {
    k: usize,
    n: usize,
    /// `win[a * n^k + b]` for tuple indices `a` in G and `b` in H.
    win: Vec<bool>,
    same_order: bool,
    codes_g: Vec<u32>,
    codes_h: Vec<u32>,
}

fn shared_codes(g: &ColouredGraph, h: &ColouredGraph) -> (Vec<u32>, Vec<u32>) {
    let mut universe: Vec<Colour> = g.colour_universe();
    universe.extend(h.colour_universe());
    universe.sort();
    universe.dedup();
    let code = |x: &ColouredGraph| {
        let n = x.order();
        let mut c = vec![0u32; n * n];
        for u in 0..n {
            for v in 0..n {
                c[u * n + v] = match x.colour(u, v) {
                    Some(col) => 1 + universe.binary_search(col).unwrap() as u32 * 2 + u32::from(u != v),
                    None => 0,
                };
            }
        }
        c
    };
    (code(g), code(h))
}

fn tuple(n: usize, k: usize, mut i: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for p in (0..k).rev() {
        t[p] = i % n;
        i /= n;
    }
    t
}

fn index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |a, &x| a * n + x)
}

fn perfect_matching(n: usize, allowed: &[bool]) -> bool {
    let mut match_h = vec![usize::MAX; n];
    fn augment(
        v: usize,
        n: usize,
        allowed: &[bool],
        seen: &mut [bool],
        match_h: &mut [usize],
    ) -> bool {
        for w in 0..n {
            if allowed[v * n + w] && !seen[w] {
                seen[w] = true;
                if match_h[w] == usize::MAX || augment(match_h[w], n, allowed, seen, match_h) {
                    match_h[w] = v;
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|v| {
        let mut seen = vec![false; n];
        augment(v, n, allowed, &mut seen, &mut match_h)
    })
}

impl PebbleGame {
    /// Solves the game on `k`-tuple positions of `G` against `H`.
    pub fn solve(g: &ColouredGraph, h: &ColouredGraph, k: usize) -> Result<PebbleGame> {
        if k < 1 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        let n = g.order();
        let (codes_g, codes_h) = shared_codes(g, h);
        if n != h.order() {
            return Ok(PebbleGame {
                k,
                n,
                win: Vec::new(),
                same_order: false,
                codes_g,
                codes_h,
            });
        }
        let tuples = n.pow(k as u32);
        let atp_equal = |a: &[usize], b: &[usize]| {
            a.iter().zip(b).all(|(&x, &y)| {
                a.iter()
                    .zip(b)
                    .all(|(&x2, &y2)| codes_g[x * n + x2] == codes_h[y * n + y2])
            })
        };
        let mut win: Vec<bool> = (0..tuples * tuples)
            .map(|i| atp_equal(&tuple(n, k, i / tuples), &tuple(n, k, i % tuples)))
            .collect();
        let mut weights = vec![1usize; k];
        for p in (0..k.saturating_sub(1)).rev() {
            weights[p] = weights[p + 1] * n;
        }
        loop {
            let mut changed = false;
            let prev = win.clone();
            for i in 0..tuples * tuples {
                if !prev[i] {
                    continue;
                }
                let (a, b) = (i / tuples, i % tuples);
                let ta = tuple(n, k, a);
                let tb = tuple(n, k, b);
                let mut allowed = vec![false; n * n];
                for v in 0..n {
                    for w in 0..n {
                        let ext_ok = codes_g[v * n + v] == codes_h[w * n + w]
                            && ta.iter().zip(&tb).all(|(&x, &y)| {
                                codes_g[x * n + v] == codes_h[y * n + w]
                                    && codes_g[v * n + x] == codes_h[w * n + y]
                            });
                        allowed[v * n + w] = ext_ok
                            && (0..k).all(|j| {
                                let a2 = a + v * weights[j] - ta[j] * weights[j];
                                let b2 = b + w * weights[j] - tb[j] * weights[j];
                                prev[a2 * tuples + b2]
                            });
                    }
                }
                if !perfect_matching(n, &allowed) {
                    win[i] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok(PebbleGame {
            k,
            n,
            win,
            same_order: true,
            codes_g,
            codes_h,
        })
    }

    /// Duplicator wins from the position `(ū, v̄)` of two k-tuples.
    pub fn wins(&self, u: &[usize], v: &[usize]) -> bool {
        if !self.same_order {
            return false;
        }
        let tuples = self.n.pow(self.k as u32);
        self.win[index(self.n, u) * tuples + index(self.n, v)]
    }

    /// Duplicator wins from the empty position.
    pub fn wins_empty(&self) -> bool {
        if !self.same_order {
            return false;
        }
        let n = self.n;
        let mut allowed = vec![false; n * n];
        for v in 0..n {
            for w in 0..n {
                allowed[v * n + w] = self.wins(&vec![v; self.k], &vec![w; self.k]);
            }
        }
        perfect_matching(n, &allowed)
    }

    /// Duplicator wins from a position of `m ≤ k + 1` pebble pairs. Shorter
    /// positions are padded by repeating the last pebbled vertex; a full
    /// position of `k + 1` pairs must be a partial isomorphism from which
    /// every k-subposition is winning.
    pub fn wins_from(&self, u: &[usize], v: &[usize]) -> Result<bool> {
        if u.len() != v.len() {
            return Err(Error::InvalidArgument(format!(
                "start tuples have arities {} and {}",
                u.len(),
                v.len()
            )));
        }
        if u.len() > self.k + 1 {
            return Err(Error::InvalidArgument("more than k + 1 pebbles".into()));
        }
        if let Some(&x) = u.iter().chain(v).find(|&&x| x >= self.n) {
            return Err(Error::VertexOutOfRange(x));
        }
        if !self.same_order {
            return Ok(false);
        }
        let m = u.len();
        if m == 0 {
            return Ok(self.wins_empty());
        }
        if m <= self.k {
            let mut pu = u.to_vec();
            let mut pv = v.to_vec();
            pu.resize(self.k, u[m - 1]);
            pv.resize(self.k, v[m - 1]);
            return Ok(self.wins(&pu, &pv));
        }
        let n = self.n;
        let partial_iso = u.iter().zip(v).all(|(&x, &y)| {
            u.iter()
                .zip(v)
                .all(|(&x2, &y2)| self.codes_g[x * n + x2] == self.codes_h[y * n + y2])
        });
        Ok(partial_iso
            && (0..m).all(|j| {
                let mut su = u.to_vec();
                let mut sv = v.to_vec();
                su.remove(j);
                sv.remove(j);
                self.wins(&su, &sv)
            }))
    }
}

/// Whether Duplicator wins the bijective (k+1)-pebble game on `G`, `H`
/// from the given start position.
pub fn bijective_pebble_game(
    g: &ColouredGraph,
    h: &ColouredGraph,
    k: usize,
    start_g: &[usize],
    start_h: &[usize],
) -> Result<bool> {
    if start_g.len() != start_h.len() {
        return Err(Error::InvalidArgument("arity mismatch between start tuples".into()));
    }
    PebbleGame::solve(g, h, k)?.wins_from(start_g, start_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn identity_position() {
        let g = petersen();
        assert!(bijective_pebble_game(&g, &g, 2, &[0, 5], &[0, 5]).unwrap());
        assert!(bijective_pebble_game(&g, &g, 1, &[], &[]).unwrap());
    }

    #[test]
    fn c6_vs_two_triangles() {
        let two = cycle(3).disjoint_union(&cycle(3));
        assert!(bijective_pebble_game(&cycle(6), &two, 1, &[], &[]).unwrap());
        assert!(!bijective_pebble_game(&cycle(6), &two, 2, &[], &[]).unwrap());
    }

    #[test]
    fn order_mismatch() {
        assert!(!bijective_pebble_game(&path(3), &path(4), 2, &[], &[]).unwrap());
        assert!(bijective_pebble_game(&path(3), &path(3), 1, &[0], &[0, 1]).is_err());
    }

    #[test]
    fn full_position() {
        let g = cycle(5);
        // (0,1) adjacent vs (0,2) not adjacent
        assert!(!bijective_pebble_game(&g, &g, 1, &[0, 1], &[0, 2]).unwrap());
        assert!(bijective_pebble_game(&g, &g, 1, &[0, 1], &[2, 3]).unwrap());
        assert!(bijective_pebble_game(&g, &g, 1, &[0, 2], &[1, 3]).unwrap());
    }
}
