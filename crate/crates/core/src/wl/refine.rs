use crate::error::{Error, Result};
use crate::graph::{Colour, ColouredGraph};
use crate::par::{self, ExecMode};
use std::collections::HashMap;

/// Canonical identifier of a colour class. Identifiers are comparable
/// across all graphs of one joint refinement run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColourId(pub u32);

/// Tuning for refinement runs.
#[derive(Clone, Copy, Debug)]
pub struct WlConfig {
    pub mode: ExecMode,
    /// Keep every round's colouring.
    pub audit: bool,
    /// Use neighbour multisets for `k = 1`.
    pub fast_path: bool,
    /// Upper bound on the signature cells held per round
    /// (`tuples * n * (k + 1)` summed over the family).
    pub max_cells: usize,
}

impl Default for WlConfig {
    fn default() -> Self {
        WlConfig {
            mode: ExecMode::default(),
            audit: false,
            fast_path: true,
            max_cells: 1 << 27,
        }
    }
}

impl WlConfig {
    pub fn sequential() -> Self {
        WlConfig {
            mode: ExecMode::Sequential,
            ..Self::default()
        }
    }

    pub fn audited() -> Self {
        WlConfig {
            audit: true,
            ..Self::default()
        }
    }
}

/// The stable colouring of `V(G)^k`. Tuple `(u_0,…,u_{k-1})` has index
/// `Σ u_i n^(k-1-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableColouring {
    pub k: usize,
    pub n: usize,
    pub colouring: Vec<u32>,
    pub rounds: usize,
    pub history: Option<Vec<Vec<u32>>>,
}

impl StableColouring {
    pub fn tuple_index(&self, tuple: &[usize]) -> usize {
        tuple_index(self.n, tuple)
    }

    pub fn tuple(&self, index: usize) -> Vec<usize> {
        decode(self.n, self.k, index)
    }

    pub fn colour_of(&self, tuple: &[usize]) -> ColourId {
        ColourId(self.colouring[self.tuple_index(tuple)])
    }

    /// Colour of the diagonal tuple `(v,…,v)`.
    pub fn vertex_colour(&self, v: usize) -> ColourId {
        self.colour_of(&vec![v; self.k])
    }

    pub fn num_classes(&self) -> usize {
        count_classes(&self.colouring)
    }

    /// `(colour, count)` sorted by colour.
    pub fn histogram(&self) -> Vec<(ColourId, usize)> {
        histogram(&self.colouring)
            .into_iter()
            .map(|(c, n)| (ColourId(c), n))
            .collect()
    }

    /// Vertex classes induced by the diagonal, each sorted, ordered by
    /// least vertex.
    pub fn vertex_classes(&self) -> Vec<Vec<usize>> {
        let mut by: HashMap<u32, Vec<usize>> = HashMap::new();
        for v in 0..self.n {
            by.entry(self.vertex_colour(v).0).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by.into_values().collect();
        classes.sort();
        classes
    }
}

pub(crate) fn tuple_index(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &u| acc * n + u)
}

pub(crate) fn decode(n: usize, k: usize, mut index: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for i in (0..k).rev() {
        t[i] = index % n;
        index /= n;
    }
    t
}

pub(crate) fn count_classes(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

pub(crate) fn histogram(c: &[u32]) -> Vec<(u32, usize)> {
    let mut v = c.to_vec();
    v.sort_unstable();
    let mut out: Vec<(u32, usize)> = Vec::new();
    for x in v {
        match out.last_mut() {
            Some((y, n)) if *y == x => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// The output of refining several graphs in lockstep over one colour
/// universe.
#[derive(Clone, Debug)]
pub struct JointRefinement {
    pub k: usize,
    pub colourings: Vec<StableColouring>,
    /// Rounds executed until the joint partition was stable.
    pub rounds: usize,
}

impl JointRefinement {
    /// True iff graphs `a` and `b` have different colour histograms.
    pub fn distinguishes(&self, a: usize, b: usize) -> bool {
        self.colourings[a].histogram() != self.colourings[b].histogram()
    }
}

/// Pair codes: 0 for distinct non-adjacent vertices, `1 + 2c` on the
/// diagonal with vertex colour `c`, `2 + 2c` for an arc of colour `c`.
struct Prepared {
    n: usize,
    codes: Vec<u32>,
}

fn prepare(graphs: &[&ColouredGraph]) -> Vec<Prepared> {
    let mut universe: Vec<&Colour> = Vec::new();
    for g in graphs {
        universe.extend(g.vertex_colours().iter());
        for &(u, v) in g.edges() {
            universe.push(g.colour(u, v).unwrap());
            universe.push(g.colour(v, u).unwrap());
        }
    }
    universe.sort();
    universe.dedup();
    let id: HashMap<&Colour, u32> = universe
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, i as u32))
        .collect();
    graphs
        .iter()
        .map(|g| {
            let n = g.order();
            let mut codes = vec![0u32; n * n];
            for v in 0..n {
                codes[v * n + v] = 1 + 2 * id[g.vertex_colour(v)];
            }
            for &(u, v) in g.edges() {
                codes[u * n + v] = 2 + 2 * id[g.colour(u, v).unwrap()];
                codes[v * n + u] = 2 + 2 * id[g.colour(v, u).unwrap()];
            }
            Prepared { n, codes }
        })
        .collect()
}

/// Ranks `keys` family-wide: equal keys get equal ids, ids follow key order.
fn rank<K: Ord + Sync + Send + Clone>(mode: ExecMode, keys: &[Vec<K>]) -> Vec<Vec<u32>> {
    let mut all: Vec<&K> = keys.iter().flatten().collect();
    par::sort_dedup(mode, &mut all);
    keys.iter()
        .map(|ks| {
            par::map_slice(mode, ks, |k| {
                all.binary_search(&k).expect("key present") as u32
            })
        })
        .collect()
}

fn atomic_codes(p: &Prepared, k: usize, t: usize) -> Vec<u32> {
    let tuple = decode(p.n, k, t);
    let mut out = Vec::with_capacity(k * k);
    for &a in &tuple {
        for &b in &tuple {
            out.push(p.codes[a * p.n + b]);
        }
    }
    out
}

fn ext_code(p: &Prepared, tuple: &[usize], v: usize) -> Vec<u32> {
    let n = p.n;
    let mut out = Vec::with_capacity(2 * tuple.len() + 1);
    for &u in tuple {
        out.push(p.codes[u * n + v]);
        out.push(p.codes[v * n + u]);
    }
    out.push(p.codes[v * n + v]);
    out
}

fn check_args(graphs: &[&ColouredGraph], k: usize, cfg: &WlConfig) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut cells: usize = 0;
    for g in graphs {
        let n = g.order();
        if n == 0 {
            return Err(Error::InvalidArgument("graph has no vertices".into()));
        }
        let tuples = n
            .checked_pow(k as u32)
            .ok_or(Error::BudgetExhausted { best: None })?;
        cells = cells.saturating_add(tuples.saturating_mul(n).saturating_mul(k + 1));
    }
    if cells > cfg.max_cells {
        return Err(Error::BudgetExhausted { best: None });
    }
    Ok(())
}

/// Refines `graphs` jointly: every round assigns family-wide canonical ids
/// to the pairs (previous colour, multiset of rows), so colours are
/// comparable across graphs. Stops once the joint partition is stable.
pub fn refine_jointly(
    graphs: &[&ColouredGraph],
    k: usize,
    cfg: &WlConfig,
) -> Result<JointRefinement> {
    check_args(graphs, k, cfg)?;
    if k == 1 && cfg.fast_path {
        return Ok(refine_one_fast(graphs, cfg));
    }
    let prepared = prepare(graphs);
    let mode = cfg.mode;

    let atp: Vec<Vec<Vec<u32>>> = prepared
        .iter()
        .map(|p| par::map_range(mode, p.n.pow(k as u32), |t| atomic_codes(p, k, t)))
        .collect();
    let mut colours = rank(mode, &atp);
    drop(atp);

    // ext[g][t * n + v] identifies atp(t, v) beyond atp(t)
    let ext_raw: Vec<Vec<Vec<u32>>> = prepared
        .iter()
        .map(|p| {
            let n = p.n;
            par::map_range(mode, n.pow(k as u32) * n, |i| {
                let tuple = decode(n, k, i / n);
                ext_code(p, &tuple, i % n)
            })
        })
        .collect();
    let ext = rank(mode, &ext_raw);
    drop(ext_raw);

    let mut history: Option<Vec<Vec<Vec<u32>>>> = cfg.audit.then(|| vec![colours.clone()]);
    let mut classes = total_classes(&colours);
    let mut rounds = 0;
    loop {
        let sigs: Vec<Vec<Vec<u32>>> = prepared
            .iter()
            .zip(colours.iter())
            .zip(ext.iter())
            .map(|((p, col), ex)| {
                let n = p.n;
                let mut weights = vec![1usize; k];
                for i in (0..k.saturating_sub(1)).rev() {
                    weights[i] = weights[i + 1] * n;
                }
                par::map_range(mode, col.len(), |t| {
                    let tuple = decode(n, k, t);
                    let mut rows: Vec<Vec<u32>> = (0..n)
                        .map(|v| {
                            let mut row = Vec::with_capacity(k + 1);
                            row.push(ex[t * n + v]);
                            for j in (0..k).rev() {
                                let s = t + v * weights[j] - tuple[j] * weights[j];
                                row.push(col[s]);
                            }
                            row
                        })
                        .collect();
                    rows.sort_unstable();
                    let mut sig = Vec::with_capacity(1 + n * (k + 1));
                    sig.push(col[t]);
                    for r in rows {
                        sig.extend(r);
                    }
                    sig
                })
            })
            .collect();
        let next = rank(mode, &sigs);
        drop(sigs);
        rounds += 1;
        let next_classes = total_classes(&next);
        colours = next;
        if let Some(h) = history.as_mut() {
            h.push(colours.clone());
        }
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    Ok(assemble(graphs, k, colours, rounds, history))
}

fn total_classes(colours: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colours.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn assemble(
    graphs: &[&ColouredGraph],
    k: usize,
    colours: Vec<Vec<u32>>,
    rounds: usize,
    history: Option<Vec<Vec<Vec<u32>>>>,
) -> JointRefinement {
    let colourings = colours
        .into_iter()
        .enumerate()
        .map(|(i, colouring)| StableColouring {
            k,
            n: graphs[i].order(),
            colouring,
            rounds,
            history: history
                .as_ref()
                .map(|h| h.iter().map(|round| round[i].clone()).collect()),
        })
        .collect();
    JointRefinement {
        k,
        colourings,
        rounds,
    }
}

/// Colour refinement on vertices. A vertex's signature is its colour, the
/// rank of its graph's colour histogram and the multiset of
/// (arc codes, colour) over its neighbours; this induces the same
/// partitions as the generic `k = 1` rows.
fn refine_one_fast(graphs: &[&ColouredGraph], cfg: &WlConfig) -> JointRefinement {
    let prepared = prepare(graphs);
    let mode = cfg.mode;
    let init: Vec<Vec<u32>> = prepared
        .iter()
        .map(|p| (0..p.n).map(|v| p.codes[v * p.n + v]).collect())
        .collect();
    let mut colours = rank(mode, &init.iter().map(|c| c.iter().map(|&x| vec![x]).collect()).collect::<Vec<_>>());
    let mut history = cfg.audit.then(|| vec![colours.clone()]);
    let mut classes = total_classes(&colours);
    let mut rounds = 0;
    loop {
        let hists: Vec<Vec<Vec<(u32, usize)>>> =
            colours.iter().map(|c| vec![histogram(c)]).collect();
        let hist_rank = rank(mode, &hists);
        let sigs: Vec<Vec<Vec<u32>>> = graphs
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let p = &prepared[gi];
                let col = &colours[gi];
                let h = hist_rank[gi][0];
                par::map_range(mode, p.n, |v| {
                    let mut rows: Vec<[u32; 3]> = g
                        .neighbours(v)
                        .iter()
                        .map(|&w| [p.codes[v * p.n + w], p.codes[w * p.n + v], col[w]])
                        .collect();
                    rows.sort_unstable();
                    let mut sig = vec![col[v], h];
                    for r in rows {
                        sig.extend(r);
                    }
                    sig
                })
            })
            .collect();
        let next = rank(mode, &sigs);
        rounds += 1;
        let next_classes = total_classes(&next);
        colours = next;
        if let Some(h) = history.as_mut() {
            h.push(colours.clone());
        }
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    assemble(graphs, 1, colours, rounds, history)
}

/// `C_∞^k` of a single graph.
pub fn wl_refine(g: &ColouredGraph, k: usize) -> Result<StableColouring> {
    wl_refine_with(g, k, &WlConfig::default())
}

pub fn wl_refine_with(g: &ColouredGraph, k: usize, cfg: &WlConfig) -> Result<StableColouring> {
    Ok(refine_jointly(&[g], k, cfg)?.colourings.pop().unwrap())
}

/// True iff the partition `fine` refines the partition `coarse` (both
/// given as colour vectors over the same index set).
pub fn refines(fine: &[u32], coarse: &[u32]) -> bool {
    let mut map: HashMap<u32, u32> = HashMap::new();
    fine.iter()
        .zip(coarse)
        .all(|(&f, &c)| *map.entry(f).or_insert(c) == c)
}

/// True iff the two colour vectors induce the same partition.
pub fn same_partition(a: &[u32], b: &[u32]) -> bool {
    refines(a, b) && refines(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::individualise;

    #[test]
    fn complete_graph_single_class() {
        for k in 1..=3 {
            let s = wl_refine(&complete(5), 1).unwrap();
            assert_eq!(s.num_classes(), 1, "k={k}");
        }
        let s = wl_refine(&complete(4), 2).unwrap();
        assert_eq!(s.num_classes(), 2);
    }

    #[test]
    fn individualised_c4() {
        let g = individualise(&cycle(4), &[0]).unwrap();
        let s = wl_refine(&g, 1).unwrap();
        assert_eq!(s.vertex_classes(), vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn fast_path_matches_generic() {
        let gs = [cycle(6), cycle(3).disjoint_union(&cycle(3)), path(5), petersen()];
        let refs: Vec<&ColouredGraph> = gs.iter().collect();
        let fast = refine_jointly(&refs, 1, &WlConfig::default()).unwrap();
        let slow = refine_jointly(
            &refs,
            1,
            &WlConfig {
                fast_path: false,
                ..WlConfig::default()
            },
        )
        .unwrap();
        assert_eq!(fast.rounds, slow.rounds);
        let all_fast: Vec<u32> = fast.colourings.iter().flat_map(|c| c.colouring.clone()).collect();
        let all_slow: Vec<u32> = slow.colourings.iter().flat_map(|c| c.colouring.clone()).collect();
        assert!(same_partition(&all_fast, &all_slow));
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = petersen();
        let a = wl_refine_with(&g, 2, &WlConfig::sequential()).unwrap();
        let b = wl_refine_with(&g, 2, &WlConfig::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_k_zero_and_budget() {
        assert!(wl_refine(&path(2), 0).is_err());
        let cfg = WlConfig {
            max_cells: 10,
            ..WlConfig::default()
        };
        assert_eq!(
            wl_refine_with(&path(4), 2, &cfg).unwrap_err(),
            Error::BudgetExhausted { best: None }
        );
    }

    #[test]
    fn audit_history_is_monotone() {
        let g = path(6);
        let s = wl_refine_with(&g, 2, &WlConfig::audited()).unwrap();
        let h = s.history.as_ref().unwrap();
        assert_eq!(h.len(), s.rounds + 1);
        for w in h.windows(2) {
            assert!(refines(&w[1], &w[0]));
        }
        assert!(same_partition(&h[h.len() - 1], &h[h.len() - 2]));
        assert_eq!(h.last().unwrap(), &s.colouring);
    }
}
