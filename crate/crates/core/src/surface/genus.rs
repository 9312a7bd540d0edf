//! Exact Euler genus of small graphs.
//!
//! The genus is additive over blocks. Planar blocks are recognised by path
//! addition; for the rest, an iterative-deepening search assigns each
//! vertex a rotation and each edge back to earlier vertices a sign, with
//! spanning-tree edges fixed to `+1`. A partial assignment is pruned when
//! its closed faces plus the remaining darts divided by the girth cannot
//! reach the face count the target genus needs.

use super::embedding::EmbeddedGraph;
use super::faces::embedding_euler_genus;
use super::planarity::{biconnected_planar_faces, blocks};
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::par::{self, ExecMode};
use itertools::Itertools;
use std::collections::{BTreeSet, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug)]
pub struct GenusConfig {
    pub mode: ExecMode,
    /// Search nodes across the whole computation.
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for GenusConfig {
    fn default() -> Self {
        GenusConfig {
            mode: ExecMode::default(),
            max_nodes: 500_000_000,
            time_limit: None,
        }
    }
}

impl GenusConfig {
    pub fn sequential() -> Self {
        GenusConfig {
            mode: ExecMode::Sequential,
            ..Default::default()
        }
    }
}

struct Budget {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: AtomicBool,
}

impl Budget {
    fn new(cfg: &GenusConfig) -> Budget {
        Budget {
            nodes: AtomicU64::new(0),
            max_nodes: cfg.max_nodes,
            deadline: cfg.time_limit.map(|d| Instant::now() + d),
            exhausted: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        let over = n >= self.max_nodes
            || (n.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d));
        if over {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }
}

pub fn girth(g: &ColouredGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// `eg ≥ 2 - n + m - ⌊2m / girth⌋` for a connected graph with a cycle.
fn euler_lower_bound(g: &ColouredGraph) -> usize {
    let Some(gi) = girth(g) else { return 0 };
    let (n, m) = (g.order() as i64, g.size() as i64);
    (2 - n + m - 2 * m / gi as i64).max(0) as usize
}

const LEVELS: usize = 3;

struct Step {
    v: usize,
    rotations: Vec<Vec<usize>>,
    /// Non-tree edges to earlier vertices; their signs are chosen here.
    free_edges: Vec<usize>,
}

impl Step {
    fn choices(&self) -> usize {
        self.rotations.len() << self.free_edges.len()
    }
}

#[derive(Clone)]
struct State {
    rotation: Vec<Vec<usize>>,
    pos: Vec<usize>,
    signs: Vec<i8>,
    assigned: Vec<bool>,
    stamp: Vec<u32>,
    generation: u32,
    spoil: Vec<u32>,
}

/// Running counts along the current branch.
#[derive(Clone, Copy, Default)]
struct Tally {
    faces: usize,
    darts: usize,
    short_faces: [usize; LEVELS],
    spoiled: [usize; LEVELS],
    open_corners: usize,
}

struct Search<'a> {
    g: &'a ColouredGraph,
    steps: Vec<Step>,
    girth: usize,
    /// Number of cycles of length `girth + i`; faces that short are cycles.
    short_cycles: [usize; LEVELS],
    /// For each vertex, `(cycle, level, dart, dart)` for the short cycles through it.
    short_at: Vec<Vec<(usize, usize, usize, usize)>>,
    cycle_count: usize,
    levels: usize,
    target_faces: usize,
    budget: &'a Budget,
    best_leaf: &'a AtomicUsize,
}

impl<'a> Search<'a> {
    fn new(g: &'a ColouredGraph, target_eg: usize, budget: &'a Budget, best_leaf: &'a AtomicUsize) -> Self {
        let n = g.order();
        let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        let mut order = vec![root];
        let mut placed = vec![false; n];
        placed[root] = true;
        let mut parent_edge = vec![usize::MAX; n];
        let mut back = vec![0usize; n];
        for &w in g.neighbours(root) {
            back[w] += 1;
        }
        while order.len() < n {
            let v = (0..n)
                .filter(|&v| !placed[v] && back[v] > 0)
                .max_by_key(|&v| (back[v], g.degree(v), std::cmp::Reverse(v)))
                .expect("connected");
            let p = order.iter().copied().find(|&u| g.adjacent(u, v)).unwrap();
            parent_edge[v] = g.edge_index(p, v).unwrap();
            placed[v] = true;
            order.push(v);
            for &w in g.neighbours(v) {
                back[w] += 1;
            }
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let dart = |u: usize, w: usize| 2 * g.edge_index(u, w).unwrap() + usize::from(u > w);
        let steps = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let darts: Vec<usize> = g.neighbours(v).iter().map(|&w| dart(v, w)).collect();
                let first = darts[0];
                let rest = &darts[1..];
                let rotations: Vec<Vec<usize>> = rest
                    .iter()
                    .copied()
                    .permutations(rest.len())
                    .filter(|p| i > 0 || p.len() < 2 || p[0] < p[p.len() - 1])
                    .map(|p| {
                        let mut r = vec![first];
                        r.extend(p);
                        r
                    })
                    .collect();
                let free_edges = g
                    .neighbours(v)
                    .iter()
                    .filter(|&&w| rank[w] < i)
                    .map(|&w| g.edge_index(v, w).unwrap())
                    .filter(|&e| e != parent_edge[v])
                    .collect();
                Step {
                    v,
                    rotations,
                    free_edges,
                }
            })
            .collect();
        let girth = girth(g).unwrap_or(3);
        let mut short_at = vec![Vec::new(); n];
        let mut short_cycles = [0; LEVELS];
        let mut ci = 0;
        // closed walks shorter than twice the girth without backtracking are cycles
        for (level, slot) in short_cycles.iter_mut().enumerate() {
            let len = girth + level;
            if len >= 2 * girth {
                break;
            }
            for c in super::cycles::cycles_of_length(g, len) {
                for i in 0..len {
                    let x = c[i];
                    short_at[x].push((ci, level, dart(x, c[(i + 1) % len]), dart(x, c[(i + len - 1) % len])));
                }
                *slot += 1;
                ci += 1;
            }
        }
        let levels = (0..LEVELS).take_while(|&l| girth + l < 2 * girth).count();
        let (nn, m) = (n as i64, g.size() as i64);
        let target_faces = (2 - nn + m - target_eg as i64).max(1) as usize;
        Search {
            g,
            steps,
            girth,
            short_cycles,
            short_at,
            cycle_count: ci,
            levels,
            target_faces,
            budget,
            best_leaf,
        }
    }

    fn empty_state(&self) -> State {
        let n = self.g.order();
        let m = self.g.size();
        State {
            rotation: vec![Vec::new(); n],
            pos: vec![0; 2 * m],
            signs: vec![0; m],
            assigned: vec![false; n],
            stamp: vec![0; 4 * m],
            generation: 0,
            spoil: vec![0; self.cycle_count],
        }
    }

    fn initial_tally(&self) -> Tally {
        Tally {
            open_corners: 2 * self.g.size(),
            ..Default::default()
        }
    }

    fn tail(&self, d: usize) -> usize {
        let (u, v) = self.g.edges()[d / 2];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    fn separated(&self, st: &State, a: usize, b: usize, k: usize) -> bool {
        let gap = (st.pos[a] + k - st.pos[b]) % k;
        gap != 1 && gap != k - 1
    }

    /// Assigns the step's choice and returns the updated tally.
    fn apply(&self, st: &mut State, depth: usize, choice: usize, t: Tally) -> Tally {
        let step = &self.steps[depth];
        let v = step.v;
        let nf = step.free_edges.len();
        let rot = &step.rotations[choice >> nf];
        for (i, &d) in rot.iter().enumerate() {
            st.pos[d] = i;
        }
        st.rotation[v].clone_from(rot);
        st.assigned[v] = true;
        for &w in self.g.neighbours(v) {
            if st.assigned[w] {
                let e = self.g.edge_index(v, w).unwrap();
                st.signs[e] = 1;
            }
        }
        for (j, &e) in step.free_edges.iter().enumerate() {
            st.signs[e] = if (choice >> j) & 1 == 1 { -1 } else { 1 };
        }
        let k = rot.len();
        let mut t = t;
        for &(c, level, a, b) in &self.short_at[v] {
            if self.separated(st, a, b, k) {
                st.spoil[c] += 1;
                if st.spoil[c] == 1 {
                    t.spoiled[level] += 1;
                }
            }
        }
        t.open_corners -= k;
        let (faces, darts, short) = self.newly_closed(st, v);
        t.faces += faces;
        t.darts += darts;
        for (acc, x) in t.short_faces.iter_mut().zip(short) {
            *acc += x;
        }
        t
    }

    fn undo(&self, st: &mut State, depth: usize) {
        let v = self.steps[depth].v;
        let k = st.rotation[v].len();
        for &(c, _, a, b) in &self.short_at[v] {
            if self.separated(st, a, b, k) {
                st.spoil[c] -= 1;
            }
        }
        st.assigned[v] = false;
        st.rotation[v].clear();
        for &w in self.g.neighbours(v) {
            st.signs[self.g.edge_index(v, w).unwrap()] = 0;
        }
    }

    fn next_flag(&self, st: &State, d: usize, s: i8) -> Option<(usize, i8)> {
        let r = d ^ 1;
        let head = self.tail(r);
        if !st.assigned[head] {
            return None;
        }
        let s2 = s * st.signs[d / 2];
        let rot = &st.rotation[head];
        let k = rot.len();
        let p = st.pos[r];
        Some((if s2 > 0 { rot[(p + 1) % k] } else { rot[(p + k - 1) % k] }, s2))
    }

    /// Faces closed by assigning `v`, the darts they use and how many have
    /// each short length. Any such face passes through `v`.
    fn newly_closed(&self, st: &mut State, v: usize) -> (usize, usize, [usize; LEVELS]) {
        st.generation += 1;
        let gen = st.generation;
        let idx = |d: usize, s: i8| 2 * d + usize::from(s < 0);
        let (mut orbits, mut flags, mut short) = (0, 0, [0; LEVELS]);
        for i in 0..st.rotation[v].len() {
            let d = st.rotation[v][i];
            for s in [1i8, -1] {
                if st.stamp[idx(d, s)] == gen {
                    continue;
                }
                let start = (d, s);
                let mut cur = start;
                let mut len = 0;
                let closed = loop {
                    st.stamp[idx(cur.0, cur.1)] = gen;
                    len += 1;
                    match self.next_flag(st, cur.0, cur.1) {
                        None => break false,
                        Some(nx) if nx == start => break true,
                        Some(nx) => cur = nx,
                    }
                };
                if closed {
                    orbits += 1;
                    flags += len;
                    if len >= self.girth && len < self.girth + self.levels {
                        short[len - self.girth] += 1;
                    }
                }
            }
        }
        (orbits / 2, flags / 2, short.map(|x| x / 2))
    }

    /// Faces still to close share the remaining darts. Short faces are
    /// unspoiled short cycles, longer ones need more darts, and every open
    /// face passes through an unassigned corner. Filling the darts with the
    /// shortest faces first maximises their number.
    fn bound_ok(&self, t: &Tally) -> bool {
        let mut rest = 2 * self.g.size() - t.darts;
        let mut future = 0;
        for level in 0..self.levels {
            let len = self.girth + level;
            let avail = self.short_cycles[level] - t.spoiled[level] - t.short_faces[level];
            let f = avail.min(rest / len);
            future += f;
            rest -= f * len;
        }
        future += rest / (self.girth + self.levels);
        t.faces + future.min(t.open_corners) >= self.target_faces
    }

    fn dfs(&self, st: &mut State, depth: usize, t: Tally) -> bool {
        if depth == self.steps.len() {
            return true;
        }
        for c in 0..self.steps[depth].choices() {
            if !self.budget.tick() {
                return false;
            }
            let t2 = self.apply(st, depth, c, t);
            if depth + 1 == self.steps.len() {
                let n = self.g.order() as i64;
                let eg = (2 - n + self.g.size() as i64 - t2.faces as i64) as usize;
                self.best_leaf.fetch_min(eg, Ordering::Relaxed);
            }
            if self.bound_ok(&t2) && self.dfs(st, depth + 1, t2) {
                return true;
            }
            self.undo(st, depth);
        }
        false
    }

    fn run(&self, mode: ExecMode) -> Option<EmbeddedGraph> {
        // top-level branches: the choices for the first two vertices
        let c0 = self.steps[0].choices();
        let c1 = self.steps.get(1).map_or(1, Step::choices);
        let found = par::find_first(mode, c0 * c1, |b| {
            let mut st = self.empty_state();
            let mut t = self.apply(&mut st, 0, b / c1, self.initial_tally());
            if self.steps.len() > 1 {
                t = self.apply(&mut st, 1, b % c1, t);
            }
            let depth = self.steps.len().min(2);
            if !self.bound_ok(&t) {
                return None;
            }
            self.dfs(&mut st, depth, t).then_some(st)
        })?;
        Some(EmbeddedGraph::from_darts(self.g.clone(), found.rotation, found.signs))
    }
}

/// Repeatedly deletes degree-1 vertices and suppresses degree-2 vertices
/// whose neighbours are non-adjacent. Neither changes the Euler genus.
pub fn reduce_for_genus(g: &ColouredGraph) -> ColouredGraph {
    let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    let n = g.order();
    let mut alive = vec![true; n];
    loop {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            match adj[v].len() {
                0 => {}
                1 => {
                    let w = adj[v][0];
                    edges.remove(&(v.min(w), v.max(w)));
                    alive[v] = false;
                    changed = true;
                }
                2 => {
                    let (a, b) = (adj[v][0], adj[v][1]);
                    if !edges.contains(&(a.min(b), a.max(b))) {
                        edges.remove(&(v.min(a), v.max(a)));
                        edges.remove(&(v.min(b), v.max(b)));
                        edges.insert((a.min(b), a.max(b)));
                        alive[v] = false;
                        changed = true;
                    }
                }
                _ => {}
            }
            if changed {
                break;
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v] && edges.iter().any(|&(a, b)| a == v || b == v)).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let local: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index[u], index[v])).collect();
    ColouredGraph::from_edges(keep.len(), &local)
}

fn block_graphs(g: &ColouredGraph) -> Vec<ColouredGraph> {
    blocks(g)
        .into_iter()
        .filter(|b| b.len() > 1)
        .map(|b| {
            let edges: Vec<(usize, usize)> = b.iter().map(|&e| g.edges()[e]).collect();
            let verts: Vec<usize> = edges
                .iter()
                .flat_map(|&(u, v)| [u, v])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            g.subgraph(&verts, &edges)
        })
        .collect()
}

/// Least Euler genus of a biconnected graph if at most `limit`, with a
/// witnessing embedding.
fn block_genus_upto(
    b: &ColouredGraph,
    limit: usize,
    cfg: &GenusConfig,
    budget: &Budget,
    best_leaf: &AtomicUsize,
) -> Result<Option<(usize, EmbeddedGraph)>> {
    if let Some(faces) = biconnected_planar_faces(b) {
        let emb = EmbeddedGraph::from_oriented_faces(b.clone(), &faces)?;
        return Ok(Some((0, emb)));
    }
    let start = euler_lower_bound(b).max(1);
    for t in start..=limit {
        let search = Search::new(b, t, budget, best_leaf);
        if let Some(emb) = search.run(cfg.mode) {
            let eg = embedding_euler_genus(&emb)?;
            return Ok(Some((eg, emb)));
        }
        if budget.exhausted.load(Ordering::Relaxed) {
            return Err(Error::BudgetExhausted { best: None });
        }
    }
    Ok(None)
}

fn cycle_rank(g: &ColouredGraph) -> usize {
    g.size() + 1 - g.order().min(g.size() + 1)
}

/// The Euler genus of `g`: the least Euler genus over all signed rotation
/// systems, summed over connected components.
pub fn graph_euler_genus(g: &ColouredGraph) -> Result<usize> {
    graph_euler_genus_with(g, &GenusConfig::default())
}

pub fn graph_euler_genus_with(g: &ColouredGraph, cfg: &GenusConfig) -> Result<usize> {
    let budget = Budget::new(cfg);
    let blocks: Vec<ColouredGraph> = block_graphs(g).iter().map(reduce_for_genus).collect();
    let mut total = 0;
    for (i, b) in blocks.iter().enumerate() {
        let best_leaf = AtomicUsize::new(usize::MAX);
        match block_genus_upto(b, cycle_rank(b), cfg, &budget, &best_leaf) {
            Ok(Some((eg, _))) => total += eg,
            Ok(None) => unreachable!("some embedding has at least one face"),
            Err(Error::BudgetExhausted { .. }) => {
                let here = best_leaf.load(Ordering::Relaxed).min(cycle_rank(b));
                let rest: usize = blocks[i + 1..].iter().map(cycle_rank).sum();
                return Err(Error::BudgetExhausted {
                    best: Some(total + here + rest),
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(total)
}

/// Whether `graph_euler_genus(g) ≤ bound`, without computing the genus of
/// blocks beyond what the bound needs.
pub fn genus_at_most(g: &ColouredGraph, bound: usize, cfg: &GenusConfig) -> Result<bool> {
    let budget = Budget::new(cfg);
    let mut blocks: Vec<ColouredGraph> = block_graphs(g).iter().map(reduce_for_genus).collect();
    blocks.sort_by_key(|b| (b.size(), b.order()));
    let mut used = 0;
    for b in &blocks {
        let best_leaf = AtomicUsize::new(usize::MAX);
        match block_genus_upto(b, bound - used, cfg, &budget, &best_leaf)? {
            Some((eg, _)) => used += eg,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// An embedding of a connected graph of least Euler genus.
pub fn minimum_genus_embedding(g: &ColouredGraph, cfg: &GenusConfig) -> Result<EmbeddedGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let budget = Budget::new(cfg);
    let n = g.order();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut signs = vec![1i8; g.size()];
    for block in blocks(g) {
        let edges: Vec<(usize, usize)> = block.iter().map(|&e| g.edges()[e]).collect();
        if edges.len() == 1 {
            let (u, v) = edges[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let verts: Vec<usize> = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let local = g.subgraph(&verts, &edges);
        let best_leaf = AtomicUsize::new(usize::MAX);
        let (_, emb) = block_genus_upto(&local, cycle_rank(&local), cfg, &budget, &best_leaf)
            .map_err(|_| Error::BudgetExhausted {
                best: Some(best_leaf.load(Ordering::Relaxed)).filter(|&b| b != usize::MAX),
            })?
            .expect("some embedding exists");
        for (i, &v) in verts.iter().enumerate() {
            rot[v].extend(emb.neighbour_rotation(i).iter().map(|&j| verts[j]));
        }
        for (e, &(a, b)) in local.edges().iter().enumerate() {
            signs[g.edge_index(verts[a], verts[b]).unwrap()] = emb.sign(e);
        }
    }
    EmbeddedGraph::new(g.clone(), rot, signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn small_ground_truths() {
        assert_eq!(graph_euler_genus(&complete(4)).unwrap(), 0);
        assert_eq!(graph_euler_genus(&complete(5)).unwrap(), 1);
        assert_eq!(graph_euler_genus(&complete_bipartite(3, 3)).unwrap(), 1);
        assert_eq!(graph_euler_genus(&path(4)).unwrap(), 0);
    }

    #[test]
    fn three_by_three_grid_is_projective() {
        let g = torus_grid(3, 3);
        assert_eq!(graph_euler_genus(&g).unwrap(), 1);
        let e = minimum_genus_embedding(&g, &GenusConfig::default()).unwrap();
        assert!(!e.is_orientable());
        assert_eq!(crate::surface::trace_faces(&e).unwrap().len(), 10);
    }

    #[test]
    fn additive_over_blocks() {
        let two = complete(5).disjoint_union(&complete_bipartite(3, 3));
        assert_eq!(graph_euler_genus(&two).unwrap(), 2);
        assert!(genus_at_most(&two, 2, &GenusConfig::default()).unwrap());
        assert!(!genus_at_most(&two, 1, &GenusConfig::default()).unwrap());
    }

    #[test]
    fn reduction_preserves_cycle_rank() {
        let g = ColouredGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5)]);
        let r = reduce_for_genus(&g);
        assert_eq!(cycle_rank(&r), 2);
        assert_eq!(r.order(), 4);
    }

    #[test]
    fn minimum_embedding_matches_genus() {
        for g in [complete(5), complete_bipartite(3, 3), petersen()] {
            let e = minimum_genus_embedding(&g, &GenusConfig::default()).unwrap();
            assert_eq!(embedding_euler_genus(&e).unwrap(), graph_euler_genus(&g).unwrap());
        }
    }

    #[test]
    fn budget_reports_upper_bound() {
        let cfg = GenusConfig {
            max_nodes: 10,
            ..Default::default()
        };
        match graph_euler_genus_with(&complete(6), &cfg) {
            Err(Error::BudgetExhausted { best: Some(b) }) => assert!(b >= 1),
            other => panic!("{other:?}"),
        }
    }
}
