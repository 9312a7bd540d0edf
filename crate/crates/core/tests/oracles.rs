//! Library results checked against small independent implementations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use wlgenus::cfi::cfi_pair;
use wlgenus::experiment::{random_connected_graph, random_graph};
use wlgenus::graph::families::*;
use wlgenus::oracle::{brute_force_isomorphic, enumerate_graphs, enumerate_trees};
use wlgenus::surface::{graph_euler_genus, is_planar};
use wlgenus::wl::{distinguishes, wl_refine};
use wlgenus::ColouredGraph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Unlabelled graphs on `n` vertices by Burnside: the average over `S_n` of
/// `2^(cycles on vertex pairs)`.
fn burnside_graph_count(n: usize) -> u128 {
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = vec![false; n * n];
        let mut cycles = 0;
        for a in 0..n {
            for b in a + 1..n {
                if seen[a * n + b] {
                    continue;
                }
                cycles += 1;
                let (mut x, mut y) = (a, b);
                loop {
                    seen[x.min(y) * n + x.max(y)] = true;
                    (x, y) = (p[x], p[y]);
                    if (x.min(y), x.max(y)) == (a, b) {
                        break;
                    }
                }
            }
        }
        total += 1u128 << cycles;
    }
    total / perms.len() as u128
}

/// Connected counts from all counts by the inverse Euler transform.
fn connected_counts(all: &[u128]) -> Vec<i128> {
    let m = all.len() - 1;
    let a: Vec<i128> = all.iter().map(|&x| x as i128).collect();
    let mut b = vec![0i128; m + 1];
    let mut c = vec![0i128; m + 1];
    for n in 1..=m {
        let s: i128 = (1..n).map(|k| c[k] * a[n - k]).sum();
        c[n] = n as i128 * a[n] - s;
        b[n] = (1..=n).filter(|d| n % d == 0).map(|d| mobius(n / d) * c[d]).sum::<i128>() / n as i128;
    }
    b
}

fn mobius(n: usize) -> i128 {
    let (mut n, mut r, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// Unlabelled free trees by Otter's formula from the rooted-tree recurrence.
fn otter_tree_counts(max: usize) -> Vec<i128> {
    let mut r = vec![0i128; max + 1];
    r[1] = 1;
    for n in 1..max {
        let mut s = 0;
        for k in 1..=n {
            let d: i128 = (1..=k).filter(|d| k % d == 0).map(|d| d as i128 * r[d]).sum();
            s += d * r[n - k + 1];
        }
        r[n + 1] = s / n as i128;
    }
    let mut t = vec![0i128; max + 1];
    for n in 1..=max {
        let pairs: i128 = (1..n).map(|i| r[i] * r[n - i]).sum();
        let half = if n % 2 == 0 { r[n / 2] } else { 0 };
        t[n] = r[n] - (pairs - half) / 2;
    }
    t
}

#[test]
fn enumeration_matches_burnside_counts() {
    let all: Vec<u128> = (0..=7).map(|n| if n == 0 { 1 } else { burnside_graph_count(n) }).collect();
    assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    let conn = connected_counts(&all);
    for n in 1..=7 {
        assert_eq!(enumerate_graphs(n, false).unwrap().len() as u128, all[n], "all graphs, n={n}");
        assert_eq!(enumerate_graphs(n, true).unwrap().len() as i128, conn[n], "connected, n={n}");
    }
}

#[test]
fn tree_enumeration_matches_otter() {
    let t = otter_tree_counts(10);
    assert_eq!(t[10], 106);
    for n in 1..=10 {
        assert_eq!(enumerate_trees(n).unwrap().len() as i128, t[n], "n={n}");
    }
}

/// Textbook k-WL on two graphs at once with nested signatures interned in
/// one shared table.
fn naive_wl(gs: [&ColouredGraph; 2], k: usize) -> [Vec<u32>; 2] {
    let tuples = |g: &ColouredGraph| -> Vec<Vec<usize>> {
        let m = g.order();
        (0..m.pow(k as u32))
            .map(|mut t| {
                let mut v = vec![0; k];
                for i in (0..k).rev() {
                    v[i] = t % m;
                    t /= m;
                }
                v
            })
            .collect()
    };
    let atp = |g: &ColouredGraph, t: &[usize]| -> Vec<u8> {
        let mut code = Vec::new();
        for &a in t {
            for &b in t {
                code.push(if a == b { 2 } else { u8::from(g.adjacent(a, b)) });
            }
        }
        code
    };
    let ts = [tuples(gs[0]), tuples(gs[1])];
    let mut table: HashMap<Vec<u8>, u32> = HashMap::new();
    let mut col: [Vec<u32>; 2] = [0, 1].map(|i| {
        ts[i].iter()
            .map(|t| {
                let c = atp(gs[i], t);
                let next = table.len() as u32;
                *table.entry(c).or_insert(next)
            })
            .collect()
    });
    let classes = |c: &[Vec<u32>; 2]| {
        let mut all: Vec<u32> = c[0].iter().chain(&c[1]).copied().collect();
        all.sort();
        all.dedup();
        all.len()
    };
    loop {
        let mut table: BTreeMap<(u32, Vec<(Vec<u8>, Vec<u32>)>), u32> = BTreeMap::new();
        let index = |g: &ColouredGraph, t: &[usize]| t.iter().fold(0, |acc, &u| acc * g.order() + u);
        let sigs: Vec<Vec<(u32, Vec<(Vec<u8>, Vec<u32>)>)>> = (0..2)
            .map(|i| {
                let g = gs[i];
                ts[i].iter()
                    .enumerate()
                    .map(|(ti, t)| {
                        let mut ms: Vec<(Vec<u8>, Vec<u32>)> = (0..g.order())
                            .map(|v| {
                                let mut ext = t.clone();
                                ext.push(v);
                                let subs = (0..k)
                                    .rev()
                                    .map(|j| {
                                        let mut s = t.clone();
                                        s[j] = v;
                                        col[i][index(g, &s)]
                                    })
                                    .collect();
                                (atp(g, &ext), subs)
                            })
                            .collect();
                        ms.sort();
                        (col[i][ti], ms)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            let next = table.len() as u32;
            table.entry(s.clone()).or_insert(next);
        }
        let new: [Vec<u32>; 2] = [0, 1].map(|i| sigs[i].iter().map(|s| table[s]).collect());
        if classes(&new) == classes(&col) {
            return new;
        }
        col = new;
    }
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_default() += 1;
    }
    h
}

#[test]
fn engine_agrees_with_textbook_refinement() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut pairs = vec![
        (cycle(6), cycle(3).disjoint_union(&cycle(3))),
        (complete_bipartite(3, 3), {
            let t = cycle(3).disjoint_union(&cycle(3));
            let mut e = t.edges().to_vec();
            e.extend([(0, 3), (1, 4), (2, 5)]);
            ColouredGraph::from_edges(6, &e)
        }),
    ];
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        pairs.push((random_graph(&mut rng, n), random_graph(&mut rng, n)));
    }
    for (g, h) in &pairs {
        for k in 1..=3 {
            let [a, b] = naive_wl([g, h], k);
            let naive = histogram(&a) != histogram(&b);
            assert_eq!(distinguishes(g, h, k).unwrap(), naive, "k={k}, {:?} vs {:?}", g.edges(), h.edges());
            let own = wl_refine(g, k).unwrap();
            let [alone, _] = naive_wl([g, g], k);
            assert!(wlgenus::wl::same_partition(&own.colouring, &alone));
        }
    }
}

/// Faces of a signed rotation system, traced on (dart, local orientation)
/// states; each face is seen once in each orientation.
fn face_count(g: &ColouredGraph, rot: &[Vec<usize>], signs: &[i8]) -> usize {
    let n = g.order();
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for v in 0..n {
        for (i, &w) in rot[v].iter().enumerate() {
            pos[v].insert(w, i);
        }
    }
    let mut seen: std::collections::HashSet<(usize, usize, i8)> = Default::default();
    let mut orbits = 0;
    for v in 0..n {
        for &w in &rot[v] {
            for eps in [1i8, -1] {
                if seen.contains(&(v, w, eps)) {
                    continue;
                }
                orbits += 1;
                let (mut a, mut b, mut e) = (v, w, eps);
                while seen.insert((a, b, e)) {
                    let e2 = e * signs[g.edge_index(a, b).unwrap()];
                    let d = rot[b].len();
                    let i = pos[b][&a];
                    let next = if e2 == 1 { rot[b][(i + 1) % d] } else { rot[b][(i + d - 1) % d] };
                    (a, b, e) = (b, next, e2);
                }
            }
        }
    }
    orbits / 2
}

/// Least Euler genus over every rotation system and every signing of the
/// non-tree edges of a fixed spanning tree.
fn brute_force_genus(g: &ColouredGraph) -> usize {
    let n = g.order();
    let m = g.size();
    let mut in_tree = vec![false; m];
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in g.neighbours(v) {
            if !reached[w] {
                reached[w] = true;
                in_tree[g.edge_index(v, w).unwrap()] = true;
                stack.push(w);
            }
        }
    }
    let free: Vec<usize> = (0..m).filter(|&e| !in_tree[e]).collect();
    let rotations: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let nb = g.neighbours(v);
            if nb.is_empty() {
                return vec![vec![]];
            }
            permutations(nb.len() - 1)
                .into_iter()
                .map(|p| std::iter::once(nb[0]).chain(p.iter().map(|&i| nb[i + 1])).collect())
                .collect()
        })
        .collect();
    let mut best = usize::MAX;
    let mut choice = vec![0usize; n];
    loop {
        let rot: Vec<Vec<usize>> = (0..n).map(|v| rotations[v][choice[v]].clone()).collect();
        for mask in 0u32..(1 << free.len()) {
            let mut signs = vec![1i8; m];
            for (i, &e) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    signs[e] = -1;
                }
            }
            let f = face_count(g, &rot, &signs);
            best = best.min((2 + m) - (n + f));
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            choice[i] += 1;
            if choice[i] < rotations[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn genus_matches_exhaustive_embedding_search() {
    for (g, expected) in [
        (complete(4), 0),
        (complete(5), 1),
        (complete_bipartite(3, 3), 1),
        (petersen(), 1),
    ] {
        let brute = brute_force_genus(&g);
        assert_eq!(brute, expected);
        assert_eq!(graph_euler_genus(&g).unwrap(), brute);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..25 {
        let n = rng.gen_range(4..=6);
        let m = rng.gen_range(n..=(n * (n - 1) / 2).min(10));
        let g = random_connected_graph(&mut rng, n, m);
        let brute = brute_force_genus(&g);
        assert_eq!(graph_euler_genus(&g).unwrap(), brute, "{:?}", g.edges());
        assert_eq!(is_planar(&g), brute == 0);
    }
}

#[test]
fn cfi_pairs_over_small_bases() {
    let diamond = ColouredGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
    for base in [complete(4), complete_bipartite(2, 3), diamond] {
        let expected: usize = (0..base.order())
            .map(|v| {
                let d = base.degree(v);
                (1 << (d - 1)) + 2 * d
            })
            .sum();
        let p = cfi_pair(&base).unwrap();
        assert_eq!(p.untwisted.order(), expected);
        assert!(expected <= 40);
        assert!(!brute_force_isomorphic(&p.untwisted, &p.twisted).unwrap());
        assert!(!distinguishes(&p.untwisted, &p.twisted, 1).unwrap());
    }
}
