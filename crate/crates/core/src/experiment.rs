//! Named, seeded experiments producing machine-readable reports.
//!
//! Every experiment derives its randomness from one ChaCha generator seeded
//! with [`ExperimentConfig::seed`]; instance seeds are drawn from it in
//! order before any instance runs, so reports are identical across runs
//! and across execution modes. Reports carry no timings.

use crate::cfi::{cfi_pair, CfiPair};
use crate::corpus::{genus_corpus, noted_genus, torus_corpus};
use crate::error::{Error, Result};
use crate::graph::{families, individualise, ColouredGraph};
use crate::logic::{sample_formulas, sample_vars, Assignment, Evaluator, Formula, PebbleGame};
use crate::oracle::{
    automorphism_orbits, enumerate_graphs, enumerate_trees, find_isomorphism, random_automorphism,
};
use crate::par::{self, ExecMode};
use crate::surface::{
    cut_along_cycle, embedding_euler_genus, graph_euler_genus_with, is_planar, shortest_noncontractible_cycle,
    standard, trace_faces, EmbeddedGraph, GenusConfig,
};
use crate::topo::{cut_graph, exhaustive_reducing_necklace, find_reducing_necklace, verify_necklace};
use crate::wl::{distinguishes_with, identifies_each, refine_jointly, refines, wl_refine_with, WlConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// Names accepted by [`run_experiment`], one per acceptance criterion.
pub const EXPERIMENTS: &[&str] = &[
    "planar-wl3",
    "cfi-k4",
    "logic-wl",
    "necklace-torus",
    "genus-ground-truth",
    "trees-1wl",
    "orbits",
    "refine-invariants",
    "surgery-invariants",
];

#[derive(Clone, Debug)]
#[derive(Default)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub mode: ExecMode,
    /// Wall-clock budget; instances not started in time are reported as
    /// failed with reason `budget`.
    pub budget: Option<Duration>,
    /// Overrides the largest graph order an experiment enumerates.
    pub max_order: Option<usize>,
    /// Overrides the number of random samples.
    pub samples: Option<usize>,
}


#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Instance {
    pub id: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub experiment: String,
    pub seed: u64,
    pub parameters: Value,
    pub instances: Vec<Instance>,
    pub pass: bool,
}

impl Report {
    fn new(name: &str, cfg: &ExperimentConfig, parameters: Value, instances: Vec<Instance>) -> Report {
        Report {
            experiment: name.to_string(),
            seed: cfg.seed,
            parameters,
            pass: instances.iter().all(|i| i.pass),
            instances,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }
}

fn instance(id: impl Into<String>, pass: bool, detail: Value) -> Instance {
    Instance {
        id: id.into(),
        pass,
        detail,
    }
}

fn error_instance(id: impl Into<String>, e: &Error) -> Instance {
    instance(id, false, json!({"error": e.to_string()}))
}

struct Runner {
    mode: ExecMode,
    deadline: Option<Instant>,
}

impl Runner {
    fn new(cfg: &ExperimentConfig) -> Runner {
        Runner {
            mode: cfg.mode,
            deadline: cfg.budget.map(|b| Instant::now() + b),
        }
    }

    /// Runs `f` on each job, in parallel when enabled, keeping job order.
    fn run<J, F>(&self, ids: Vec<String>, jobs: Vec<J>, f: F) -> Vec<Instance>
    where
        J: Sync,
        F: Fn(&J) -> Result<(bool, Value)> + Sync + Send,
    {
        
        par::map_range(self.mode, jobs.len(), |i| {
            if self.deadline.is_some_and(|d| Instant::now() > d) {
                return instance(ids[i].clone(), false, json!({"error": "budget"}));
            }
            match f(&jobs[i]) {
                Ok((pass, detail)) => instance(ids[i].clone(), pass, detail),
                Err(e) => error_instance(ids[i].clone(), &e),
            }
        })
    }

    fn wl(&self) -> WlConfig {
        WlConfig {
            mode: self.mode,
            ..WlConfig::default()
        }
    }

    fn genus(&self) -> GenusConfig {
        GenusConfig {
            mode: self.mode,
            ..GenusConfig::default()
        }
    }
}

/// Runs the named experiment.
pub fn run_experiment(name: &str, cfg: &ExperimentConfig) -> Result<Report> {
    let r = Runner::new(cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (params, instances) = match name {
        "planar-wl3" => planar_wl3(&r, cfg.max_order.unwrap_or(7)),
        "cfi-k4" => cfi_k4(&r),
        "logic-wl" => logic_wl(&r, &mut rng, cfg.max_order.unwrap_or(7), cfg.samples.unwrap_or(200)),
        "necklace-torus" => necklace_torus(&r),
        "genus-ground-truth" => genus_ground_truth(&r),
        "trees-1wl" => trees_1wl(&r, cfg.max_order.unwrap_or(10)),
        "orbits" => orbits(&r, cfg.max_order.unwrap_or(6)),
        "refine-invariants" => refine_invariants(&r, &mut rng, cfg.max_order.unwrap_or(7)),
        "surgery-invariants" => surgery_invariants(&r, &mut rng, cfg.max_order.unwrap_or(8), cfg.samples.unwrap_or(500)),
        _ => return Err(Error::UnknownExperiment(name.to_string())),
    };
    Ok(Report::new(name, cfg, params, instances))
}

fn orders(lo: usize, hi: usize) -> (Vec<String>, Vec<usize>) {
    ((lo..=hi).map(|n| format!("n={n}")).collect(), (lo..=hi).collect())
}

fn planar_wl3(r: &Runner, max_n: usize) -> (Value, Vec<Instance>) {
    let (ids, ns) = orders(1, max_n);
    let cfg = r.wl();
    let inst = r.run(ids, ns, |&n| {
        let family = enumerate_graphs(n, false)?;
        let identified = identifies_each(&family, 3, &cfg)?;
        let planar: Vec<usize> = (0..family.len())
            .filter(|&i| family[i].is_connected() && is_planar(&family[i]))
            .collect();
        let failures: Vec<usize> = planar.iter().copied().filter(|&i| !identified[i]).collect();
        Ok((
            failures.is_empty(),
            json!({
                "graphs": family.len(),
                "planar_connected": planar.len(),
                "identified": planar.len() - failures.len(),
                "failures": failures,
            }),
        ))
    });
    (json!({"k": 3, "max_order": max_n}), inst)
}

fn cfi_k4(r: &Runner) -> (Value, Vec<Instance>) {
    let cfg = r.wl();
    let inst = r.run(vec!["K4".into()], vec![()], |_| {
        let pair: CfiPair = cfi_pair(&families::complete(4))?;
        let iso = match find_isomorphism(&pair.untwisted, &pair.twisted) {
            Ok(m) => json!(m.is_some()),
            Err(e) => json!(e.to_string()),
        };
        let mut verdicts = Vec::new();
        let mut threshold = None;
        let mut skipped = None;
        for k in 1..=4 {
            match distinguishes_with(&pair.untwisted, &pair.twisted, k, &cfg) {
                Ok(d) => {
                    verdicts.push(json!(d));
                    if d {
                        threshold = Some(k);
                        break;
                    }
                }
                Err(Error::BudgetExhausted { .. }) => {
                    skipped = Some(k);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let threshold_str = match (threshold, skipped) {
            (Some(k), _) => k.to_string(),
            (None, Some(k)) => format!(">{}", k - 1),
            (None, None) => ">4".into(),
        };
        let pass = iso == json!(false)
            && verdicts.first() == Some(&json!(false))
            && verdicts.get(1) == Some(&json!(false))
            && (threshold.is_some_and(|k| k <= 4) || skipped == Some(4));
        Ok((
            pass,
            json!({
                "order": pair.untwisted.order(),
                "twist": [pair.twist.0, pair.twist.1],
                "isomorphic": iso,
                "distinguished": verdicts,
                "skipped_k": skipped,
                "threshold": threshold_str,
            }),
        ))
    });
    (json!({"base": "K4", "k_max": 4}), inst)
}

/// `G(n, 1/2)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> ColouredGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    ColouredGraph::from_edges(n, &edges)
}

/// A connected graph with `n` vertices and `m` edges: a random tree plus
/// random extra edges. Requires `n - 1 <= m <= n(n-1)/2`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> ColouredGraph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2, "no connected graph with n={n}, m={m}");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let (a, b) = (order[i], order[rng.gen_range(0..i)]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(m + 1 - n));
    edges.sort();
    ColouredGraph::from_edges(n, &edges)
}

/// Swaps `ab, cd` for `ac, bd` a few times, keeping degrees.
fn degree_preserving_swaps<R: Rng>(rng: &mut R, g: &ColouredGraph, swaps: usize) -> ColouredGraph {
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for _ in 0..swaps * 10 {
        if edges.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        let ((a, b), (c, d)) = (edges[i], edges[j]);
        let (x, y) = ((a.min(c), a.max(c)), (b.min(d), b.max(d)));
        if a == c || b == d || x.0 == x.1 || y.0 == y.1 || edges.contains(&x) || edges.contains(&y) {
            continue;
        }
        edges[i] = x;
        edges[j] = y;
    }
    edges.sort();
    ColouredGraph::from_edges(g.order(), &edges)
}

fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n.pow(k as u32))
        .map(|mut t| {
            let mut v = vec![0; k];
            for i in (0..k).rev() {
                v[i] = t % n;
                t /= n;
            }
            v
        })
        .collect()
}

/// Binds every free variable outside `keep` existentially.
fn close_over(phi: Formula, keep: &[crate::logic::Var]) -> Formula {
    let extra: Vec<_> = phi.free_vars().into_iter().filter(|x| !keep.contains(x)).collect();
    extra.into_iter().fold(phi, |f, x| Formula::exists(x, f))
}

/// Checks the pebble game against joint refinement on all k-tuple pairs
/// and the sampled formulas on equal-coloured tuples.
fn logic_check(g: &ColouredGraph, h: &ColouredGraph, k: usize, seed: u64, cfg: &WlConfig) -> Result<Value> {
    let n = g.order();
    let joint = refine_jointly(&[g, h], k, cfg)?;
    let (cg, ch) = (&joint.colourings[0], &joint.colourings[1]);
    let game = PebbleGame::solve(g, h, k)?;
    let tuples = all_tuples(n, k);
    let mut game_mismatch = 0usize;
    for u in &tuples {
        for v in &tuples {
            if game.wins(u, v) != (cg.colour_of(u) == ch.colour_of(v)) {
                game_mismatch += 1;
            }
        }
    }
    let empty_ok = game.wins_empty() == !joint.distinguishes(0, 1);
    let mut universe = g.colour_universe();
    universe.retain(|c| h.colour_universe().contains(c));
    let vars = sample_vars(k + 1);
    let formulas = sample_formulas(k + 1, 4, seed, &universe, 100);
    let mut formula_mismatch = 0usize;
    for phi in formulas {
        let phi = close_over(phi, &vars[..k]);
        let mut eg = Evaluator::new(g, &phi)?;
        let mut eh = Evaluator::new(h, &phi)?;
        let mut seen: HashMap<u32, bool> = HashMap::new();
        let mut bad = false;
        for (colouring, ev) in [(cg, &mut eg), (ch, &mut eh)] {
            for t in &tuples {
                let val = ev.eval(&Assignment::from_tuple(&vars[..k], t))?;
                if *seen.entry(colouring.colour_of(t).0).or_insert(val) != val {
                    bad = true;
                }
            }
        }
        formula_mismatch += usize::from(bad);
    }
    Ok(json!({
        "k": k,
        "distinguished": joint.distinguishes(0, 1),
        "game_mismatches": game_mismatch,
        "empty_position_agrees": empty_ok,
        "formula_mismatches": formula_mismatch,
    }))
}

fn logic_wl(r: &Runner, rng: &mut ChaCha8Rng, max_n: usize, pairs: usize) -> (Value, Vec<Instance>) {
    let jobs: Vec<u64> = (0..pairs).map(|_| rng.gen()).collect();
    let ids = (0..pairs).map(|i| format!("pair-{i}")).collect();
    let cfg = r.wl();
    let inst = r.run(ids, jobs.into_iter().enumerate().collect(), |&(i, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=max_n);
        let g = random_graph(&mut rng, n);
        let (kind, h) = match i % 3 {
            0 => ("independent", random_graph(&mut rng, n)),
            1 => ("permuted", g.permute(&random_permutation(&mut rng, n))),
            _ => ("swapped", degree_preserving_swaps(&mut rng, &g, 2)),
        };
        let mut checks = Vec::new();
        let mut pass = true;
        for k in 1..=2 {
            let c = logic_check(&g, &h, k, seed ^ k as u64, &cfg)?;
            pass &= c["game_mismatches"] == 0 && c["formula_mismatches"] == 0 && c["empty_position_agrees"] == true;
            checks.push(c);
        }
        Ok((pass, json!({"order": n, "kind": kind, "seed": seed, "checks": checks})))
    });
    (json!({"pairs": pairs, "max_order": max_n, "k": [1, 2], "formulas": 100, "depth": 4}), inst)
}

fn necklace_torus(r: &Runner) -> (Value, Vec<Instance>) {
    let corpus = torus_corpus();
    let ids = corpus.entries.iter().map(|e| e.name.clone()).collect();
    let embs: Vec<EmbeddedGraph> = corpus.embeddings().into_iter().map(|(_, e)| e.clone()).collect();
    let gcfg = r.genus();
    let inst = r.run(ids, embs, |emb| {
        let genus = embedding_euler_genus(emb)?;
        let b = match find_reducing_necklace(emb) {
            Ok(b) => b,
            Err(e) => {
                let exists = exhaustive_reducing_necklace(emb)?.is_some();
                return Ok((
                    false,
                    json!({"euler_genus": genus, "found": false, "error": e.to_string(), "exhaustive_exists": exists}),
                ));
            }
        };
        let verified = verify_necklace(emb, &b).is_ok();
        let cut = cut_graph(emb, &b)?;
        let mut comps = Vec::new();
        for c in cut.components() {
            comps.push(graph_euler_genus_with(&c.to_graph(emb.graph()).0, &gcfg)?);
        }
        let pass = verified && comps.iter().all(|&x| x == 0);
        Ok((
            pass,
            json!({
                "euler_genus": genus,
                "found": true,
                "u": b.u,
                "verified": verified,
                "beads": b.beads.len(),
                "component_genera": comps,
            }),
        ))
    });
    (json!({"corpus": "torus"}), inst)
}

fn genus_ground_truth(r: &Runner) -> (Value, Vec<Instance>) {
    let corpus = genus_corpus();
    let mut ids: Vec<String> = corpus.entries.iter().map(|e| e.name.clone()).collect();
    ids.push("toroidal-K5".into());
    let mut jobs: Vec<Option<(ColouredGraph, usize)>> = corpus
        .entries
        .iter()
        .map(|e| Some((e.item.graph().clone(), noted_genus(e).expect("genus corpus notes eg"))))
        .collect();
    jobs.push(None);
    let gcfg = r.genus();
    let inst = r.run(ids, jobs, |job| match job {
        Some((g, expected)) => {
            let eg = graph_euler_genus_with(g, &gcfg)?;
            Ok((eg == *expected, json!({"euler_genus": eg, "expected": expected})))
        }
        None => {
            let emb = standard::toroidal_k5();
            let eg = embedding_euler_genus(&emb)?;
            let faces = trace_faces(&emb)?.len();
            Ok((eg == 2 && faces == 5, json!({"embedding_euler_genus": eg, "faces": faces})))
        }
    });
    (json!({"corpus": "genus"}), inst)
}

fn trees_1wl(r: &Runner, max_n: usize) -> (Value, Vec<Instance>) {
    let (ids, ns) = orders(1, max_n);
    let cfg = r.wl();
    let inst = r.run(ids, ns, |&n| {
        let trees = enumerate_trees(n)?;
        let ok = identifies_each(&trees, 1, &cfg)?;
        let failures: Vec<usize> = (0..trees.len()).filter(|&i| !ok[i]).collect();
        Ok((failures.is_empty(), json!({"trees": trees.len(), "failures": failures})))
    });
    (json!({"k": 1, "max_order": max_n}), inst)
}

fn orbits(r: &Runner, max_n: usize) -> (Value, Vec<Instance>) {
    let (ids, ns) = orders(1, max_n);
    let cfg = r.wl();
    let inst = r.run(ids, ns, |&n| {
        let graphs = enumerate_graphs(n, false)?;
        let mut family = Vec::new();
        for g in &graphs {
            for v in 0..n {
                family.push(individualise(g, &[v])?);
            }
        }
        let identified = identifies_each(&family, 1, &cfg)?;
        let mut qualifying = 0;
        let mut failures = Vec::new();
        for (i, g) in graphs.iter().enumerate() {
            if !identified[i * n..(i + 1) * n].iter().all(|&x| x) {
                continue;
            }
            qualifying += 1;
            let s = wl_refine_with(g, 2, &cfg)?;
            if s.vertex_classes() != automorphism_orbits(g)? {
                failures.push(i);
            }
        }
        Ok((
            failures.is_empty(),
            json!({"graphs": graphs.len(), "qualifying": qualifying, "failures": failures}),
        ))
    });
    (json!({"k": 1, "max_order": max_n}), inst)
}

fn refine_invariants(r: &Runner, rng: &mut ChaCha8Rng, max_n: usize) -> (Value, Vec<Instance>) {
    let mut ids = Vec::new();
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for (i, g) in enumerate_graphs(n, false).expect("order within enumeration bound").into_iter().enumerate() {
            ids.push(format!("n={n}/{i}"));
            jobs.push((g, rng.gen::<u64>()));
        }
    }
    let cfg = WlConfig {
        audit: true,
        ..r.wl()
    };
    let inst = r.run(ids, jobs, |(g, seed)| {
        let n = g.order();
        let mut rng = ChaCha8Rng::seed_from_u64(*seed);
        let auts: Vec<Vec<usize>> = (0..50)
            .map(|_| random_automorphism(g, &mut rng))
            .collect::<Result<_>>()?;
        let mut runs = Vec::new();
        let mut pass = true;
        for k in 1..=3 {
            let s = wl_refine_with(g, k, &cfg)?;
            let hist = s.history.as_ref().expect("audited run keeps history");
            let monotone = hist.windows(2).all(|w| refines(&w[1], &w[0]))
                && hist.last() == Some(&s.colouring);
            let bounded = s.rounds <= n.pow(k as u32);
            let equivariant = auts.iter().all(|p| {
                (0..s.colouring.len()).all(|t| {
                    let image: Vec<usize> = s.tuple(t).iter().map(|&v| p[v]).collect();
                    s.colouring[t] == s.colour_of(&image).0
                })
            });
            pass &= monotone && bounded && equivariant;
            runs.push(json!({
                "k": k,
                "rounds": s.rounds,
                "monotone": monotone,
                "bounded": bounded,
                "equivariant": equivariant,
            }));
        }
        Ok((pass, json!({"order": n, "runs": runs})))
    });
    (json!({"max_order": max_n, "k": [1, 2, 3], "automorphisms": 50}), inst)
}

/// A rotation system with uniformly random rotations and edge signs.
pub fn random_embedding<R: Rng>(rng: &mut R, g: ColouredGraph) -> EmbeddedGraph {
    let rot = (0..g.order())
        .map(|v| {
            let mut r = g.neighbours(v).to_vec();
            r.shuffle(rng);
            r
        })
        .collect();
    let signs = (0..g.size()).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    EmbeddedGraph::new(g, rot, signs).expect("rotations list every neighbour once")
}

fn surgery_check(emb: &EmbeddedGraph) -> Result<(bool, Value)> {
    let m = emb.size();
    let faces = trace_faces(emb)?;
    let darts: usize = faces.iter().map(|f| f.len()).sum();
    let conserved = darts == 2 * m;
    let eg = embedding_euler_genus(emb)?;
    let orientable = emb.is_orientable();
    let parity = !orientable || eg % 2 == 0;
    let mut detail = json!({
        "order": emb.order(),
        "size": m,
        "faces": faces.len(),
        "euler_genus": eg,
        "orientable": orientable,
        "darts_conserved": conserved,
        "parity": parity,
    });
    let mut pass = conserved && parity;
    if let Some(c) = shortest_noncontractible_cycle(emb)? {
        let cut = cut_along_cycle(emb, &c)?;
        let pieces: Vec<usize> = cut.pieces.iter().map(|p| p.euler_genus()).collect();
        let total: usize = pieces.iter().sum();
        let drop = total < eg;
        pass &= drop;
        detail["cycle"] = json!(c);
        detail["one_sided"] = json!(cut.one_sided);
        detail["piece_genera"] = json!(pieces);
        detail["genus_drop"] = json!(drop);
    }
    Ok((pass, detail))
}

fn surgery_invariants(r: &Runner, rng: &mut ChaCha8Rng, max_n: usize, count: usize) -> (Value, Vec<Instance>) {
    const MAX_SIZE: usize = 14;
    let jobs: Vec<u64> = (0..count).map(|_| rng.gen()).collect();
    let ids = (0..count).map(|i| format!("system-{i}")).collect();
    let inst = r.run(ids, jobs, |&seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..=max_n.max(3));
        let m = rng.gen_range(n - 1..=MAX_SIZE.min(n * (n - 1) / 2));
        let g = random_connected_graph(&mut rng, n, m);
        let emb = random_embedding(&mut rng, g);
        let (pass, mut detail) = surgery_check(&emb)?;
        detail["seed"] = json!(seed);
        Ok((pass, detail))
    });
    (json!({"systems": count, "max_order": max_n, "max_size": MAX_SIZE}), inst)
}
