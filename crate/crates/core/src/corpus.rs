//! Named, deterministic collections of graphs and embeddings.
//!
//! A corpus serialises as
//! `{"name": …, "entries": [{"name": …, "note": …, "graph" | "embedding": …}]}`
//! using the graph and embedding JSON formats.

use crate::error::{Error, Result};
use crate::graph::{families, json as gjson, ColouredGraph};
use crate::oracle::{enumerate_graphs, enumerate_trees};
use crate::surface::{json as ejson, standard, EmbeddedGraph};
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub enum Item {
    Graph(ColouredGraph),
    Embedding(EmbeddedGraph),
}

impl Item {
    pub fn graph(&self) -> &ColouredGraph {
        match self {
            Item::Graph(g) => g,
            Item::Embedding(e) => e.graph(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub item: Item,
    /// Where the entry comes from and any known invariant.
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub name: String,
    pub entries: Vec<Entry>,
}

/// Names accepted by [`corpus`].
pub const CORPORA: &[&str] = &["torus", "genus", "graphs-N", "connected-N", "trees-N"];

impl Corpus {
    pub fn graphs(&self) -> Vec<ColouredGraph> {
        self.entries.iter().map(|e| e.item.graph().clone()).collect()
    }

    pub fn embeddings(&self) -> Vec<(&str, &EmbeddedGraph)> {
        self.entries
            .iter()
            .filter_map(|e| match &e.item {
                Item::Embedding(x) => Some((e.name.as_str(), x)),
                Item::Graph(_) => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut v = json!({"name": e.name, "note": e.note});
                match &e.item {
                    Item::Graph(g) => v["graph"] = gjson::to_json(g),
                    Item::Embedding(x) => v["embedding"] = ejson::to_json(x),
                }
                v
            })
            .collect();
        json!({"name": self.name, "entries": entries})
    }

    pub fn from_json(v: &Value) -> Result<Corpus> {
        let bad = |m: &str| Error::Json(format!("corpus: {m}"));
        let name = v["name"].as_str().ok_or_else(|| bad("missing name"))?.to_string();
        let mut entries = Vec::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("missing entries"))? {
            let item = match (e.get("graph"), e.get("embedding")) {
                (Some(g), None) => Item::Graph(gjson::from_json(g)?),
                (None, Some(x)) => Item::Embedding(ejson::from_json(x)?),
                _ => return Err(bad("entry needs exactly one of graph, embedding")),
            };
            entries.push(Entry {
                name: e["name"].as_str().ok_or_else(|| bad("entry without name"))?.to_string(),
                note: e["note"].as_str().unwrap_or_default().to_string(),
                item,
            });
        }
        Ok(Corpus { name, entries })
    }

    pub fn parse(text: &str) -> Result<Corpus> {
        Corpus::from_json(&serde_json::from_str(text)?)
    }
}

fn entry(name: &str, item: Item, note: &str) -> Entry {
    Entry {
        name: name.to_string(),
        item,
        note: note.to_string(),
    }
}

/// The embedded torus corpus: `C3×C3`, `C4×C4`, `K5` and `K3,3`.
pub fn torus_corpus() -> Corpus {
    Corpus {
        name: "torus".into(),
        entries: vec![
            entry("C3xC3", Item::Embedding(standard::torus_grid_embedding(3, 3)), "torus grid, 9 quadrilateral faces"),
            entry("C4xC4", Item::Embedding(standard::torus_grid_embedding(4, 4)), "torus grid, 16 quadrilateral faces"),
            entry("K5", Item::Embedding(standard::toroidal_k5()), "toroidal K5, 5 faces"),
            entry("K3,3", Item::Embedding(standard::toroidal_k33()), "toroidal K3,3, 3 hexagonal faces"),
        ],
    }
}

/// Graphs with known Euler genus, stated in each note as `eg=<value>`.
pub fn genus_corpus() -> Corpus {
    Corpus {
        name: "genus".into(),
        entries: vec![
            entry("K4", Item::Graph(families::complete(4)), "eg=0"),
            entry("K5", Item::Graph(families::complete(5)), "eg=1"),
            entry("K3,3", Item::Graph(families::complete_bipartite(3, 3)), "eg=1"),
            entry("C3xC3", Item::Graph(families::torus_grid(3, 3)), "eg=1"),
            entry("petersen", Item::Graph(families::petersen()), "eg=1"),
        ],
    }
}

/// Known Euler genus recorded in an entry note.
pub fn noted_genus(e: &Entry) -> Option<usize> {
    e.note.strip_prefix("eg=")?.parse().ok()
}

fn enumerated(name: &str, graphs: Vec<ColouredGraph>, n: usize) -> Corpus {
    let entries = graphs
        .into_iter()
        .enumerate()
        .map(|(i, g)| entry(&format!("n{n}-{i}"), Item::Graph(g), "enumerated"))
        .collect();
    Corpus {
        name: name.into(),
        entries,
    }
}

/// A corpus by name: `torus`, `genus`, `graphs-N` (all graphs of order N),
/// `connected-N` or `trees-N`.
pub fn corpus(name: &str) -> Result<Corpus> {
    match name {
        "torus" => return Ok(torus_corpus()),
        "genus" => return Ok(genus_corpus()),
        _ => {}
    }
    let unknown = || Error::InvalidArgument(format!("unknown corpus {name}"));
    let (kind, n) = name.rsplit_once('-').ok_or_else(unknown)?;
    let n: usize = n.parse().map_err(|_| unknown())?;
    let graphs = match kind {
        "graphs" => enumerate_graphs(n, false)?,
        "connected" => enumerate_graphs(n, true)?,
        "trees" => enumerate_trees(n)?,
        _ => return Err(unknown()),
    };
    Ok(enumerated(name, graphs, n))
}

fn dims(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once('x')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

/// A graph by name: `Kn`, `Ka,b`, `Cn`, `Pn`, `TrxC` (torus grid) or
/// `petersen`.
pub fn named_graph(name: &str) -> Option<ColouredGraph> {
    if name == "petersen" {
        return Some(families::petersen());
    }
    let (head, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    match head {
        "K" => match rest.split_once(',') {
            Some((a, b)) => Some(families::complete_bipartite(a.parse().ok()?, b.parse().ok()?)),
            None => Some(families::complete(rest.parse().ok()?)),
        },
        "C" => {
            let n: usize = rest.parse().ok()?;
            (n >= 3).then(|| families::cycle(n))
        }
        "P" => Some(families::path(rest.parse().ok()?)),
        "T" => {
            let (r, c) = dims(rest)?;
            (r >= 3 && c >= 3).then(|| families::torus_grid(r, c))
        }
        _ => None,
    }
}

/// An embedding by name: `torus-RxC`, `toroidal-K5`, `toroidal-K3,3` or
/// `double-torus`.
pub fn named_embedding(name: &str) -> Option<EmbeddedGraph> {
    match name {
        "toroidal-K5" => Some(standard::toroidal_k5()),
        "toroidal-K3,3" => Some(standard::toroidal_k33()),
        "double-torus" => Some(standard::double_torus()),
        _ => {
            let (r, c) = dims(name.strip_prefix("torus-")?)?;
            (r >= 3 && c >= 3).then(|| standard::torus_grid_embedding(r, c))
        }
    }
}
