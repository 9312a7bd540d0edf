//! `{"graph": <graph>, "rotation": {"v": [[neighbour, edge_id], …]}, "signs": {"edge_id": ±1}}`

use super::embedding::EmbeddedGraph;
use crate::error::{Error, Result};
use crate::graph::json as gjson;
use serde_json::{json, Map, Value};

pub fn to_json(emb: &EmbeddedGraph) -> Value {
    let g = emb.graph();
    let mut rotation = Map::new();
    for v in 0..emb.order() {
        let entries: Vec<Value> = emb
            .rotation(v)
            .iter()
            .map(|&d| json!([emb.head(d), d / 2]))
            .collect();
        rotation.insert(v.to_string(), Value::Array(entries));
    }
    let mut signs = Map::new();
    for e in 0..g.size() {
        signs.insert(e.to_string(), json!(emb.sign(e)));
    }
    json!({"graph": gjson::to_json(g), "rotation": rotation, "signs": signs})
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidEmbedding(msg.into())
}

pub fn from_json(v: &Value) -> Result<EmbeddedGraph> {
    let g = gjson::from_json(v.get("graph").ok_or_else(|| bad("missing graph"))?)?;
    let rot = v
        .get("rotation")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing rotation object"))?;
    let mut neighbours = vec![Vec::new(); g.order()];
    for (key, entries) in rot {
        let u: usize = key.parse().map_err(|_| bad(format!("bad vertex key {key}")))?;
        if u >= g.order() {
            return Err(Error::VertexOutOfRange(u));
        }
        let list = entries.as_array().ok_or_else(|| bad("rotation entry is not a list"))?;
        for item in list {
            let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("expected [neighbour, edge_id]"))?;
            let w = pair[0].as_u64().ok_or_else(|| bad("neighbour must be an integer"))? as usize;
            let e = pair[1].as_u64().ok_or_else(|| bad("edge id must be an integer"))? as usize;
            if g.edge_index(u, w) != Some(e) {
                return Err(bad(format!("edge id {e} does not join {u} and {w}")));
            }
            neighbours[u].push(w);
        }
    }
    let mut signs = vec![1i8; g.size()];
    if let Some(obj) = v.get("signs") {
        let obj = obj.as_object().ok_or_else(|| bad("signs must be an object"))?;
        for (key, s) in obj {
            let e: usize = key.parse().map_err(|_| bad(format!("bad edge key {key}")))?;
            if e >= g.size() {
                return Err(bad(format!("edge id {e} out of range")));
            }
            signs[e] = match s.as_i64() {
                Some(1) => 1,
                Some(-1) => -1,
                _ => return Err(bad("signs must be 1 or -1")),
            };
        }
    }
    EmbeddedGraph::new(g, neighbours, signs)
}

pub fn parse(text: &str) -> Result<EmbeddedGraph> {
    from_json(&serde_json::from_str(text)?)
}
