//! JSON reports for necklaces and cut graphs.

use super::cut::NecklaceCut;
use super::necklace::Necklace;
use crate::error::Result;
use crate::graph::Subgraph;
use crate::surface::{graph_euler_genus_with, EmbeddedGraph, GenusConfig};
use serde_json::{json, Value};

fn subgraph_json(h: &Subgraph) -> Value {
    json!({
        "vertices": h.vertices.iter().collect::<Vec<_>>(),
        "edges": h.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

pub fn necklace_json(b: &Necklace) -> Value {
    json!({
        "u": b.u,
        "systems": b.sps.iter().map(|q| json!({
            "source": q.source,
            "sink": q.sink,
            "length": q.length(),
            "paths": q.paths,
        })).collect::<Vec<_>>(),
        "articulation": b.art.iter().map(|a| json!({
            "vertex": a.vertex,
            "fibre": a.fibre,
            "height": a.height,
        })).collect::<Vec<_>>(),
        "beads": b.beads.iter().map(|bd| json!({
            "fibre": bd.fibre,
            "index": bd.index,
            "source": bd.patch.sps.source,
            "sink": bd.patch.sps.sink,
            "trivial": bd.is_trivial(),
            "boundary": bd.patch.boundary,
        })).collect::<Vec<_>>(),
        "reducing_cycle": b.reducing_cycle,
    })
}

/// The cut with the Euler genus of each component.
pub fn cut_json(emb: &EmbeddedGraph, cut: &NecklaceCut, cfg: &GenusConfig) -> Result<Value> {
    let mut comps = Vec::new();
    for c in cut.components() {
        let (h, _) = c.to_graph(emb.graph());
        let genus = graph_euler_genus_with(&h, cfg)?;
        let mut v = subgraph_json(&c);
        v["euler_genus"] = json!(genus);
        comps.push(v);
    }
    Ok(json!({
        "inside": subgraph_json(&cut.inside),
        "interior": cut.interior.iter().collect::<Vec<_>>(),
        "outside": subgraph_json(&cut.outside),
        "cut": subgraph_json(&cut.cut),
        "components": comps,
    }))
}
