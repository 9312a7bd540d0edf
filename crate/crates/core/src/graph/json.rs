//! Graph JSON: `{"n": int, "edges": [[u,v],...], "vertex_colours": [...],
//! "arc_colours": [[u,v,colour],...]}` with colour terms written as a
//! string atom, `{"multiset": [...]}` or `{"individual": i, "base": term}`.

use super::{Colour, ColouredGraph};
use crate::error::{Error, Result};
use serde_json::{json, Value};

pub fn colour_to_json(c: &Colour) -> Value {
    match c {
        Colour::Atom(a) => Value::String(a.to_string()),
        Colour::Multiset(items) => json!({ "multiset": items.iter().map(colour_to_json).collect::<Vec<_>>() }),
        Colour::Individual { index, base } => {
            json!({ "individual": index, "base": colour_to_json(base) })
        }
    }
}

pub fn colour_from_json(v: &Value) -> Result<Colour> {
    match v {
        Value::String(s) => Ok(Colour::atom(s)),
        Value::Number(n) => Ok(Colour::atom(&n.to_string())),
        Value::Object(o) => {
            if let Some(items) = o.get("multiset") {
                let items = items
                    .as_array()
                    .ok_or_else(|| Error::Json("multiset must be a list".into()))?;
                Ok(Colour::multiset(
                    items.iter().map(colour_from_json).collect::<Result<Vec<_>>>()?,
                ))
            } else if let Some(i) = o.get("individual") {
                let index = i
                    .as_u64()
                    .ok_or_else(|| Error::Json("individual index".into()))?
                    as usize;
                let base = o
                    .get("base")
                    .map(colour_from_json)
                    .transpose()?
                    .unwrap_or_else(Colour::plain);
                Ok(Colour::Individual {
                    index,
                    base: Box::new(base),
                })
            } else {
                Err(Error::Json(format!("bad colour term {v}")))
            }
        }
        _ => Err(Error::Json(format!("bad colour term {v}"))),
    }
}

pub fn to_json(g: &ColouredGraph) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), json!(g.order()));
    obj.insert(
        "edges".into(),
        json!(g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>()),
    );
    if !g.is_uncoloured() || g.vertex_colours().iter().any(|c| *c != Colour::plain()) {
        obj.insert(
            "vertex_colours".into(),
            Value::Array(g.vertex_colours().iter().map(colour_to_json).collect()),
        );
        let mut arcs = Vec::new();
        for &(u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                let c = g.colour(a, b).unwrap();
                if *c != Colour::plain() {
                    arcs.push(json!([a, b, colour_to_json(c)]));
                }
            }
        }
        if !arcs.is_empty() {
            obj.insert("arc_colours".into(), Value::Array(arcs));
        }
    }
    Value::Object(obj)
}

fn as_index(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Json(format!("expected vertex index, got {v}")))
}

pub fn from_json(v: &Value) -> Result<ColouredGraph> {
    let n = v
        .get("n")
        .ok_or_else(|| Error::Json("missing n".into()))
        .and_then(as_index)?;
    let mut edges = Vec::new();
    if let Some(es) = v.get("edges") {
        for e in es
            .as_array()
            .ok_or_else(|| Error::Json("edges must be a list".into()))?
        {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Json(format!("bad edge {e}")))?;
            edges.push((as_index(&pair[0])?, as_index(&pair[1])?));
        }
    }
    let mut g = ColouredGraph::new(n, &edges)?;
    if let Some(vc) = v.get("vertex_colours") {
        let vc = vc
            .as_array()
            .ok_or_else(|| Error::Json("vertex_colours must be a list".into()))?;
        let colours = vc.iter().map(colour_from_json).collect::<Result<Vec<_>>>()?;
        g = g.with_vertex_colours(colours)?;
    }
    if let Some(ac) = v.get("arc_colours") {
        for a in ac
            .as_array()
            .ok_or_else(|| Error::Json("arc_colours must be a list".into()))?
        {
            let t = a
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Json(format!("bad arc colour {a}")))?;
            g.set_arc_colour(as_index(&t[0])?, as_index(&t[1])?, colour_from_json(&t[2])?)?;
        }
    }
    Ok(g)
}

pub fn parse(text: &str) -> Result<ColouredGraph> {
    from_json(&serde_json::from_str(text)?)
}
