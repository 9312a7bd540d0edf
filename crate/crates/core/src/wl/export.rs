use super::StableColouring;
use serde_json::{json, Value};

/// `{"k", "classes": [{"colour", "count", "representative"}], "rounds"}`;
/// the representative is the least tuple of the class.
pub fn colouring_to_json(s: &StableColouring) -> Value {
    let mut first: std::collections::BTreeMap<u32, (usize, usize)> = Default::default();
    for (t, &c) in s.colouring.iter().enumerate() {
        first.entry(c).and_modify(|e| e.1 += 1).or_insert((t, 1));
    }
    let classes: Vec<Value> = first
        .iter()
        .map(|(&c, &(t, count))| {
            json!({ "colour": c, "count": count, "representative": s.tuple(t) })
        })
        .collect();
    json!({ "k": s.k, "classes": classes, "rounds": s.rounds })
}
