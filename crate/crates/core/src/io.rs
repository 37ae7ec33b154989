//! Canonical JSON interchange.
//!
//! Formats (all object keys emitted in sorted order, output compact):
//!
//! - **Diagram**: `{"graph": {"vertices": [id…], "edges": {id: [v, v]}},
//!   "rotations": {v: [[e, 0|1]…]}, "traversals": {e: [x…]},
//!   "crossings": {x: {"hand": "L"|"R", "slots": [[e, i], [e, i]]}}}`.
//!   Vertex/edge/crossing ids are opaque strings on disk and dense integers
//!   in memory. Edge values list the two endpoint ids in the edge's oriented
//!   order (traversal lists read along that orientation).
//! - **Curve**: `{"handedness": {label: "L"|"R"}, "sequence": [label…]}`.
//! - **Knot**: a curve plus `"over": {label: 0|1}` (1 = the first-visited
//!   strand passes over).
//! - **Pattern**: `{"sequence": [label…]}`.
//!
//! Parsing accepts arbitrary id strings; emission writes decimal ids. When
//! every id in an object is a canonical decimal (as in files this library
//! wrote), the numeric value is kept as the internal id, which makes
//! serialize → parse → serialize byte-identical; otherwise ids are assigned
//! densely in sorted key order.

use crate::curve::{ChordDiagram, Hand, PlaneCurve};
use crate::diagram::{Crossing, CrossingId, Diagram};
use crate::error::{Error, Result};
use crate::knot::KnotDiagram;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

// ---------------------------------------------------------------- helpers

fn bad(path: &str, what: &str) -> Error {
    Error::invalid(format!("{path}: {what}"))
}

/// Parse a string as a canonical decimal (no sign, no leading zeros except
/// "0" itself).
fn canonical_decimal(s: &str) -> Option<u64> {
    if s.is_empty() || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse::<u64>().ok()
}

/// Map an id set to internal integers: numeric values when every key is a
/// canonical decimal, dense positions in sorted order otherwise.
fn id_map<'a>(keys: impl Iterator<Item = &'a str>) -> BTreeMap<String, u64> {
    let keys: Vec<&str> = keys.collect();
    if let Some(nums) = keys
        .iter()
        .map(|k| canonical_decimal(k))
        .collect::<Option<Vec<u64>>>()
    {
        keys.iter()
            .zip(nums)
            .map(|(k, n)| (k.to_string(), n))
            .collect()
    } else {
        let mut sorted: Vec<&str> = keys.clone();
        sorted.sort_unstable();
        keys.iter()
            .map(|k| {
                let pos = sorted.binary_search(k).expect("key present") as u64;
                (k.to_string(), pos)
            })
            .collect()
    }
}

fn get<'v>(v: &'v Value, key: &str, path: &str) -> Result<&'v Value> {
    v.get(key)
        .ok_or_else(|| bad(path, &format!("missing key \"{key}\"")))
}

fn as_object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

fn as_array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| bad(path, "expected an array"))
}

fn as_str<'v>(v: &'v Value, path: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| bad(path, "expected a string"))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| bad(path, "expected a non-negative integer"))
}

fn hand_to_str(h: Hand) -> &'static str {
    match h {
        Hand::L => "L",
        Hand::R => "R",
    }
}

fn hand_from_value(v: &Value, path: &str) -> Result<Hand> {
    match v.as_str() {
        Some("L") => Ok(Hand::L),
        Some("R") => Ok(Hand::R),
        _ => Err(bad(path, "expected \"L\" or \"R\"")),
    }
}

/// Parse a JSON document.
pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::invalid(format!("JSON parse error: {e}")))
}

/// Canonical rendering: compact, object keys sorted.
pub fn to_canonical_string(v: &Value) -> String {
    // serde_json's default map is a BTreeMap, so keys are already sorted.
    v.to_string()
}

// ---------------------------------------------------------------- diagram

/// Serialize a diagram to its canonical JSON value.
pub fn diagram_to_value(d: &Diagram) -> Value {
    let vertices: Vec<Value> = (0..d.vertex_count())
        .map(|v| json!(v.to_string()))
        .collect();
    let edges: Map<String, Value> = d
        .edge_list()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (e.to_string(), json!([u.to_string(), v.to_string()])))
        .collect();
    let rotations: Map<String, Value> = d
        .rotations()
        .iter()
        .enumerate()
        .map(|(v, germs)| {
            let row: Vec<Value> = germs
                .iter()
                .map(|&(e, w)| json!([e.to_string(), w]))
                .collect();
            (v.to_string(), Value::Array(row))
        })
        .collect();
    let traversals: Map<String, Value> = d
        .traversals()
        .iter()
        .enumerate()
        .map(|(e, xs)| {
            let row: Vec<Value> = xs.iter().map(|x| json!(x.to_string())).collect();
            (e.to_string(), Value::Array(row))
        })
        .collect();
    let crossings: Map<String, Value> = d
        .crossings()
        .iter()
        .map(|(x, c)| {
            let slots: Vec<Value> = c
                .slots
                .iter()
                .map(|&(e, i)| json!([e.to_string(), i]))
                .collect();
            (
                x.to_string(),
                json!({"hand": hand_to_str(c.hand), "slots": slots}),
            )
        })
        .collect();
    json!({
        "graph": {"vertices": vertices, "edges": edges},
        "rotations": rotations,
        "traversals": traversals,
        "crossings": crossings,
    })
}

/// Parse a diagram from its JSON value. Structure is validated; planarity is
/// not (so `validate` can report topological failures on parsed input).
pub fn diagram_from_value(v: &Value) -> Result<Diagram> {
    let graph = get(v, "graph", "diagram")?;
    let vertex_values = as_array(
        get(graph, "vertices", "diagram.graph")?,
        "diagram.graph.vertices",
    )?;
    let mut vertex_names: Vec<String> = Vec::with_capacity(vertex_values.len());
    for (i, val) in vertex_values.iter().enumerate() {
        vertex_names.push(as_str(val, &format!("diagram.graph.vertices[{i}]"))?.to_string());
    }
    {
        let mut sorted = vertex_names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertex_names.len() {
            return Err(bad("diagram.graph.vertices", "duplicate vertex id"));
        }
    }
    let vmap = id_map(vertex_names.iter().map(|s| s.as_str()));
    let vertex_count = vertex_names.len() as u32;
    if vmap.values().any(|&n| n >= u64::from(vertex_count)) {
        return Err(bad(
            "diagram.graph.vertices",
            "numeric vertex ids must be dense 0..n",
        ));
    }
    let vid = |name: &str, path: &str| -> Result<u32> {
        vmap.get(name)
            .map(|&n| n as u32)
            .ok_or_else(|| bad(path, &format!("unknown vertex id \"{name}\"")))
    };

    let edges_obj = as_object(get(graph, "edges", "diagram.graph")?, "diagram.graph.edges")?;
    let emap = id_map(edges_obj.keys().map(|s| s.as_str()));
    let edge_count = edges_obj.len();
    if emap.values().any(|&n| n >= edge_count as u64) {
        return Err(bad(
            "diagram.graph.edges",
            "numeric edge ids must be dense 0..e",
        ));
    }
    let eid = |name: &str, path: &str| -> Result<usize> {
        emap.get(name)
            .map(|&n| n as usize)
            .ok_or_else(|| bad(path, &format!("unknown edge id \"{name}\"")))
    };
    let mut edges: Vec<(u32, u32)> = vec![(0, 0); edge_count];
    for (name, val) in edges_obj {
        let path = format!("diagram.graph.edges.{name}");
        let pair = as_array(val, &path)?;
        if pair.len() != 2 {
            return Err(bad(&path, "expected [endpoint, endpoint]"));
        }
        let u = vid(as_str(&pair[0], &path)?, &path)?;
        let w = vid(as_str(&pair[1], &path)?, &path)?;
        edges[eid(name, &path)?] = (u, w);
    }

    let crossings_obj = as_object(get(v, "crossings", "diagram")?, "diagram.crossings")?;
    let xmap = id_map(crossings_obj.keys().map(|s| s.as_str()));
    if xmap.values().any(|&n| n > u64::from(u32::MAX)) {
        return Err(bad("diagram.crossings", "crossing id out of range"));
    }
    let xid = |name: &str, path: &str| -> Result<CrossingId> {
        xmap.get(name)
            .map(|&n| n as CrossingId)
            .ok_or_else(|| bad(path, &format!("unknown crossing id \"{name}\"")))
    };

    let rot_obj = as_object(get(v, "rotations", "diagram")?, "diagram.rotations")?;
    let mut rotations: Vec<Vec<(usize, u8)>> = vec![Vec::new(); vertex_count as usize];
    for (name, val) in rot_obj {
        let path = format!("diagram.rotations.{name}");
        let vi = vid(name, &path)? as usize;
        let row = as_array(val, &path)?;
        let mut germs = Vec::with_capacity(row.len());
        for (i, g) in row.iter().enumerate() {
            let gpath = format!("{path}[{i}]");
            let pair = as_array(g, &gpath)?;
            if pair.len() != 2 {
                return Err(bad(&gpath, "expected [edge id, end]"));
            }
            let e = eid(as_str(&pair[0], &gpath)?, &gpath)?;
            let w = as_u64(&pair[1], &gpath)?;
            if w > 1 {
                return Err(bad(&gpath, "edge end must be 0 or 1"));
            }
            germs.push((e, w as u8));
        }
        rotations[vi] = germs;
    }
    if rot_obj.len() != vertex_count as usize {
        return Err(bad(
            "diagram.rotations",
            "expected exactly one entry per vertex",
        ));
    }

    let trav_obj = as_object(get(v, "traversals", "diagram")?, "diagram.traversals")?;
    let mut traversals: Vec<Vec<CrossingId>> = vec![Vec::new(); edge_count];
    for (name, val) in trav_obj {
        let path = format!("diagram.traversals.{name}");
        let e = eid(name, &path)?;
        let row = as_array(val, &path)?;
        let mut xs = Vec::with_capacity(row.len());
        for (i, x) in row.iter().enumerate() {
            let xpath = format!("{path}[{i}]");
            xs.push(xid(as_str(x, &xpath)?, &xpath)?);
        }
        traversals[e] = xs;
    }
    if trav_obj.len() != edge_count {
        return Err(bad(
            "diagram.traversals",
            "expected exactly one entry per edge",
        ));
    }

    let mut crossings: BTreeMap<CrossingId, Crossing> = BTreeMap::new();
    for (name, val) in crossings_obj {
        let path = format!("diagram.crossings.{name}");
        let x = xid(name, &path)?;
        let hand = hand_from_value(get(val, "hand", &path)?, &format!("{path}.hand"))?;
        let slots_val = as_array(get(val, "slots", &path)?, &format!("{path}.slots"))?;
        if slots_val.len() != 2 {
            return Err(bad(&format!("{path}.slots"), "expected two slots"));
        }
        let mut slots = [(0usize, 0usize); 2];
        for (i, s) in slots_val.iter().enumerate() {
            let spath = format!("{path}.slots[{i}]");
            let pair = as_array(s, &spath)?;
            if pair.len() != 2 {
                return Err(bad(&spath, "expected [edge id, occurrence index]"));
            }
            let e = eid(as_str(&pair[0], &spath)?, &spath)?;
            let idx = as_u64(&pair[1], &spath)? as usize;
            slots[i] = (e, idx);
        }
        crossings.insert(x, Crossing { slots, hand });
    }

    Diagram::new(vertex_count, edges, rotations, traversals, crossings)
}

// ------------------------------------------------------------------ curve

/// Serialize a curve to its canonical JSON value.
pub fn curve_to_value(c: &PlaneCurve) -> Value {
    let handedness: Map<String, Value> = c
        .handedness()
        .iter()
        .map(|(x, &h)| (x.to_string(), json!(hand_to_str(h))))
        .collect();
    json!({
        "handedness": handedness,
        "sequence": c.sequence(),
    })
}

fn sequence_from_value(v: &Value, path: &str) -> Result<Vec<u32>> {
    let arr = as_array(v, path)?;
    let mut seq = Vec::with_capacity(arr.len());
    for (i, x) in arr.iter().enumerate() {
        let n = as_u64(x, &format!("{path}[{i}]"))?;
        if n > u64::from(u32::MAX) {
            return Err(bad(&format!("{path}[{i}]"), "label out of range"));
        }
        seq.push(n as u32);
    }
    Ok(seq)
}

fn label_key(key: &str, path: &str) -> Result<u32> {
    canonical_decimal(key)
        .filter(|&n| n <= u64::from(u32::MAX))
        .map(|n| n as u32)
        .ok_or_else(|| {
            bad(
                path,
                &format!("label key \"{key}\" must be a decimal integer"),
            )
        })
}

/// Parse a curve from its JSON value.
pub fn curve_from_value(v: &Value) -> Result<PlaneCurve> {
    let seq = sequence_from_value(get(v, "sequence", "curve")?, "curve.sequence")?;
    let hands_obj = as_object(get(v, "handedness", "curve")?, "curve.handedness")?;
    let mut hands: BTreeMap<u32, Hand> = BTreeMap::new();
    for (key, val) in hands_obj {
        let path = format!("curve.handedness.{key}");
        hands.insert(label_key(key, &path)?, hand_from_value(val, &path)?);
    }
    PlaneCurve::new(seq, hands)
}

// ------------------------------------------------------------------- knot

/// Serialize a knot diagram (curve + over/under bits).
pub fn knot_to_value(k: &KnotDiagram) -> Value {
    let mut v = curve_to_value(k.curve());
    let over: Map<String, Value> = k
        .over_bits()
        .iter()
        .map(|(x, &b)| (x.to_string(), json!(b)))
        .collect();
    v.as_object_mut()
        .expect("curve value is an object")
        .insert("over".to_string(), Value::Object(over));
    v
}

/// Parse a knot diagram from its JSON value.
pub fn knot_from_value(v: &Value) -> Result<KnotDiagram> {
    let curve = curve_from_value(v)?;
    let over_obj = as_object(get(v, "over", "knot")?, "knot.over")?;
    let mut over: BTreeMap<u32, u8> = BTreeMap::new();
    for (key, val) in over_obj {
        let path = format!("knot.over.{key}");
        let bit = as_u64(val, &path)?;
        if bit > 1 {
            return Err(bad(&path, "over bit must be 0 or 1"));
        }
        over.insert(label_key(key, &path)?, bit as u8);
    }
    KnotDiagram::new(curve, over)
}

// ---------------------------------------------------------------- pattern

/// Serialize a chord-diagram pattern.
pub fn pattern_to_value(p: &ChordDiagram) -> Value {
    json!({"sequence": p.word()})
}

/// Parse a chord-diagram pattern from its JSON value.
pub fn pattern_from_value(v: &Value) -> Result<ChordDiagram> {
    let seq = sequence_from_value(get(v, "sequence", "pattern")?, "pattern.sequence")?;
    ChordDiagram::new(seq)
}

// ------------------------------------------------------- string shorthand

pub fn diagram_to_json(d: &Diagram) -> String {
    to_canonical_string(&diagram_to_value(d))
}

pub fn diagram_from_json(text: &str) -> Result<Diagram> {
    diagram_from_value(&parse_value(text)?)
}

pub fn curve_to_json(c: &PlaneCurve) -> String {
    to_canonical_string(&curve_to_value(c))
}

pub fn curve_from_json(text: &str) -> Result<PlaneCurve> {
    curve_from_value(&parse_value(text)?)
}

pub fn knot_to_json(k: &KnotDiagram) -> String {
    to_canonical_string(&knot_to_value(k))
}

pub fn knot_from_json(text: &str) -> Result<KnotDiagram> {
    knot_from_value(&parse_value(text)?)
}

pub fn pattern_to_json(p: &ChordDiagram) -> String {
    to_canonical_string(&pattern_to_value(p))
}

pub fn pattern_from_json(text: &str) -> Result<ChordDiagram> {
    pattern_from_value(&parse_value(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{convex_drawing, k33_one_crossing, trefoil_triangle};
    use crate::graph::Graph;
    use crate::moves::{random_walk, WalkLimits};

    #[test]
    fn diagram_round_trips_byte_identically() {
        let walked = random_walk(
            &convex_drawing(&Graph::complete(5), None).unwrap(),
            12,
            5,
            WalkLimits {
                max_crossings: 12,
                cycle_cap: None,
            },
        )
        .unwrap();
        for d in [
            trefoil_triangle(),
            k33_one_crossing(),
            convex_drawing(&Graph::complete(6), None).unwrap(),
            walked,
        ] {
            let text = diagram_to_json(&d);
            let parsed = diagram_from_json(&text).unwrap();
            assert_eq!(parsed, d);
            assert_eq!(diagram_to_json(&parsed), text);
        }
    }

    #[test]
    fn curve_knot_pattern_round_trips() {
        for c in [
            PlaneCurve::trefoil(),
            PlaneCurve::figure_eight(),
            PlaneCurve::circle(),
        ] {
            let text = curve_to_json(&c);
            let parsed = curve_from_json(&text).unwrap();
            assert_eq!(parsed, c);
            assert_eq!(curve_to_json(&parsed), text);
        }
        let k = KnotDiagram::alternating(PlaneCurve::trefoil()).unwrap();
        let text = knot_to_json(&k);
        let parsed = knot_from_json(&text).unwrap();
        assert_eq!(parsed.curve(), k.curve());
        assert_eq!(parsed.over_bits(), k.over_bits());
        assert_eq!(knot_to_json(&parsed), text);

        for p in [ChordDiagram::interleaved_pair(), ChordDiagram::path_three()] {
            let text = pattern_to_json(&p);
            let parsed = pattern_from_json(&text).unwrap();
            assert_eq!(parsed, p);
            assert_eq!(pattern_to_json(&parsed), text);
        }
    }

    #[test]
    fn canonical_output_is_compact_and_sorted() {
        let text = diagram_to_json(&trefoil_triangle());
        assert!(text.starts_with("{\"crossings\":"));
        assert!(!text.contains(' '));
        assert!(!text.contains('\n'));
        let i_graph = text.find("\"graph\"").unwrap();
        let i_rot = text.find("\"rotations\"").unwrap();
        let i_trav = text.find("\"traversals\"").unwrap();
        assert!(i_graph < i_rot && i_rot < i_trav);
    }

    #[test]
    fn opaque_string_ids_are_accepted() {
        // A 0-crossing triangle with non-numeric ids everywhere.
        let text = r#"{
            "graph": {
                "vertices": ["left", "right", "top"],
                "edges": {"base": ["left", "right"],
                          "rise": ["right", "top"],
                          "fall": ["top", "left"]}
            },
            "rotations": {"left": [["base", 0], ["fall", 1]],
                          "right": [["rise", 0], ["base", 1]],
                          "top": [["fall", 0], ["rise", 1]]},
            "traversals": {"base": [], "rise": [], "fall": []},
            "crossings": {}
        }"#;
        let d = diagram_from_json(text).unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.crossing_count(), 0);
        assert!(d.validate().is_empty());
        // Re-emission is canonical (numeric ids) and stable.
        let out = diagram_to_json(&d);
        let again = diagram_from_json(&out).unwrap();
        assert_eq!(again, d);
        assert_eq!(diagram_to_json(&again), out);
    }

    #[test]
    fn parse_failures_name_the_offending_path() {
        let err = diagram_from_json("{}").unwrap_err();
        assert!(err.to_string().contains("graph"));
        let err = curve_from_json(r#"{"sequence": [1, 1], "handedness": {"1": "X"}}"#).unwrap_err();
        assert!(err.to_string().contains("handedness"));
        let err = curve_from_json(r#"{"sequence": [1], "handedness": {}}"#).unwrap_err();
        let msg = err.to_string();
        assert!(!msg.is_empty());
        // Structural validation still runs on parsed diagrams: a crossing id
        // referenced once is rejected.
        let text = r#"{
            "graph": {"vertices": ["0", "1"], "edges": {"0": ["0", "1"]}},
            "rotations": {"0": [["0", 0]], "1": [["0", 1]]},
            "traversals": {"0": ["7"]},
            "crossings": {"7": {"hand": "L", "slots": [["0", 0], ["0", 1]]}}
        }"#;
        assert!(diagram_from_json(text).is_err());
    }

    #[test]
    fn genus_errors_surface_in_validate_not_parse() {
        // Flip the k33 fixture's crossing hand: still structurally sound,
        // but the face census detects genus 1. Parsing must succeed so the
        // validation report can say why the diagram is bad.
        let good = k33_one_crossing();
        let text = diagram_to_json(&good);
        let flipped = text.replace("\"hand\":\"R\"", "\"hand\":\"L\"");
        assert_ne!(text, flipped);
        let parsed = diagram_from_json(&flipped).unwrap();
        let report = parsed.validate();
        assert!(report.iter().any(|m| m.contains("Euler")), "{report:?}");
    }
}
