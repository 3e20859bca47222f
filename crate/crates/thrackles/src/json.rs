//! JSON artifact schemas. One document per artifact; all maps are ordered,
//! so serialization is deterministic. Every `*_from_value` routine
//! revalidates through the library constructors, so a document that parses
//! is also structurally sound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::convex::UpperColoring;
use crate::error::Error;
use crate::geometry::{Drawing, LayeredDrawing, OneBendDrawing, Point, SubdivisionDrawing};
use crate::graph::{Edge, EdgePartition, Graph};
use crate::linear::{LayoutKind, LinearLayout, TrackLayout, TwoTrackDrawing, VertexOrdering};
use crate::numbers::Q;
use crate::Result;

pub fn rational_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rational_from_str(s: &str) -> Result<Q> {
    let bad = || Error::Schema(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

fn point_to_value(p: &Point) -> Value {
    json!([rational_to_string(&p.0), rational_to_string(&p.1)])
}

fn point_from_value(v: &Value) -> Result<Point> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Schema("point must be a [x, y] pair".into()))?;
    let coord = |v: &Value| -> Result<Q> {
        rational_from_str(v.as_str().ok_or_else(|| Error::Schema("coordinate must be a string".into()))?)
    };
    Ok((coord(&arr[0])?, coord(&arr[1])?))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Schema(format!("missing or bad integer field {key:?}")))
}

pub fn edge_to_value(e: &Edge) -> Value {
    json!([e.0, e.1])
}

pub fn edges_to_value(edges: &[Edge]) -> Value {
    Value::Array(edges.iter().map(edge_to_value).collect())
}

pub fn edge_from_value(v: &Value) -> Result<(usize, usize)> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Schema("edge must be a [u, v] pair".into()))?;
    let u = arr[0].as_u64().ok_or_else(|| Error::Schema("edge endpoint must be an integer".into()))?;
    let v = arr[1].as_u64().ok_or_else(|| Error::Schema("edge endpoint must be an integer".into()))?;
    Ok((u as usize, v as usize))
}

pub fn edges_from_value(v: &Value) -> Result<Vec<(usize, usize)>> {
    v.as_array()
        .ok_or_else(|| Error::Schema("expected an edge array".into()))?
        .iter()
        .map(edge_from_value)
        .collect()
}

fn usizes_from_value(v: &Value) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| Error::Schema("expected an integer array".into()))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Schema("expected an integer".into()))
        })
        .collect()
}

pub fn classes_to_value(p: &EdgePartition) -> Value {
    Value::Array(p.classes().iter().map(|c| edges_to_value(c)).collect())
}

pub fn classes_from_value(v: &Value) -> Result<EdgePartition> {
    let raw = v
        .as_array()
        .ok_or_else(|| Error::Schema("classes must be an array".into()))?
        .iter()
        .map(edges_from_value)
        .collect::<Result<Vec<_>>>()?;
    EdgePartition::new(raw)
}

/// `{"n": ..., "edges": [[u,v], ...]}` — the generator output schema.
pub fn graph_to_value(g: &Graph) -> Value {
    json!({"n": g.n(), "edges": edges_to_value(g.edges())})
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    let n = usize_field(v, "n")?;
    let edges = edges_from_value(
        v.get("edges")
            .ok_or_else(|| Error::Schema("missing field \"edges\"".into()))?,
    )?;
    Graph::new(n, edges)
}

/// Partition of chords into classes under a circular vertex ordering.
pub fn convex_partition_to_value(pi: &VertexOrdering, p: &EdgePartition) -> Value {
    json!({
        "type": "convex_partition",
        "n": pi.n(),
        "order": pi.order(),
        "classes": classes_to_value(p),
    })
}

pub fn convex_partition_from_value(v: &Value) -> Result<(VertexOrdering, EdgePartition)> {
    let order = usizes_from_value(
        v.get("order").ok_or_else(|| Error::Schema("missing field \"order\"".into()))?,
    )?;
    let pi = VertexOrdering::new(order)?;
    let classes = classes_from_value(
        v.get("classes").ok_or_else(|| Error::Schema("missing field \"classes\"".into()))?,
    )?;
    Ok((pi, classes))
}

pub fn linear_layout_to_value(l: &LinearLayout) -> Value {
    json!({
        "type": "linear_layout",
        "kind": match l.kind { LayoutKind::Queue => "queue", LayoutKind::Stack => "stack" },
        "n": l.ordering.n(),
        "order": l.ordering.order(),
        "classes": classes_to_value(&l.classes),
    })
}

pub fn linear_layout_from_value(v: &Value) -> Result<LinearLayout> {
    let kind = match v.get("kind").and_then(Value::as_str) {
        Some("queue") => LayoutKind::Queue,
        Some("stack") => LayoutKind::Stack,
        _ => return Err(Error::Schema("layout kind must be \"queue\" or \"stack\"".into())),
    };
    let order = usizes_from_value(
        v.get("order").ok_or_else(|| Error::Schema("missing field \"order\"".into()))?,
    )?;
    let classes = classes_from_value(
        v.get("classes").ok_or_else(|| Error::Schema("missing field \"classes\"".into()))?,
    )?;
    Ok(LinearLayout {
        ordering: VertexOrdering::new(order)?,
        classes,
        kind,
    })
}

pub fn track_layout_to_value(t: &TrackLayout) -> Value {
    let colors: Vec<Value> = t
        .colors
        .iter()
        .map(|(e, c)| json!([edge_to_value(e), c]))
        .collect();
    json!({
        "type": "track_layout",
        "tracks": t.tracks,
        "colors": colors,
    })
}

pub fn track_layout_from_value(v: &Value) -> Result<TrackLayout> {
    let tracks = v
        .get("tracks")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing field \"tracks\"".into()))?
        .iter()
        .map(usizes_from_value)
        .collect::<Result<Vec<_>>>()?;
    let mut colors = BTreeMap::new();
    for item in v
        .get("colors")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing field \"colors\"".into()))?
    {
        let pair = item
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Schema("color entry must be [[u,v], class]".into()))?;
        let (u, w) = edge_from_value(&pair[0])?;
        if u >= w {
            return Err(Error::Schema("edge must satisfy u < v".into()));
        }
        let c = pair[1]
            .as_u64()
            .ok_or_else(|| Error::Schema("class must be an integer".into()))? as usize;
        if colors.insert((u, w), c).is_some() {
            return Err(Error::Schema(format!("duplicate edge ({u},{w})")));
        }
    }
    Ok(TrackLayout { tracks, colors })
}

pub fn two_track_to_value(d: &TwoTrackDrawing, classes: Option<(&str, &EdgePartition)>) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("type".into(), json!("two_track"));
    obj.insert("top".into(), json!(d.top));
    obj.insert("bottom".into(), json!(d.bottom));
    obj.insert("edges".into(), edges_to_value(&d.edges));
    if let Some((kind, p)) = classes {
        obj.insert("kind".into(), json!(kind));
        obj.insert("classes".into(), classes_to_value(p));
    }
    Value::Object(obj)
}

pub fn two_track_from_value(
    v: &Value,
) -> Result<(TwoTrackDrawing, Option<(String, EdgePartition)>)> {
    let top = usizes_from_value(
        v.get("top").ok_or_else(|| Error::Schema("missing field \"top\"".into()))?,
    )?;
    let bottom = usizes_from_value(
        v.get("bottom").ok_or_else(|| Error::Schema("missing field \"bottom\"".into()))?,
    )?;
    let edges = edges_from_value(
        v.get("edges").ok_or_else(|| Error::Schema("missing field \"edges\"".into()))?,
    )?;
    let drawing = TwoTrackDrawing::new(top, bottom, edges)?;
    let classes = match (v.get("kind"), v.get("classes")) {
        (Some(k), Some(c)) => {
            let kind = k
                .as_str()
                .ok_or_else(|| Error::Schema("kind must be a string".into()))?
                .to_string();
            Some((kind, classes_from_value(c)?))
        }
        (None, None) => None,
        _ => return Err(Error::Schema("kind and classes must appear together".into())),
    };
    Ok((drawing, classes))
}

/// `{"points": {"0": ["num/den", "num/den"], ...}, "edges": ..., "colors": ...}`
pub fn drawing_to_value(d: &Drawing, colors: Option<&[usize]>) -> Value {
    let points: BTreeMap<String, Value> = d
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (i.to_string(), point_to_value(p)))
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("type".into(), json!("drawing"));
    obj.insert("points".into(), json!(points));
    obj.insert("edges".into(), edges_to_value(d.graph().edges()));
    if let Some(c) = colors {
        obj.insert("colors".into(), json!(c));
    }
    Value::Object(obj)
}

pub fn drawing_from_value(v: &Value) -> Result<(Drawing, Option<Vec<usize>>)> {
    let pts = v
        .get("points")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Schema("missing object field \"points\"".into()))?;
    let n = pts.len();
    let mut points = vec![None; n];
    for (k, pv) in pts {
        let idx: usize = k
            .parse()
            .map_err(|_| Error::Schema(format!("bad vertex key {k:?}")))?;
        if idx >= n {
            return Err(Error::Schema(format!(
                "vertex key {idx} out of range for {n} points"
            )));
        }
        points[idx] = Some(point_from_value(pv)?);
    }
    let points: Vec<Point> = points
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Schema("vertex keys must be 0..n".into()))?;
    let edges = edges_from_value(
        v.get("edges").ok_or_else(|| Error::Schema("missing field \"edges\"".into()))?,
    )?;
    let graph = Graph::new(n, edges)?;
    let colors = match v.get("colors") {
        Some(c) => {
            let c = usizes_from_value(c)?;
            if c.len() != graph.m() {
                return Err(Error::Schema("colors length must match edge count".into()));
            }
            Some(c)
        }
        None => None,
    };
    Ok((Drawing::new(graph, points)?, colors))
}

pub fn layered_drawing_to_value(l: &LayeredDrawing) -> Value {
    drawing_to_value(&l.drawing, Some(&l.colors))
}

pub fn subdivision_to_value(s: &SubdivisionDrawing) -> Value {
    let mut obj = match drawing_to_value(&s.drawing, None) {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    obj.insert("type".into(), json!("subdivision_drawing"));
    obj.insert("original".into(), json!(s.n));
    obj.insert("blue".into(), edges_to_value(&s.blue));
    obj.insert("red".into(), edges_to_value(&s.red));
    Value::Object(obj)
}

pub fn subdivision_from_value(v: &Value) -> Result<SubdivisionDrawing> {
    let (drawing, _) = drawing_from_value(v)?;
    let n = usize_field(v, "original")?;
    let blue = edges_from_value(
        v.get("blue").ok_or_else(|| Error::Schema("missing field \"blue\"".into()))?,
    )?;
    let red = edges_from_value(
        v.get("red").ok_or_else(|| Error::Schema("missing field \"red\"".into()))?,
    )?;
    Ok(SubdivisionDrawing { n, drawing, blue, red })
}

pub fn one_bend_to_value(d: &OneBendDrawing) -> Value {
    json!({
        "type": "one_bend",
        "n": d.graph.n(),
        "edges": edges_to_value(d.graph.edges()),
        "vertices": Value::Array(d.vertices.iter().map(point_to_value).collect()),
        "bends": Value::Array(d.bends.iter().map(point_to_value).collect()),
    })
}

pub fn one_bend_from_value(v: &Value) -> Result<OneBendDrawing> {
    let n = usize_field(v, "n")?;
    let edges = edges_from_value(
        v.get("edges").ok_or_else(|| Error::Schema("missing field \"edges\"".into()))?,
    )?;
    let graph = Graph::new(n, edges)?;
    let vertices = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing field \"vertices\"".into()))?
        .iter()
        .map(point_from_value)
        .collect::<Result<Vec<_>>>()?;
    let bends = v
        .get("bends")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("missing field \"bends\"".into()))?
        .iter()
        .map(point_from_value)
        .collect::<Result<Vec<_>>>()?;
    if vertices.len() != graph.n() || bends.len() != graph.m() {
        return Err(Error::Schema("vertex/bend counts do not match the graph".into()));
    }
    Ok(OneBendDrawing { graph, vertices, bends })
}

/// Cycle partition artifact (Hamiltonian decomposition shape).
pub fn cycle_partition_to_value(n: usize, p: &EdgePartition) -> Value {
    json!({
        "type": "cycle_partition",
        "n": n,
        "classes": classes_to_value(p),
    })
}

pub fn cycle_partition_from_value(v: &Value) -> Result<(usize, EdgePartition)> {
    let n = usize_field(v, "n")?;
    let classes = classes_from_value(
        v.get("classes").ok_or_else(|| Error::Schema("missing field \"classes\"".into()))?,
    )?;
    Ok((n, classes))
}

/// Iterated circulant coloring artifact; the identity circular order is
/// implicit.
pub fn coloring_to_value(n: usize, u: &UpperColoring) -> Value {
    let steps: Vec<Value> = u
        .steps
        .iter()
        .map(|s| {
            json!({
                "n": s.n,
                "distance": s.ell,
                "classes": s.class_count,
                "residual_is_nominal": s.residual_is_nominal,
            })
        })
        .collect();
    json!({
        "type": "convex_coloring",
        "n": n,
        "classes": classes_to_value(&u.partition),
        "steps": steps,
        "base_class_used": u.base_class_used,
        "terminal_classes": u.terminal_classes,
    })
}

pub fn coloring_classes_from_value(v: &Value) -> Result<(usize, EdgePartition)> {
    let n = usize_field(v, "n")?;
    let classes = classes_from_value(
        v.get("classes").ok_or_else(|| Error::Schema("missing field \"classes\"".into()))?,
    )?;
    Ok((n, classes))
}

/// Oracle output: parameter name, optimal value, certificate, node count.
pub fn solve_result_to_value(parameter: &str, value: usize, certificate: Value, nodes: u64) -> Value {
    json!({
        "type": "solve_result",
        "parameter": parameter,
        "value": value,
        "certificate": certificate,
        "nodes": nodes,
    })
}

/// Type tag of an artifact; plain graphs have no tag.
pub fn artifact_type(v: &Value) -> Option<&str> {
    v.get("type").and_then(Value::as_str)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::{complete_matching_partition, walecki_partition};
    use crate::geometry::one_bend_drawing;
    use crate::graph::complete_graph;
    use crate::linear::greedy_queue_assign;
    use crate::numbers::q;

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&q(3, 4)), "3/4");
        assert_eq!(rational_to_string(&q(-6, 8)), "-3/4");
        assert_eq!(rational_from_str("3/4").unwrap(), q(3, 4));
        assert_eq!(rational_from_str("5").unwrap(), q(5, 1));
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }

    #[test]
    fn graph_roundtrip() {
        let g = complete_graph(4).unwrap();
        let v = graph_to_value(&g);
        let back = graph_from_value(&v).unwrap();
        assert_eq!(g, back);
        assert_eq!(serde_json::to_string(&v).unwrap(), serde_json::to_string(&graph_to_value(&back)).unwrap());
        assert!(graph_from_value(&serde_json::json!({"n": 2, "edges": [[0, 0]]})).is_err());
    }

    #[test]
    fn convex_partition_roundtrip() {
        let (pi, p) = complete_matching_partition(7).unwrap();
        let v = convex_partition_to_value(&pi, &p);
        let (pi2, p2) = convex_partition_from_value(&v).unwrap();
        assert_eq!(pi.order(), pi2.order());
        assert_eq!(p.classes(), p2.classes());
    }

    #[test]
    fn layout_roundtrip() {
        let g = complete_graph(4).unwrap();
        let layout = greedy_queue_assign(&g, &VertexOrdering::identity(4)).unwrap();
        let v = linear_layout_to_value(&layout);
        let back = linear_layout_from_value(&v).unwrap();
        assert_eq!(layout.classes.classes(), back.classes.classes());
    }

    #[test]
    fn drawing_roundtrip() {
        use crate::numbers::q_int;
        let g = complete_graph(3).unwrap();
        let d = Drawing::new(
            g,
            vec![
                (q_int(0), q_int(0)),
                (q_int(4), q_int(0)),
                (q(1, 2), q_int(3)),
            ],
        )
        .unwrap();
        let v = drawing_to_value(&d, None);
        let (back, colors) = drawing_from_value(&v).unwrap();
        assert!(colors.is_none());
        assert_eq!(back.points(), d.points());
        // serialized form is deterministic
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            serde_json::to_string(&drawing_to_value(&back, None)).unwrap()
        );
    }

    #[test]
    fn one_bend_roundtrip() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = one_bend_drawing(&g).unwrap();
        let v = one_bend_to_value(&d);
        let back = one_bend_from_value(&v).unwrap();
        assert_eq!(back.bends, d.bends);
    }

    #[test]
    fn cycle_partition_roundtrip() {
        let p = walecki_partition(7).unwrap();
        let v = cycle_partition_to_value(7, &p);
        let (n, back) = cycle_partition_from_value(&v).unwrap();
        assert_eq!(n, 7);
        assert_eq!(back.classes(), p.classes());
    }
}
