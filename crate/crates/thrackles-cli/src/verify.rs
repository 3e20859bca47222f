//! The `verify` subcommand: re-check every invariant of an artifact.
//!
//! Verification is independent of construction: it re-derives each claim
//! from the document itself and reports the first counterexample by name
//! (the offending class and edge pair) rather than just a boolean.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde_json::{json, Value};

use thrackles::convex::{classify_chords, verify_walecki, CircularRelation};
use thrackles::geometry::{one_bend_pair_intersects, SegmentRelation};
use thrackles::graph::{complete_graph, is_star_forest, planarity_check, Edge, Graph};
use thrackles::json as tj;
use thrackles::linear::{classify_pair, LayoutKind, PairRelation, TwoTrackRelation, VertexOrdering};

use crate::{io_util, report, solve, CliResult, Failure};

fn fmt_edge(e: Edge) -> String {
    format!("({},{})", e.0, e.1)
}

/// Check every same-class chord pair against a forbidden circular relation.
fn check_circular_classes(
    pi: &VertexOrdering,
    classes: &[Vec<Edge>],
    forbidden: CircularRelation,
    rule: &str,
) -> CliResult {
    for (ci, class) in classes.iter().enumerate() {
        for (i, &e) in class.iter().enumerate() {
            for &f in &class[i + 1..] {
                if classify_chords(pi, e, f)? == forbidden {
                    return Err(Failure::verification(format!(
                        "class {ci}: edges {} and {} are {rule}",
                        fmt_edge(e),
                        fmt_edge(f)
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn verify_value(v: &Value) -> CliResult {
    match tj::artifact_type(v) {
        None => {
            // A plain graph document: decoding revalidates the edge list.
            tj::graph_from_value(v)?;
            Ok(())
        }
        Some("convex_partition") => {
            let (pi, p) = tj::convex_partition_from_value(v)?;
            check_circular_classes(
                &pi,
                p.classes(),
                CircularRelation::Disjoint,
                "disjoint in the circular order, so the class is not a convex thrackle",
            )
        }
        Some("linear_layout") => {
            let l = tj::linear_layout_from_value(v)?;
            let (forbidden, rule) = match l.kind {
                LayoutKind::Queue => (PairRelation::Nest, "nested, so the class is not a queue"),
                LayoutKind::Stack => (PairRelation::Cross, "crossing, so the class is not a stack"),
            };
            for (ci, class) in l.classes.classes().iter().enumerate() {
                for (i, &e) in class.iter().enumerate() {
                    for &f in &class[i + 1..] {
                        if classify_pair(&l.ordering, e, f)? == forbidden {
                            return Err(Failure::verification(format!(
                                "class {ci}: edges {} and {} are {rule}",
                                fmt_edge(e),
                                fmt_edge(f)
                            )));
                        }
                    }
                }
            }
            Ok(())
        }
        Some("track_layout") => verify_track_layout(v),
        Some("two_track") => {
            let (d, classes) = tj::two_track_from_value(v)?;
            let Some((kind, p)) = classes else {
                return Ok(());
            };
            let g = Graph::new(d.n(), d.edges.clone())?;
            p.validate_against(&g)?;
            let (forbidden, rule) = match kind.as_str() {
                "thrackle" => (TwoTrackRelation::Disjoint, "disjoint, so the class is not a 2-track thrackle"),
                "noncrossing" => (TwoTrackRelation::Cross, "crossing, so the class is not noncrossing"),
                other => {
                    return Err(Failure::schema(format!(
                        "unknown two_track kind {other:?}; expected \"thrackle\" or \"noncrossing\""
                    )))
                }
            };
            for (ci, class) in p.classes().iter().enumerate() {
                for (i, &e) in class.iter().enumerate() {
                    for &f in &class[i + 1..] {
                        if d.relation(e, f) == forbidden {
                            return Err(Failure::verification(format!(
                                "class {ci}: edges {} and {} are {rule}",
                                fmt_edge(e),
                                fmt_edge(f)
                            )));
                        }
                    }
                }
            }
            Ok(())
        }
        Some("drawing") => verify_drawing(v),
        Some("subdivision_drawing") => verify_subdivision(v),
        Some("one_bend") => {
            let d = tj::one_bend_from_value(v)?;
            let edges = d.graph.edges();
            for e in 0..edges.len() {
                for f in e + 1..edges.len() {
                    if !one_bend_pair_intersects(&d, e, f)? {
                        return Err(Failure::verification(format!(
                            "edges {} and {} neither share an endpoint nor cross",
                            fmt_edge(edges[e]),
                            fmt_edge(edges[f])
                        )));
                    }
                }
            }
            Ok(())
        }
        Some("cycle_partition") => {
            let (n, p) = tj::cycle_partition_from_value(v)?;
            verify_walecki(n, &p)?;
            Ok(())
        }
        Some("convex_coloring") => {
            let (n, p) = tj::coloring_classes_from_value(v)?;
            p.validate_against(&complete_graph(n)?)?;
            let pi = VertexOrdering::identity(n);
            check_circular_classes(
                &pi,
                p.classes(),
                CircularRelation::Disjoint,
                "disjoint in the circular order, so the class is not a convex thrackle",
            )
        }
        Some("star_forest_partition") => {
            let n = field_usize(v, "n")?;
            let p = tj::classes_from_value(
                v.get("classes")
                    .ok_or_else(|| Failure::schema("missing field \"classes\""))?,
            )?;
            let all: Vec<Edge> = p.classes().iter().flatten().copied().collect();
            Graph::new(n, all)?;
            for (ci, class) in p.classes().iter().enumerate() {
                if !is_star_forest(n, class) {
                    return Err(Failure::verification(format!(
                        "class {ci} is not a star forest"
                    )));
                }
            }
            Ok(())
        }
        Some("compatible_bijections") => verify_compatible_bijections(v),
        Some("solve_result") => solve::verify_solve_result(v),
        Some("bounds_report") => {
            let nmax = field_usize(v, "nmax")?;
            let oracle_nmax = field_usize(v, "oracle_nmax")?;
            let fresh = report::bounds(nmax, oracle_nmax, 1)?;
            if &fresh != v {
                return Err(Failure::verification(
                    "bounds_report does not match a fresh regeneration",
                ));
            }
            Ok(())
        }
        Some("verify_report") => {
            let results = v
                .get("results")
                .and_then(Value::as_array)
                .ok_or_else(|| Failure::schema("verify_report missing array \"results\""))?;
            for r in results {
                if r.get("ok").and_then(Value::as_bool) != Some(true) {
                    let file = r.get("file").and_then(Value::as_str).unwrap_or("?");
                    return Err(Failure::verification(format!(
                        "verify_report records a failure for {file}"
                    )));
                }
            }
            Ok(())
        }
        Some(other) => Err(Failure::schema(format!(
            "unknown artifact type {other:?}"
        ))),
    }
}

fn field_usize(v: &Value, key: &str) -> CliResult<usize> {
    Ok(v.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Failure::schema(format!("missing integer field {key:?}")))? as usize)
}

fn verify_track_layout(v: &Value) -> CliResult {
    let t = tj::track_layout_from_value(v)?;
    let n: usize = t.tracks.iter().map(Vec::len).sum();
    let g = Graph::new(n, t.colors.keys().copied())?;
    // Position of each vertex: (track index, index within track), each exactly once.
    let mut pos: Vec<Option<(usize, usize)>> = vec![None; n];
    for (ti, track) in t.tracks.iter().enumerate() {
        for (i, &vtx) in track.iter().enumerate() {
            if vtx >= n || pos[vtx].is_some() {
                return Err(Failure::verification(format!(
                    "tracks do not partition the vertices (vertex {vtx})"
                )));
            }
            pos[vtx] = Some((ti, i));
        }
    }
    let lookup = |vtx: usize| pos[vtx].expect("all vertices placed");
    for (&(u, w), _) in &t.colors {
        if lookup(u).0 == lookup(w).0 {
            return Err(Failure::verification(format!(
                "edge {} has both endpoints on track {}",
                fmt_edge((u, w)),
                lookup(u).0
            )));
        }
    }
    // Same color + same track pair must not X-cross.
    let edges: Vec<(Edge, usize)> = t.colors.iter().map(|(&e, &c)| (e, c)).collect();
    for (i, &(e, ec)) in edges.iter().enumerate() {
        for &(f, fc) in &edges[i + 1..] {
            if ec != fc {
                continue;
            }
            let (mut e1, mut e2) = (lookup(e.0), lookup(e.1));
            if e1.0 > e2.0 {
                std::mem::swap(&mut e1, &mut e2);
            }
            let (mut f1, mut f2) = (lookup(f.0), lookup(f.1));
            if f1.0 > f2.0 {
                std::mem::swap(&mut f1, &mut f2);
            }
            if (e1.0, e2.0) != (f1.0, f2.0) {
                continue;
            }
            if e1.1 != f1.1 && e2.1 != f2.1 && (e1.1 < f1.1) != (e2.1 < f2.1) {
                return Err(Failure::verification(format!(
                    "color {ec}: edges {} and {} form an X-crossing between tracks {} and {}",
                    fmt_edge(e),
                    fmt_edge(f),
                    e1.0,
                    e2.0
                )));
            }
        }
    }
    // Cross-check the aggregate validator; any discrepancy is a bug worth failing on.
    if !thrackles::linear::validate_track_layout(&g, &t) {
        return Err(Failure::verification(
            "track layout fails aggregate validation",
        ));
    }
    Ok(())
}

fn verify_drawing(v: &Value) -> CliResult {
    let (d, colors) = tj::drawing_from_value(v)?;
    let claim = v.get("claim").and_then(Value::as_str);
    let Some(claim) = claim else {
        return Ok(()); // a bare drawing: construction already validated it
    };
    let colors = colors.ok_or_else(|| {
        Failure::schema("drawing has a \"claim\" but no \"colors\" to check it against")
    })?;
    let edges = d.graph().edges();
    let (forbidden, rule) = match claim {
        "noncrossing" => (SegmentRelation::ProperCrossing, "cross"),
        "thrackle" => (SegmentRelation::Disjoint, "are disjoint"),
        other => {
            return Err(Failure::schema(format!(
                "unknown drawing claim {other:?}; expected \"noncrossing\" or \"thrackle\""
            )))
        }
    };
    for e in 0..edges.len() {
        for f in e + 1..edges.len() {
            if colors[e] == colors[f] && d.relation(e, f)? == forbidden {
                return Err(Failure::verification(format!(
                    "color {}: edges {} and {} {rule}",
                    colors[e],
                    fmt_edge(edges[e]),
                    fmt_edge(edges[f])
                )));
            }
        }
    }
    Ok(())
}

fn verify_subdivision(v: &Value) -> CliResult {
    let s = tj::subdivision_from_value(v)?;
    let edges = s.drawing.graph().edges();
    let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut seen = vec![false; edges.len()];
    let mut classes: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (side, list) in [(0usize, &s.blue), (1, &s.red)] {
        for &e in list {
            let &i = index.get(&e).ok_or_else(|| {
                Failure::schema(format!("listed edge {} is not in the drawing", fmt_edge(e)))
            })?;
            if seen[i] {
                return Err(Failure::verification(format!(
                    "edge {} appears in both color classes",
                    fmt_edge(e)
                )));
            }
            seen[i] = true;
            classes[side].push(i);
        }
    }
    if let Some(missing) = seen.iter().position(|&b| !b) {
        return Err(Failure::verification(format!(
            "edge {} belongs to neither color class",
            fmt_edge(edges[missing])
        )));
    }
    for (name, class) in [("blue", &classes[0]), ("red", &classes[1])] {
        for (a, &e) in class.iter().enumerate() {
            for &f in &class[a + 1..] {
                if s.drawing.relation(e, f)? == SegmentRelation::Disjoint {
                    return Err(Failure::verification(format!(
                        "{name} edges {} and {} are disjoint, so the class is not a thrackle",
                        fmt_edge(edges[e]),
                        fmt_edge(edges[f])
                    )));
                }
            }
        }
    }
    Ok(())
}

fn verify_compatible_bijections(v: &Value) -> CliResult {
    let k = field_usize(v, "k")?;
    let copies_v = v
        .get("copies")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::schema("missing array field \"copies\""))?;
    let union_g = tj::graph_from_value(
        v.get("union")
            .ok_or_else(|| Failure::schema("missing field \"union\""))?,
    )?;
    if copies_v.len() != k {
        return Err(Failure::verification(format!(
            "expected {k} copies, found {}",
            copies_v.len()
        )));
    }
    let copies: Vec<Graph> = copies_v
        .iter()
        .map(tj::graph_from_value)
        .collect::<thrackles::Result<_>>()?;
    let n = union_g.n();
    if n < 3 {
        return Err(Failure::verification(format!(
            "union graph has only {n} vertices"
        )));
    }
    let triangulation_m = 3 * (n - 2);
    let mut merged: Vec<Edge> = Vec::new();
    for (i, c) in copies.iter().enumerate() {
        if c.n() != n {
            return Err(Failure::verification(format!(
                "copy {i} has {} vertices, union has {n}",
                c.n()
            )));
        }
        if c.m() != triangulation_m {
            return Err(Failure::verification(format!(
                "copy {i} has {} edges, a triangulation on {n} vertices has {triangulation_m}",
                c.m()
            )));
        }
        if !planarity_check(c) {
            return Err(Failure::verification(format!("copy {i} is not planar")));
        }
        merged.extend_from_slice(c.edges());
    }
    for i in 0..copies.len() {
        for j in i + 1..copies.len() {
            let other: std::collections::BTreeSet<Edge> =
                copies[j].edges().iter().copied().collect();
            if let Some(&shared) = copies[i].edges().iter().find(|e| other.contains(e)) {
                return Err(Failure::verification(format!(
                    "copies {i} and {j} share edge {}",
                    fmt_edge(shared)
                )));
            }
        }
    }
    merged.sort_unstable();
    if merged.windows(2).any(|w| w[0] == w[1]) || merged != union_g.edges() {
        return Err(Failure::verification(
            "union edge set is not the disjoint union of the copies",
        ));
    }
    Ok(())
}

/// Verify a batch of files (or stdin when the list is empty), emit a
/// verify_report, and fail with the first failing file's code.
pub fn run_batch(files: &[PathBuf], jobs: usize) -> CliResult {
    let verify_one = |path: Option<&PathBuf>| -> Result<(), Failure> {
        let v = io_util::read_value(path.map(|p| p.as_path()))?;
        verify_value(&v)
    };
    let outcomes: Vec<(String, Result<(), Failure>)> = if files.is_empty() {
        vec![("-".to_string(), verify_one(None))]
    } else if jobs <= 1 || files.len() == 1 {
        files
            .iter()
            .map(|f| (f.display().to_string(), verify_one(Some(f))))
            .collect()
    } else {
        let jobs = jobs.min(files.len());
        let chunk = files.len().div_ceil(jobs);
        let mut out: Vec<Option<(String, Result<(), Failure>)>> = Vec::new();
        out.resize_with(files.len(), || None);
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (w, slice) in files.chunks(chunk).enumerate() {
                handles.push((
                    w * chunk,
                    scope.spawn(move || {
                        slice
                            .iter()
                            .map(|f| (f.display().to_string(), verify_one(Some(f))))
                            .collect::<Vec<_>>()
                    }),
                ));
            }
            for (start, h) in handles {
                for (i, r) in h.join().expect("verify worker panicked").into_iter().enumerate() {
                    out[start + i] = Some(r);
                }
            }
        });
        out.into_iter().map(|r| r.expect("all slots filled")).collect()
    };
    let results: Vec<Value> = outcomes
        .iter()
        .map(|(file, r)| match r {
            Ok(()) => json!({"file": file, "ok": true}),
            Err(f) => json!({"file": file, "ok": false, "error": f.message}),
        })
        .collect();
    io_util::emit(&json!({"type": "verify_report", "results": results}));
    if let Some((file, Err(f))) = outcomes.iter().find(|(_, r)| r.is_err()) {
        return Err(Failure {
            code: f.code,
            message: format!("{file}: {}", f.message),
        });
    }
    Ok(())
}
