//! The `solve` subcommand: exact solvers with self-contained certificates.
//!
//! Each result embeds the input graph inside the certificate so `verify`
//! can re-check the claim from the document alone. Node counts are
//! deterministic for a fixed `--jobs`; wall-clock time appears only under
//! `--timings` because it can never be byte-stable.

use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use thrackles::graph::{arboricity, Graph};
use thrackles::json::{graph_to_value, solve_result_to_value};
use thrackles::oracle::{
    antithickness_bounds, book_thickness_exact_jobs, complete_antithickness_bounds,
    convex_antithickness_exact_jobs, queue_number_exact_jobs, thickness_lower_by_density,
    two_track_thickness_exact, OrderResult,
};

use crate::{io_util, CliResult, Failure};

fn order_certificate(g: &Graph, r: &OrderResult) -> Value {
    json!({
        "graph": graph_to_value(g),
        "order": r.order,
        "classes": Value::Array(
            r.classes
                .iter()
                .map(|c| thrackles::json::edges_to_value(c))
                .collect(),
        ),
    })
}

pub fn run(
    parameter: &str,
    input: Option<&Path>,
    budget: u64,
    cap: usize,
    n_flag: Option<usize>,
    timings: bool,
    jobs: usize,
) -> CliResult {
    let started = Instant::now();
    let (value, certificate, nodes) = match parameter {
        "convex-antithickness" => {
            let g = io_util::read_graph(input)?;
            let r = convex_antithickness_exact_jobs(&g, budget, jobs)?;
            (r.value, order_certificate(&g, &r), r.nodes)
        }
        "book-thickness" => {
            let g = io_util::read_graph(input)?;
            let r = book_thickness_exact_jobs(&g, budget, jobs)?;
            (r.value, order_certificate(&g, &r), r.nodes)
        }
        "queue-number" => {
            let g = io_util::read_graph(input)?;
            let r = queue_number_exact_jobs(&g, jobs)?;
            (r.value, order_certificate(&g, &r), r.nodes)
        }
        "two-track-thickness" => {
            let g = io_util::read_graph(input)?;
            let r = two_track_thickness_exact(&g)?;
            (
                r.value,
                json!({
                    "graph": graph_to_value(&g),
                    "top": r.top,
                    "bottom": r.bottom,
                }),
                r.nodes,
            )
        }
        "arboricity" => {
            let g = io_util::read_graph(input)?;
            let value = arboricity(&g, cap)?;
            (value, json!({"graph": graph_to_value(&g), "cap": cap}), 0)
        }
        "thickness-lower" => {
            let g = io_util::read_graph(input)?;
            let value = thickness_lower_by_density(&g)?;
            (value, json!({"graph": graph_to_value(&g)}), 0)
        }
        "antithickness-bounds" => {
            let g = io_util::read_graph(input)?;
            let (lower, upper) = antithickness_bounds(&g)?;
            (
                upper,
                json!({"graph": graph_to_value(&g), "lower": lower, "upper": upper}),
                0,
            )
        }
        "complete-antithickness" => {
            let n = n_flag.ok_or_else(|| {
                Failure::schema("solve complete-antithickness requires --n <size>")
            })?;
            let (lower, upper) = complete_antithickness_bounds(n)?;
            (upper, json!({"n": n, "lower": lower, "upper": upper}), 0)
        }
        other => {
            return Err(Failure::schema(format!(
                "unknown parameter {other:?}; see `thrackles solve --help`"
            )))
        }
    };
    let mut doc = solve_result_to_value(parameter, value, certificate, nodes);
    if timings {
        doc.as_object_mut()
            .expect("solve results are objects")
            .insert("elapsed_ms".into(), json!(started.elapsed().as_millis() as u64));
    }
    io_util::emit(&doc);
    Ok(())
}

/// Re-check a solve_result document from its embedded certificate.
pub fn verify_solve_result(v: &Value) -> CliResult {
    let parameter = v
        .get("parameter")
        .and_then(Value::as_str)
        .ok_or_else(|| Failure::schema("solve_result missing \"parameter\""))?;
    let value = v
        .get("value")
        .and_then(Value::as_u64)
        .ok_or_else(|| Failure::schema("solve_result missing integer \"value\""))?
        as usize;
    let cert = v
        .get("certificate")
        .ok_or_else(|| Failure::schema("solve_result missing \"certificate\""))?;
    let cert_graph = |key: &str| -> CliResult<Graph> {
        let gv = cert
            .get(key)
            .ok_or_else(|| Failure::schema(format!("certificate missing {key:?}")))?;
        Ok(thrackles::json::graph_from_value(gv)?)
    };
    let cert_usize = |key: &str| -> CliResult<usize> {
        Ok(cert
            .get(key)
            .and_then(Value::as_u64)
            .ok_or_else(|| Failure::schema(format!("certificate missing integer {key:?}")))?
            as usize)
    };
    match parameter {
        "convex-antithickness" | "book-thickness" | "queue-number" => {
            let g = cert_graph("graph")?;
            verify_order_certificate(parameter, value, &g, cert)
        }
        "two-track-thickness" => {
            let g = cert_graph("graph")?;
            let ints = |key: &str| -> CliResult<Vec<usize>> {
                cert.get(key)
                    .and_then(Value::as_array)
                    .ok_or_else(|| Failure::schema(format!("certificate missing array {key:?}")))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| x as usize)
                            .ok_or_else(|| Failure::schema("track entries must be integers"))
                    })
                    .collect()
            };
            let d = thrackles::linear::TwoTrackDrawing::new(
                ints("top")?,
                ints("bottom")?,
                g.edges().to_vec(),
            )?;
            let p = thrackles::linear::two_track_noncrossing_partition(&d)?;
            if p.class_count() != value {
                return Err(Failure::verification(format!(
                    "certificate drawing yields {} noncrossing classes, claimed {value}",
                    p.class_count()
                )));
            }
            Ok(())
        }
        "arboricity" => {
            let g = cert_graph("graph")?;
            let cap = cert_usize("cap")?;
            let recomputed = arboricity(&g, cap)?;
            if recomputed != value {
                return Err(Failure::verification(format!(
                    "arboricity recomputes to {recomputed}, claimed {value}"
                )));
            }
            Ok(())
        }
        "thickness-lower" => {
            let g = cert_graph("graph")?;
            let recomputed = thickness_lower_by_density(&g)?;
            if recomputed != value {
                return Err(Failure::verification(format!(
                    "thickness lower bound recomputes to {recomputed}, claimed {value}"
                )));
            }
            Ok(())
        }
        "antithickness-bounds" => {
            let g = cert_graph("graph")?;
            let (lower, upper) = antithickness_bounds(&g)?;
            if (lower, upper) != (cert_usize("lower")?, cert_usize("upper")?) || upper != value {
                return Err(Failure::verification(format!(
                    "antithickness bounds recompute to ({lower},{upper}), certificate disagrees"
                )));
            }
            Ok(())
        }
        "complete-antithickness" => {
            let n = cert_usize("n")?;
            let (lower, upper) = complete_antithickness_bounds(n)?;
            if (lower, upper) != (cert_usize("lower")?, cert_usize("upper")?) || upper != value {
                return Err(Failure::verification(format!(
                    "complete-graph bounds recompute to ({lower},{upper}), certificate disagrees"
                )));
            }
            Ok(())
        }
        other => Err(Failure::schema(format!(
            "solve_result has unknown parameter {other:?}"
        ))),
    }
}

fn verify_order_certificate(
    parameter: &str,
    value: usize,
    g: &Graph,
    cert: &Value,
) -> CliResult {
    use thrackles::convex::{classify_chords, CircularRelation};
    use thrackles::linear::{classify_pair, PairRelation, VertexOrdering};

    let order: Vec<usize> = cert
        .get("order")
        .and_then(Value::as_array)
        .ok_or_else(|| Failure::schema("certificate missing array \"order\""))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Failure::schema("order entries must be integers"))
        })
        .collect::<CliResult<_>>()?;
    let pi = VertexOrdering::new(order)?;
    let classes_v = cert
        .get("classes")
        .ok_or_else(|| Failure::schema("certificate missing \"classes\""))?;
    let classes = thrackles::json::classes_from_value(classes_v)?;
    if g.m() > 0 {
        classes.validate_against(g)?;
    }
    if classes.class_count() != value {
        return Err(Failure::verification(format!(
            "certificate has {} classes, claimed {value}",
            classes.class_count()
        )));
    }
    for (ci, class) in classes.classes().iter().enumerate() {
        for (i, &e) in class.iter().enumerate() {
            for &f in &class[i + 1..] {
                let bad = match parameter {
                    "convex-antithickness" => {
                        classify_chords(&pi, e, f)? == CircularRelation::Disjoint
                    }
                    "book-thickness" => classify_chords(&pi, e, f)? == CircularRelation::Cross,
                    _ => classify_pair(&pi, e, f)? == PairRelation::Nest,
                };
                if bad {
                    return Err(Failure::verification(format!(
                        "class {ci}: edges ({},{}) and ({},{}) violate the {parameter} class rule",
                        e.0, e.1, f.0, f.1
                    )));
                }
            }
        }
    }
    Ok(())
}
