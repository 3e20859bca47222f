//! The `construct` subcommand: run a named construction, emit its artifact.

use std::path::PathBuf;

use serde_json::{json, Value};

use thrackles::convex::{
    complete_matching_partition, compose_track_to_convex, convex_kn_upper_coloring,
    convex_queue_arch_partition, small_complete_partition, walecki_partition,
};
use thrackles::geometry::{geometric_thickness_extremal, knprime_drawing, one_bend_drawing};
use thrackles::graph::{
    complete_graph, relabel, singleton_tripleton_graph, star_forest_partition_gn,
    compatible_bijections, Graph,
};
use thrackles::json::{
    classes_to_value, coloring_to_value, convex_partition_to_value, cycle_partition_to_value,
    graph_to_value, layered_drawing_to_value, one_bend_to_value, subdivision_to_value,
    track_layout_to_value, track_layout_from_value, two_track_from_value, two_track_to_value,
};
use thrackles::linear::{
    forest_track_layout, random_track_layout, two_track_noncrossing_partition,
    two_track_thrackle_partition, VertexOrdering,
};

use crate::{io_util, render, CliResult, Failure};

pub struct Request {
    pub name: String,
    pub input: Option<PathBuf>,
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub tracks: Option<usize>,
    pub colors: Option<usize>,
    pub seed: u64,
    pub svg: Option<PathBuf>,
}

impl Request {
    fn need(&self, flag: &str, value: Option<usize>) -> CliResult<usize> {
        value.ok_or_else(|| {
            Failure::schema(format!("construct {} requires --{flag} <value>", self.name))
        })
    }
}

pub fn run(req: Request) -> CliResult {
    let artifact = build(&req)?;
    if let Some(path) = &req.svg {
        let rendered = render::render(&artifact)?;
        io_util::write_file(path, &rendered)?;
    }
    io_util::emit(&artifact);
    Ok(())
}

fn build(req: &Request) -> CliResult<Value> {
    match req.name.as_str() {
        "complete-matching" => {
            let g = match req.n {
                Some(n) => complete_graph(n)?,
                None => io_util::read_graph(req.input.as_deref())?,
            };
            let n = g.n();
            if g.m() != n * n.saturating_sub(1) / 2 {
                return Err(Failure::schema(format!(
                    "complete-matching needs a complete graph; got {} of {} edges",
                    g.m(),
                    n * n.saturating_sub(1) / 2
                )));
            }
            let (pi, p) = complete_matching_partition(n)?;
            Ok(convex_partition_to_value(&pi, &p))
        }
        "small-matching" => {
            let t = req.need("t", req.t)?;
            let p = small_complete_partition(t)?;
            Ok(convex_partition_to_value(&VertexOrdering::identity(t), &p))
        }
        "queue-arch" => {
            let g = io_util::read_graph(req.input.as_deref())?;
            let pi = VertexOrdering::identity(g.n());
            let (p, _) = convex_queue_arch_partition(&g, &pi)?;
            Ok(convex_partition_to_value(&pi, &p))
        }
        "convex-coloring" => {
            let n = req.need("n", req.n)?;
            Ok(coloring_to_value(n, &convex_kn_upper_coloring(n)?))
        }
        "walecki" => {
            let n = req.need("n", req.n)?;
            Ok(cycle_partition_to_value(n, &walecki_partition(n)?))
        }
        "star-forests" => {
            let g = match req.n {
                Some(n) => singleton_tripleton_graph(n)?,
                None => io_util::read_graph(req.input.as_deref())?,
            };
            let p = star_forest_partition_gn(&g)?;
            Ok(json!({
                "type": "star_forest_partition",
                "n": g.n(),
                "classes": classes_to_value(&p),
            }))
        }
        "compatible-bijections" => {
            let k = req.need("k", req.k)?;
            let (g, bijections, union) = compatible_bijections(k)?;
            let copies = bijections
                .iter()
                .map(|f| relabel(&g, f).map(|c| graph_to_value(&c)))
                .collect::<thrackles::Result<Vec<_>>>()?;
            Ok(json!({
                "type": "compatible_bijections",
                "k": k,
                "copies": copies,
                "union": graph_to_value(&union),
            }))
        }
        "extremal" => {
            let k = req.need("k", req.k)?;
            let s = req.need("s", req.s)?;
            let layered = geometric_thickness_extremal(k, s)?;
            let mut v = layered_drawing_to_value(&layered);
            v.as_object_mut()
                .expect("drawing artifacts are objects")
                .insert("claim".into(), json!("noncrossing"));
            Ok(v)
        }
        "knprime" => {
            let n = req.need("n", req.n)?;
            Ok(subdivision_to_value(&knprime_drawing(n)?))
        }
        "one-bend" => {
            let g = io_util::read_graph(req.input.as_deref())?;
            Ok(one_bend_to_value(&one_bend_drawing(&g)?))
        }
        "tree-track" => {
            let g = io_util::read_graph(req.input.as_deref())?;
            Ok(track_layout_to_value(&forest_track_layout(&g)?))
        }
        "random-track" => {
            let g = io_util::read_graph(req.input.as_deref())?;
            let t = req.need("tracks", req.tracks)?;
            let k = req.need("colors", req.colors)?;
            match random_track_layout(&g, t, k, req.seed)? {
                Some(layout) => Ok(track_layout_to_value(&layout)),
                None => Err(Failure::verification(format!(
                    "no ({k},{t})-track layout found within the attempt budget (seed {})",
                    req.seed
                ))),
            }
        }
        "compose" => {
            let v = io_util::read_value(req.input.as_deref())?;
            let layout = track_layout_from_value(&v)?;
            let n: usize = layout.tracks.iter().map(|t| t.len()).sum();
            let g = Graph::new(n, layout.colors.keys().copied())?;
            let t = layout.track_count();
            let pattern = if (3..=5).contains(&t) {
                small_complete_partition(t)?
            } else {
                complete_matching_partition(t)?.1
            };
            let (pi, p) = compose_track_to_convex(&g, &layout, &pattern)?;
            Ok(convex_partition_to_value(&pi, &p))
        }
        "two-track-thrackle" => {
            let v = io_util::read_value(req.input.as_deref())?;
            let (d, _) = two_track_from_value(&v)?;
            let p = two_track_thrackle_partition(&d)?;
            Ok(two_track_to_value(&d, Some(("thrackle", &p))))
        }
        "two-track-noncrossing" => {
            let v = io_util::read_value(req.input.as_deref())?;
            let (d, _) = two_track_from_value(&v)?;
            let p = two_track_noncrossing_partition(&d)?;
            Ok(two_track_to_value(&d, Some(("noncrossing", &p))))
        }
        other => Err(Failure::schema(format!(
            "unknown construction {other:?}; see `thrackles construct --help`"
        ))),
    }
}
