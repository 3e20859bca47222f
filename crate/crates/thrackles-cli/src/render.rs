//! SVG rendering dispatch over artifact documents.

use serde_json::Value;

use thrackles::graph::edge;
use thrackles::json::{
    artifact_type, convex_partition_from_value, coloring_classes_from_value,
    cycle_partition_from_value, drawing_from_value, one_bend_from_value, subdivision_from_value,
    two_track_from_value,
};
use thrackles::linear::VertexOrdering;
use thrackles::svg::{convex_partition_svg, drawing_svg, one_bend_svg, two_track_svg};

use crate::{CliResult, Failure};

/// Render an artifact document to SVG, or explain why it has no picture.
pub fn render(v: &Value) -> CliResult<String> {
    match artifact_type(v) {
        Some("convex_partition") => {
            let (pi, p) = convex_partition_from_value(v)?;
            Ok(convex_partition_svg(&pi, &p))
        }
        Some("convex_coloring") => {
            let (n, p) = coloring_classes_from_value(v)?;
            Ok(convex_partition_svg(&VertexOrdering::identity(n), &p))
        }
        Some("cycle_partition") => {
            let (n, p) = cycle_partition_from_value(v)?;
            Ok(convex_partition_svg(&VertexOrdering::identity(n), &p))
        }
        Some("drawing") => {
            let (d, colors) = drawing_from_value(v)?;
            Ok(drawing_svg(&d, colors.as_deref()))
        }
        Some("subdivision_drawing") => {
            let s = subdivision_from_value(v)?;
            let blue: std::collections::BTreeSet<_> =
                s.blue.iter().map(|&(u, w)| edge(u, w)).collect();
            let colors: Vec<usize> = s
                .drawing
                .graph()
                .edges()
                .iter()
                .map(|e| usize::from(!blue.contains(e)))
                .collect();
            Ok(drawing_svg(&s.drawing, Some(&colors)))
        }
        Some("one_bend") => Ok(one_bend_svg(&one_bend_from_value(v)?)),
        Some("two_track") => {
            let (d, classes) = two_track_from_value(v)?;
            Ok(two_track_svg(&d, classes.as_ref().map(|(_, p)| p)))
        }
        Some(t) => Err(Failure::schema(format!("no SVG renderer for artifact type {t:?}"))),
        None => Err(Failure::schema(
            "no SVG renderer for plain graph documents; run a construction first",
        )),
    }
}
