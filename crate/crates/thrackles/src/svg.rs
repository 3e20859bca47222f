//! SVG rendering of drawings and layouts. Coordinates are converted to f64
//! for display only; the exact data stays in the JSON artifacts.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::geometry::{Drawing, OneBendDrawing, Point};
use crate::graph::EdgePartition;
use crate::linear::{TwoTrackDrawing, VertexOrdering};

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
];

fn class_color(c: usize) -> &'static str {
    PALETTE[c % PALETTE.len()]
}

fn f(p: &Point) -> (f64, f64) {
    (p.0.to_f64().unwrap_or(0.0), p.1.to_f64().unwrap_or(0.0))
}

struct Canvas {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Canvas {
    fn new() -> Self {
        Canvas {
            body: String::new(),
            min: (f64::INFINITY, f64::INFINITY),
            max: (f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn see(&mut self, (x, y): (f64, f64)) {
        self.min.0 = self.min.0.min(x);
        self.min.1 = self.min.1.min(y);
        self.max.0 = self.max.0.max(x);
        self.max.1 = self.max.1.max(y);
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), color: &str, width: f64) {
        self.see(a);
        self.see(b);
        writeln!(
            self.body,
            r#"<line x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" stroke="{}" stroke-width="{:.4}" stroke-linecap="round"/>"#,
            a.0, -a.1, b.0, -b.1, color, width
        )
        .unwrap();
    }

    fn dot(&mut self, p: (f64, f64), r: f64) {
        self.see(p);
        writeln!(
            self.body,
            r##"<circle cx="{:.4}" cy="{:.4}" r="{:.4}" fill="#000000"/>"##,
            p.0, -p.1, r
        )
        .unwrap();
    }

    fn finish(self) -> String {
        let (mut w, mut h) = (self.max.0 - self.min.0, self.max.1 - self.min.1);
        if !w.is_finite() || w <= 0.0 {
            w = 1.0;
        }
        if !h.is_finite() || h <= 0.0 {
            h = 1.0;
        }
        let pad = 0.06 * w.max(h);
        let (x0, y0) = (self.min.0 - pad, -(self.max.1) - pad);
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="720" "#,
                r#"viewBox="{:.4} {:.4} {:.4} {:.4}">"#,
                "\n{}</svg>\n"
            ),
            x0,
            y0,
            w + 2.0 * pad,
            h + 2.0 * pad,
            self.body
        )
    }
}

/// Straight-line drawing; edges colored by class when `colors` is given.
pub fn drawing_svg(d: &Drawing, colors: Option<&[usize]>) -> String {
    let pts: Vec<(f64, f64)> = d.points().iter().map(f).collect();
    let span = pts
        .iter()
        .flat_map(|a| pts.iter().map(move |b| (a.0 - b.0).hypot(a.1 - b.1)))
        .fold(1.0_f64, f64::max);
    let mut c = Canvas::new();
    for (e, &(u, v)) in d.graph().edges().iter().enumerate() {
        let color = colors.map_or("#000000", |cs| class_color(cs[e]));
        c.line(pts[u], pts[v], color, span / 400.0);
    }
    for &p in &pts {
        c.dot(p, span / 150.0);
    }
    c.finish()
}

/// Chord diagram of an edge partition under a circular vertex ordering.
pub fn convex_partition_svg(pi: &VertexOrdering, p: &EdgePartition) -> String {
    let n = pi.n();
    let pos = |v: usize| {
        let a = std::f64::consts::PI / 2.0 - 2.0 * std::f64::consts::PI * (pi.pos(v) as f64) / (n as f64);
        (a.cos(), a.sin())
    };
    let mut c = Canvas::new();
    for (ci, class) in p.classes().iter().enumerate() {
        for &(u, v) in class {
            c.line(pos(u), pos(v), class_color(ci), 0.008);
        }
    }
    for v in 0..n {
        c.dot(pos(v), 0.02);
    }
    c.finish()
}

/// Two-track drawing: one track per horizontal line.
pub fn two_track_svg(d: &TwoTrackDrawing, classes: Option<&EdgePartition>) -> String {
    let n = d.top.len().max(d.bottom.len()).max(1) as f64;
    let mut at = vec![(0.0, 0.0); d.top.len() + d.bottom.len()];
    for (i, &v) in d.top.iter().enumerate() {
        at[v] = (i as f64, 1.0);
    }
    for (i, &v) in d.bottom.iter().enumerate() {
        at[v] = (i as f64, 0.0);
    }
    let color_of = |e: (usize, usize)| -> &'static str {
        match classes {
            None => "#000000",
            Some(p) => p
                .classes()
                .iter()
                .position(|c| c.contains(&e))
                .map_or("#000000", class_color),
        }
    };
    let mut c = Canvas::new();
    for &e in &d.edges {
        c.line(at[e.0], at[e.1], color_of(e), n / 400.0);
    }
    for &p in &at {
        c.dot(p, n / 150.0);
    }
    c.finish()
}

/// One-bend drawing: each edge as a two-segment polyline.
pub fn one_bend_svg(d: &OneBendDrawing) -> String {
    let verts: Vec<(f64, f64)> = d.vertices.iter().map(f).collect();
    let span = (d.graph.m().max(d.graph.n()) as f64).max(1.0);
    let mut c = Canvas::new();
    for (e, &(u, v)) in d.graph.edges().iter().enumerate() {
        let b = f(&d.bends[e]);
        let color = class_color(e);
        c.line(verts[u], b, color, span / 400.0);
        c.line(b, verts[v], color, span / 400.0);
    }
    for &p in &verts {
        c.dot(p, span / 150.0);
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::complete_matching_partition;
    use crate::geometry::one_bend_drawing;
    use crate::graph::{complete_graph, Graph};
    use crate::numbers::{q, q_int};

    #[test]
    fn renders_drawing() {
        let g = complete_graph(3).unwrap();
        let d = Drawing::new(
            g,
            vec![(q_int(0), q_int(0)), (q_int(4), q_int(0)), (q(1, 2), q_int(3))],
        )
        .unwrap();
        let svg = drawing_svg(&d, Some(&[0, 1, 2]));
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line ").count(), 3);
        assert_eq!(svg.matches("<circle ").count(), 3);
        assert_eq!(svg, drawing_svg(&d, Some(&[0, 1, 2])));
    }

    #[test]
    fn renders_chord_diagram() {
        let (pi, p) = complete_matching_partition(6).unwrap();
        let svg = convex_partition_svg(&pi, &p);
        assert_eq!(svg.matches("<line ").count(), 15);
    }

    #[test]
    fn renders_one_bend() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let svg = one_bend_svg(&one_bend_drawing(&g).unwrap());
        assert_eq!(svg.matches("<line ").count(), 6);
    }
}
