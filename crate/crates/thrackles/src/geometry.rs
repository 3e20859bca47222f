//! Exact straight-line drawings over rational coordinates: segment
//! classification with hard errors on degeneracies, drawing validation,
//! crossing graphs, the layered extremal construction for thickness-k
//! graphs, the subdivided-complete-graph drawing with two intersecting
//! classes, one-bend all-pairs-intersecting drawings, and the 2-claw
//! non-thrackleability check.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::graph::{complete_subdivision, division_vertex, two_claw, Edge, Graph};
use crate::numbers::{q, q_int, q_usize, Q};
use crate::oracle::{chromatic_exact, min_clique_cover, BitGraph};
use crate::Result;

pub type Point = (Q, Q);

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
/// 0 collinear. Exact.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let v = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn within_box(a: &Point, b: &Point, p: &Point) -> bool {
    let (xlo, xhi) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
    let (ylo, yhi) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
    xlo <= &p.0 && &p.0 <= xhi && ylo <= &p.1 && &p.1 <= yhi
}

/// Whether p lies on the closed segment ab.
pub fn point_on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == 0 && within_box(a, b, p)
}

/// How two segments in general position meet. Anything else — collinear
/// overlap, an endpoint in the interior of the other segment, coincident
/// segments — is a degeneracy reported as an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    SharedEndpoint,
    ProperCrossing,
    Disjoint,
}

pub fn segment_relation(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<SegmentRelation> {
    if a == b || c == d {
        return Err(Error::InvalidDrawing("zero-length segment".into()));
    }
    let shared = (a == c) as u8 + (a == d) as u8 + (b == c) as u8 + (b == d) as u8;
    if shared >= 2 {
        return Err(Error::InvalidDrawing("segments coincide".into()));
    }
    if shared == 1 {
        let (p, other) = if a == c || a == d { (a, b) } else { (b, a) };
        let r = if c == p { d } else { c };
        if orient(p, other, r) == 0 {
            let dot = (&other.0 - &p.0) * (&r.0 - &p.0) + (&other.1 - &p.1) * (&r.1 - &p.1);
            if dot.is_positive() {
                return Err(Error::InvalidDrawing(
                    "collinear overlap at a shared endpoint".into(),
                ));
            }
        }
        return Ok(SegmentRelation::SharedEndpoint);
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 == 0 && o2 == 0 {
        // collinear segments: any shared point is an overlap
        if within_box(a, b, c) || within_box(a, b, d) || within_box(c, d, a) {
            return Err(Error::InvalidDrawing("collinear segments overlap".into()));
        }
        return Ok(SegmentRelation::Disjoint);
    }
    if o1 == 0 && within_box(a, b, c)
        || o2 == 0 && within_box(a, b, d)
        || o3 == 0 && within_box(c, d, a)
        || o4 == 0 && within_box(c, d, b)
    {
        return Err(Error::InvalidDrawing(
            "segment endpoint lies in the interior of another segment".into(),
        ));
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        Ok(SegmentRelation::ProperCrossing)
    } else {
        Ok(SegmentRelation::Disjoint)
    }
}

/// Exact interior intersection point of two properly crossing segments.
pub fn crossing_point(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<Point> {
    let rx = &b.0 - &a.0;
    let ry = &b.1 - &a.1;
    let sx = &d.0 - &c.0;
    let sy = &d.1 - &c.1;
    let den = &rx * &sy - &ry * &sx;
    if den.is_zero() {
        return None;
    }
    let qpx = &c.0 - &a.0;
    let qpy = &c.1 - &a.1;
    let t = (&qpx * &sy - &qpy * &sx) / &den;
    let u = (&qpx * &ry - &qpy * &rx) / &den;
    let zero = Q::zero();
    let one = q_int(1);
    if t > zero && t < one && u > zero && u < one {
        Some((&a.0 + &t * rx, &a.1 + t * ry))
    } else {
        None
    }
}

/// A straight-line drawing: rational vertex positions for every vertex of a
/// graph. Construction validates the drawing (distinct points, no vertex on
/// a non-incident edge, no degenerate segment pair) and caches the pairwise
/// segment relations. Several segments crossing at one interior point are
/// fine; each pair still crosses properly.
#[derive(Debug, Clone)]
pub struct Drawing {
    graph: Graph,
    points: Vec<Point>,
    relations: Vec<SegmentRelation>,
}

impl Drawing {
    pub fn new(graph: Graph, points: Vec<Point>) -> Result<Drawing> {
        if points.len() != graph.n() {
            return Err(Error::InvalidDrawing(format!(
                "{} points for {} vertices",
                points.len(),
                graph.n()
            )));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::InvalidDrawing(format!(
                        "vertices {i} and {j} coincide"
                    )));
                }
            }
        }
        for (v, p) in points.iter().enumerate() {
            for &(x, y) in graph.edges() {
                if v != x && v != y && point_on_segment(&points[x], &points[y], p) {
                    return Err(Error::InvalidDrawing(format!(
                        "vertex {v} lies on edge ({x},{y})"
                    )));
                }
            }
        }
        let edges = graph.edges();
        let m = edges.len();
        let mut relations = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for i in 0..m {
            let (a, b) = edges[i];
            for &(c, d) in &edges[i + 1..] {
                relations.push(segment_relation(
                    &points[a], &points[b], &points[c], &points[d],
                )?);
            }
        }
        Ok(Drawing {
            graph,
            points,
            relations,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Relation between edges (by index into `graph().edges()`).
    pub fn relation(&self, e: usize, f: usize) -> Result<SegmentRelation> {
        let m = self.graph.m();
        if e == f || e >= m || f >= m {
            return Err(Error::InvalidInput(format!("bad edge index pair ({e},{f})")));
        }
        let (i, j) = if e < f { (e, f) } else { (f, e) };
        Ok(self.relations[i * m - i * (i + 1) / 2 + (j - i - 1)])
    }

    /// The crossing graph H: a vertex per edge, adjacent iff they properly
    /// cross.
    pub fn crossing_graph(&self) -> Result<Graph> {
        self.aux_graph(false)
    }

    /// H with shared endpoints also counted as adjacent.
    pub fn crossing_or_adjacent_graph(&self) -> Result<Graph> {
        self.aux_graph(true)
    }

    fn aux_graph(&self, plus: bool) -> Result<Graph> {
        let m = self.graph.m();
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = match self.relation(i, j)? {
                    SegmentRelation::ProperCrossing => true,
                    SegmentRelation::SharedEndpoint => plus,
                    SegmentRelation::Disjoint => false,
                };
                if adjacent {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(m, edges)
    }
}

/// Every pair of edges meets exactly once: at a shared endpoint or in a
/// proper crossing.
pub fn is_geometric_thrackle(d: &Drawing) -> Result<bool> {
    let m = d.graph().m();
    for i in 0..m {
        for j in i + 1..m {
            if d.relation(i, j)? == SegmentRelation::Disjoint {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No two edges of the class (given by edge indices) properly cross.
pub fn is_noncrossing_class(d: &Drawing, class: &[usize]) -> Result<bool> {
    for (i, &e) in class.iter().enumerate() {
        for &f in &class[i + 1..] {
            if d.relation(e, f)? == SegmentRelation::ProperCrossing {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every two edges of the class intersect (shared endpoint or crossing).
pub fn is_thrackle_class(d: &Drawing, class: &[usize]) -> Result<bool> {
    for (i, &e) in class.iter().enumerate() {
        for &f in &class[i + 1..] {
            if d.relation(e, f)? == SegmentRelation::Disjoint {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Thickness and antithickness of one fixed drawing: the chromatic number of
/// the crossing graph, and the least number of thrackle classes (a clique
/// cover of the crossing-or-adjacent graph). Capped at 24 edges.
pub fn drawing_thickness_antithickness(d: &Drawing, budget: u64) -> Result<(usize, usize)> {
    let m = d.graph().m();
    if m > 24 {
        return Err(Error::CapExceeded(format!(
            "drawing parameters are capped at 24 edges, got {m}"
        )));
    }
    if m == 0 {
        return Ok((0, 0));
    }
    let h = d.crossing_graph()?;
    let (chi, _, _) = chromatic_exact(&BitGraph::from_graph(&h)?, budget)?;
    let thickness = chi.max(1);
    let hp = d.crossing_or_adjacent_graph()?;
    let cover = min_clique_cover(&hp, 24, budget)?;
    Ok((thickness, cover.value))
}

/// A drawing together with an edge coloring, colors parallel to
/// `drawing.graph().edges()`.
#[derive(Debug, Clone)]
pub struct LayeredDrawing {
    pub drawing: Drawing,
    pub colors: Vec<usize>,
}

impl LayeredDrawing {
    pub fn color_count(&self) -> usize {
        self.colors.iter().copied().max().map_or(0, |c| c + 1)
    }

    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut classes = vec![Vec::new(); self.color_count()];
        for (i, &(u, v)) in self.drawing.graph().edges().iter().enumerate() {
            classes[self.colors[i]].push((u, v));
        }
        classes
    }

    /// Edge-index classes, for the class predicates.
    pub fn index_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_count()];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c].push(i);
        }
        classes
    }
}

/// Number of edges of the extremal layered construction: k(3n - 4k - 3)
/// with n = 2ks.
pub fn extremal_edge_count(k: usize, s: usize) -> Result<usize> {
    if k < 1 || s < 2 {
        return Err(Error::InvalidInput("extremal construction needs k >= 1, s >= 2".into()));
    }
    let n = 2 * k * s;
    Ok(k * (3 * n - 4 * k - 3))
}

/// Edge bound for thickness-k graphs on n points in general position:
/// k(3n - k - 5), valid for n >= max(2k, 3).
pub fn thickness_edge_upper_bound(n: usize, k: usize) -> Result<usize> {
    if k < 1 || n < (2 * k).max(3) {
        return Err(Error::InvalidInput(
            "thickness edge bound needs k >= 1 and n >= max(2k, 3)".into(),
        ));
    }
    Ok(k * (3 * n - k - 5))
}

/// Combinatorial layer construction on levels 1..=s of 2k vertices each.
/// Vertex (a, i) for a in 1..=s, i in 1..=2k gets id (a-1)*2k + (i-1 mod 2k).
fn extremal_edges(k: usize, s: usize) -> BTreeMap<Edge, usize> {
    let two_k = 2 * k;
    let slot = |x: isize| -> usize {
        (x - 1).rem_euclid(two_k as isize) as usize + 1
    };
    let vid = |a: usize, i: usize| (a - 1) * two_k + (i - 1);
    let color_of = |i: usize, j: usize| -> usize {
        let sigma = (i + j) % two_k;
        let ell = if sigma == 0 {
            k
        } else if sigma % 2 == 0 {
            sigma / 2
        } else {
            (sigma + 1) / 2
        };
        ell - 1
    };
    let mut colors: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut add = |u: usize, v: usize, c: usize| {
        let e = crate::graph::edge(u, v);
        let prev = colors.insert(e, c);
        debug_assert!(prev.is_none(), "duplicate edge in extremal construction");
    };
    // in-level edges: level 1 is complete; higher levels drop the
    // antipodal perfect matching
    for a in 1..=s {
        for i in 1..=two_k {
            for j in i + 1..=two_k {
                if a >= 2 && j - i == k {
                    continue;
                }
                add(vid(a, i), vid(a, j), color_of(i, j));
            }
        }
    }
    // fans between consecutive levels: the two antipodal removed-matching
    // ends of color i at level a join to every vertex one level in
    let half = k / 2;
    let three_half = (3 * k) / 2;
    for a in 2..=s {
        for i in 1..=k {
            for j in 1..=two_k {
                add(vid(a, slot((i + half) as isize)), vid(a - 1, j), i - 1);
                add(vid(a, slot((i + three_half) as isize)), vid(a - 1, j), i - 1);
            }
        }
    }
    // skip-level edges two levels apart, joining each apex to a same-colored
    // path end two levels in. The in-level zigzag coloring is chiral, so the
    // side on which a path-end's free corridor opens flips with the parity
    // of k; the skips target the end whose corridor faces the apex.
    let (first_target, second_target) = if k % 2 == 0 {
        (0, k)
    } else {
        (k, 0)
    };
    for a in 2..s {
        for i in 1..=k {
            add(
                vid(a + 1, slot((i + half) as isize)),
                vid(a - 1, slot((i + first_target) as isize)),
                i - 1,
            );
            add(
                vid(a + 1, slot((i + three_half) as isize)),
                vid(a - 1, slot((i + second_target) as isize)),
                i - 1,
            );
        }
    }
    colors
}

/// Rational point exactly on the circle of radius r near angle theta, via
/// the tangent half-angle parametrization with denominator 4096.
fn circle_point(r: &Q, theta: f64) -> Point {
    let mut t = theta;
    let tau = std::f64::consts::TAU;
    while t <= -std::f64::consts::PI {
        t += tau;
    }
    while t > std::f64::consts::PI {
        t -= tau;
    }
    let half = (t / 2.0).tan();
    if !half.is_finite() || half.abs() >= 1e12 {
        return (-r.clone(), Q::zero());
    }
    let tq = q((half * 4096.0).round() as i64, 4096);
    let den = q_int(1) + &tq * &tq;
    let x = r * (q_int(1) - &tq * &tq) / &den;
    let y = r * (q_int(2) * tq) / den;
    (x, y)
}

/// Layered extremal thickness-k drawing on n = 2ks vertices with exactly
/// k(3n - 4k - 3) edges and no two same-colored edges crossing.
///
/// Levels sit on concentric circles whose radii grow geometrically, with
/// each level rotated a little further than the one inside it. The rotation
/// step must be large enough that the near-diametral apex edges clear the
/// inner disks (sin(step) above the inverse radius ratio) yet small enough
/// that the two-level edges still thread the gap beside each apex fan, so
/// the candidate search couples a growth-ratio sweep with rotation steps
/// that are modest fractions of the vertex spacing plus a small detuning
/// for near-degeneracies. Every candidate is verified exactly; the first
/// valid one wins. A small promising grid is scanned before the exhaustive
/// sweep; exhausting both means the implementation is wrong, which is
/// reported as a construction error.
pub fn geometric_thickness_extremal(k: usize, s: usize) -> Result<LayeredDrawing> {
    if k < 1 || s < 2 {
        return Err(Error::InvalidInput("extremal construction needs k >= 1, s >= 2".into()));
    }
    let two_k = 2 * k;
    let n = two_k * s;
    let colors_by_edge = extremal_edges(k, s);
    let want = extremal_edge_count(k, s)?;
    if colors_by_edge.len() != want {
        return Err(Error::Construction(format!(
            "edge count {} differs from k(3n-4k-3) = {want}",
            colors_by_edge.len()
        )));
    }
    let graph = Graph::new(n, colors_by_edge.keys().copied())?;
    let colors: Vec<usize> = graph.edges().iter().map(|e| colors_by_edge[e]).collect();

    let spacing = std::f64::consts::PI / k as f64;
    let fast_ratios: Vec<u128> = vec![32, 16, 64];
    // The rotation step must stay well under one vertex spacing or the skip
    // edges leave their corridors; both signs are tried since the chiral
    // in-level coloring prefers one side depending on k.
    let fast_twists = [
        -1.0 / 8.0,
        1.0 / 8.0,
        -1.0 / 16.0,
        1.0 / 16.0,
        -3.0 / 32.0,
        3.0 / 32.0,
        -1.0 / 12.0,
        1.0 / 12.0,
    ];
    let fast_detunes = [0.0, -1.0 / 256.0, 1.0 / 256.0];
    let full_ratios: Vec<u128> = std::iter::successors(Some(8u128), |r| r.checked_mul(2))
        .take_while(|&r| r <= 1u128 << 16)
        .collect();
    let full_twists = [
        -1.0 / 8.0,
        -1.0 / 16.0,
        -3.0 / 32.0,
        -1.0 / 12.0,
        -5.0 / 32.0,
        -1.0 / 24.0,
        -3.0 / 16.0,
        -1.0 / 4.0,
        1.0 / 8.0,
        1.0 / 16.0,
        1.0 / 4.0,
    ];
    let full_detunes = [0.0, -1.0 / 256.0, 1.0 / 256.0, -1.0 / 64.0, 1.0 / 64.0];

    let try_candidate = |ratio: u128, twist_mult: f64, detune: f64| -> Option<LayeredDrawing> {
        let phi = twist_mult * spacing + detune;
        // The apex edge spanning nearly a diameter sits about r*sin(phi) off
        // center, so it only clears the disk one more level in when that
        // exceeds the radius there; weed those out before paying for exact
        // verification. Only the multi-level cases with zigzag paths inside
        // the innermost disk are affected.
        if s >= 3 && k >= 2 && phi.sin().abs() * (ratio as f64 - 1.0) <= 1.0 {
            return None;
        }
        let ratio_q = Q::from_integer(ratio.into());
        let mut points = Vec::with_capacity(n);
        let mut radius = q_int(1);
        for a in 1..=s {
            for i in 1..=two_k {
                let theta = -((i - 1) as f64) * spacing + (a - 1) as f64 * phi;
                points.push(circle_point(&radius, theta));
            }
            radius *= &ratio_q;
        }
        let drawing = Drawing::new(graph.clone(), points).ok()?;
        let layered = LayeredDrawing {
            drawing,
            colors: colors.clone(),
        };
        for class in layered.index_classes() {
            if !is_noncrossing_class(&layered.drawing, &class).ok()? {
                return None;
            }
        }
        Some(layered)
    };

    for &ratio in &fast_ratios {
        for &tm in &fast_twists {
            for &det in &fast_detunes {
                if let Some(found) = try_candidate(ratio, tm, det) {
                    return Ok(found);
                }
            }
        }
    }
    for &ratio in &full_ratios {
        for &tm in &full_twists {
            for &det in &full_detunes {
                if let Some(found) = try_candidate(ratio, tm, det) {
                    return Ok(found);
                }
            }
        }
    }
    Err(Error::Construction(format!(
        "no radius/rotation candidate yields a valid layered drawing for k={k}, s={s}"
    )))
}

/// Drawing of the subdivided complete graph whose edges split into two
/// classes (by the original endpoint each half-edge keeps) such that every
/// two same-class edges intersect.
#[derive(Debug, Clone)]
pub struct SubdivisionDrawing {
    pub n: usize,
    pub drawing: Drawing,
    /// edges (v_i, x_ij) incident to the smaller original endpoint
    pub blue: Vec<Edge>,
    /// edges (v_j, x_ij) incident to the larger original endpoint
    pub red: Vec<Edge>,
}

struct KnPrimeState {
    /// per placed division pair: segment endpoints of its two edges
    blue_segments: Vec<(Point, Point)>,
    red_segments: Vec<(Point, Point)>,
    all_segments: Vec<(Point, Point)>,
    placed_points: Vec<Point>,
}

fn knprime_base_blue(state: &KnPrimeState, i: usize) -> (Point, Point) {
    // stage-1 blue segment of pair (i, i+1), which is blue_segments[i]
    // because consecutive pairs are seeded first in order
    state.blue_segments[i].clone()
}

/// Crossing parameter threshold for pair (i, j): both stage-1 segments rise
/// from y=0 to y=1, so a crossing's parameter along either equals its
/// y-coordinate; their mutual crossing sits at (j-i)/(2(j-i)-1).
fn knprime_threshold(i: usize, j: usize) -> Q {
    let d = (j - i) as i64;
    q(d, 2 * d - 1)
}

fn knprime_invariants_ok(state: &KnPrimeState, pending: &[(usize, usize)]) -> bool {
    // (1) every blue edge crossing the stage-1 blue of pair (p, .) does so
    //     below every pending threshold for p; (2) symmetrically for reds
    for &(p, qq) in pending {
        let t = knprime_threshold(p, qq);
        let base_blue = knprime_base_blue(state, p);
        for seg in &state.blue_segments {
            if let Some(pt) = crossing_point(&base_blue.0, &base_blue.1, &seg.0, &seg.1) {
                if pt.1 >= t {
                    return false;
                }
            }
        }
        let base_red = state.red_segments[qq - 1].clone();
        for seg in &state.red_segments {
            if let Some(pt) = crossing_point(&base_red.0, &base_red.1, &seg.0, &seg.1) {
                if pt.1 >= t {
                    return false;
                }
            }
        }
    }
    true
}

fn knprime_candidate_ok(
    state: &KnPrimeState,
    cand: &Point,
    new_blue: &(Point, Point),
    new_red: &(Point, Point),
    pending: &[(usize, usize)],
) -> bool {
    if state.placed_points.contains(cand) {
        return false;
    }
    for seg in &state.all_segments {
        if point_on_segment(&seg.0, &seg.1, cand) {
            return false;
        }
    }
    for p in &state.placed_points {
        if p != &new_blue.0 && point_on_segment(&new_blue.0, &new_blue.1, p) {
            return false;
        }
        if p != &new_red.0 && point_on_segment(&new_red.0, &new_red.1, p) {
            return false;
        }
    }
    for seg in &state.all_segments {
        if segment_relation(&new_blue.0, &new_blue.1, &seg.0, &seg.1).is_err() {
            return false;
        }
        if segment_relation(&new_red.0, &new_red.1, &seg.0, &seg.1).is_err() {
            return false;
        }
    }
    if segment_relation(&new_blue.0, &new_blue.1, &new_red.0, &new_red.1).is_err() {
        return false;
    }
    // same-class pairs must intersect
    for seg in &state.blue_segments {
        match segment_relation(&new_blue.0, &new_blue.1, &seg.0, &seg.1) {
            Ok(SegmentRelation::Disjoint) | Err(_) => return false,
            _ => {}
        }
    }
    for seg in &state.red_segments {
        match segment_relation(&new_red.0, &new_red.1, &seg.0, &seg.1) {
            Ok(SegmentRelation::Disjoint) | Err(_) => return false,
            _ => {}
        }
    }
    // corridor invariants must survive the insertion
    for &(p, qq) in pending {
        let t = knprime_threshold(p, qq);
        let base_blue = knprime_base_blue(state, p);
        if let Some(pt) = crossing_point(&base_blue.0, &base_blue.1, &new_blue.0, &new_blue.1) {
            if pt.1 >= t {
                return false;
            }
        }
        let base_red = state.red_segments[qq - 1].clone();
        if let Some(pt) = crossing_point(&base_red.0, &base_red.1, &new_red.0, &new_red.1) {
            if pt.1 >= t {
                return false;
            }
        }
    }
    true
}

/// Drawing of K_n with each edge subdivided once, 3 <= n <= 8. Original
/// vertices go on a line; the division vertices of consecutive pairs go on
/// a parallel line so that all shorter halves share one interior point and
/// all longer halves share another; remaining division vertices are
/// inserted in lexicographic pair order next to the crossing of the two
/// stage-1 segments they shadow, keeping both classes pairwise
/// intersecting.
pub fn knprime_drawing(n: usize) -> Result<SubdivisionDrawing> {
    if !(3..=8).contains(&n) {
        return Err(Error::InvalidInput("knprime_drawing needs 3 <= n <= 8".into()));
    }
    let graph = complete_subdivision(n)?;
    let mut points: Vec<Option<Point>> = vec![None; graph.n()];
    for i in 0..n {
        points[i] = Some((q_usize(2 * i + 2), Q::zero()));
    }
    let mut state = KnPrimeState {
        blue_segments: Vec::new(),
        red_segments: Vec::new(),
        all_segments: Vec::new(),
        placed_points: (0..n).map(|i| points[i].clone().unwrap()).collect(),
    };
    // stage 1: consecutive pairs, blue fan through (n + 1/2, 1/2) and red
    // fan through (n + 3/2, 1/2)
    for i in 0..n - 1 {
        let x = (q_usize(2 * n - 2 * i - 1), q_int(1));
        points[division_vertex(n, i, i + 1)] = Some(x.clone());
        let vi = points[i].clone().unwrap();
        let vj = points[i + 1].clone().unwrap();
        state.blue_segments.push((vi.clone(), x.clone()));
        state.red_segments.push((vj.clone(), x.clone()));
        state.all_segments.push((vi, x.clone()));
        state.all_segments.push((vj, x.clone()));
        state.placed_points.push(x);
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            pairs.push((i, j));
        }
    }
    if !knprime_invariants_ok(&state, &pairs) {
        return Err(Error::Construction("stage-1 corridor invariants fail".into()));
    }
    const DIRS: [(i64, i64); 8] = [
        (0, -1),
        (0, 1),
        (1, 0),
        (-1, 0),
        (1, -1),
        (-1, -1),
        (1, 1),
        (-1, 1),
    ];
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let pending = &pairs[idx + 1..];
        let blue_i = knprime_base_blue(&state, i);
        let t = knprime_threshold(i, j);
        // crossing of stage-1 blue_i and red_j, on blue_i at parameter t
        let c = (
            &blue_i.0 .0 + &t * (&blue_i.1 .0 - &blue_i.0 .0),
            t.clone(),
        );
        let vi = state.placed_points[i].clone();
        let vj = state.placed_points[j].clone();
        let mut placed = false;
        let mut eps = q(1, 4);
        'search: for _ in 0..200 {
            for (dx, dy) in DIRS {
                let cand = (&c.0 + q_int(dx) * &eps, &c.1 + q_int(dy) * &eps);
                let new_blue = (vi.clone(), cand.clone());
                let new_red = (vj.clone(), cand.clone());
                if knprime_candidate_ok(&state, &cand, &new_blue, &new_red, pending) {
                    points[division_vertex(n, i, j)] = Some(cand.clone());
                    state.blue_segments.push(new_blue.clone());
                    state.red_segments.push(new_red.clone());
                    state.all_segments.push(new_blue);
                    state.all_segments.push(new_red);
                    state.placed_points.push(cand);
                    placed = true;
                    break 'search;
                }
            }
            eps /= q_int(2);
        }
        if !placed {
            return Err(Error::Construction(format!(
                "no placement found for division vertex of ({i},{j})"
            )));
        }
    }
    let points: Vec<Point> = points.into_iter().map(|p| p.unwrap()).collect();
    let drawing = Drawing::new(graph, points)?;
    let mut blue = Vec::new();
    let mut red = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = division_vertex(n, i, j);
            blue.push(crate::graph::edge(i, x));
            red.push(crate::graph::edge(j, x));
        }
    }
    // final re-verification: both classes are pairwise intersecting
    let index_of: BTreeMap<Edge, usize> = drawing
        .graph()
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    for class in [&blue, &red] {
        let idx: Vec<usize> = class.iter().map(|e| index_of[e]).collect();
        if !is_thrackle_class(&drawing, &idx)? {
            return Err(Error::Construction(
                "a class of the subdivision drawing is not pairwise intersecting".into(),
            ));
        }
    }
    Ok(SubdivisionDrawing { n, drawing, blue, red })
}

/// One-bend drawing in which every two edges intersect: vertices on a line,
/// edge t (in an order that reverses the left-of relation) bends at (t, 1).
#[derive(Debug, Clone)]
pub struct OneBendDrawing {
    pub graph: Graph,
    pub vertices: Vec<Point>,
    /// bend points parallel to `graph.edges()`
    pub bends: Vec<Point>,
}

impl OneBendDrawing {
    /// The two straight pieces of edge `e`.
    pub fn segments(&self, e: usize) -> ((Point, Point), (Point, Point)) {
        let (u, v) = self.graph.edges()[e];
        let b = self.bends[e].clone();
        (
            (self.vertices[u].clone(), b.clone()),
            (b, self.vertices[v].clone()),
        )
    }
}

/// Whether the polylines of edges e and f meet (shared vertex or a crossing
/// between any of their pieces).
pub fn one_bend_pair_intersects(d: &OneBendDrawing, e: usize, f: usize) -> Result<bool> {
    let (eu, ev) = d.graph.edges()[e];
    let (fu, fv) = d.graph.edges()[f];
    if eu == fu || eu == fv || ev == fu || ev == fv {
        return Ok(true);
    }
    let (e1, e2) = d.segments(e);
    let (f1, f2) = d.segments(f);
    for a in [&e1, &e2] {
        for b in [&f1, &f2] {
            if segment_relation(&a.0, &a.1, &b.0, &b.1)? == SegmentRelation::ProperCrossing {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Build and verify the one-bend drawing for any simple graph.
pub fn one_bend_drawing(g: &Graph) -> Result<OneBendDrawing> {
    let vertices: Vec<Point> = (0..g.n()).map(|i| (q_usize(i), Q::zero())).collect();
    let mut order: Vec<usize> = (0..g.m()).collect();
    // linear extension of the reverse of "entirely to the left of":
    // descending lexicographic on (min, max)
    order.sort_by(|&a, &b| g.edges()[b].cmp(&g.edges()[a]));
    let mut bends = vec![(Q::zero(), Q::zero()); g.m()];
    for (pos, &e) in order.iter().enumerate() {
        bends[e] = (q_usize(pos + 1), q_int(1));
    }
    let d = OneBendDrawing {
        graph: g.clone(),
        vertices,
        bends,
    };
    for e in 0..g.m() {
        for f in e + 1..g.m() {
            if !one_bend_pair_intersects(&d, e, f)? {
                let (a, b) = g.edges()[e];
                let (c, dd) = g.edges()[f];
                return Err(Error::Construction(format!(
                    "one-bend edges ({a},{b}) and ({c},{dd}) fail to intersect"
                )));
            }
        }
    }
    Ok(d)
}

/// For a straight-line drawing of the 2-claw: true iff it is NOT a
/// geometric thrackle (some pair of edges fails to intersect). Rejects
/// drawings of any other graph.
pub fn check_not_geometric_thrackle(d: &Drawing) -> Result<bool> {
    let tc = two_claw();
    if d.graph().n() != tc.n() || d.graph().edges() != tc.edges() {
        return Err(Error::InvalidInput(
            "expected a drawing of the 2-claw (root 0, middles 1..3, leaves 4..6)".into(),
        ));
    }
    Ok(!is_geometric_thrackle(d)?)
}
