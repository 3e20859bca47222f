//! Linear layouts: vertex orderings, the cross/nest/disjoint trichotomy,
//! rainbows and queue assignment, two-track drawings with their thrackle and
//! noncrossing partitions, and (k,t)-track layouts.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::error::Error;
use crate::graph::{edge, Edge, EdgePartition, Graph};
use crate::Result;

/// A linear ordering of the vertices 0..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidInput(
                    "ordering is not a permutation of 0..n".into(),
                ));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrdering::new(order).expect("reverse of a permutation")
    }

    /// Edge endpoints as ordered positions (lo, hi).
    pub fn span(&self, e: Edge) -> (usize, usize) {
        let (a, b) = (self.pos[e.0], self.pos[e.1]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Relative position of two edges under a vertex ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    Adjacent,
    Cross,
    Nest,
    Disjoint,
}

pub fn classify_pair(pi: &VertexOrdering, e: Edge, f: Edge) -> Result<PairRelation> {
    if e == f {
        return Err(Error::InvalidInput("classify_pair needs two distinct edges".into()));
    }
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return Ok(PairRelation::Adjacent);
    }
    let (a, b) = pi.span(e);
    let (c, d) = pi.span(f);
    // normalize so the first interval starts first
    let ((_a, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
    Ok(if b < c {
        PairRelation::Disjoint
    } else if d < b {
        PairRelation::Nest
    } else {
        PairRelation::Cross
    })
}

/// Size of the largest pairwise-nested edge set (rainbow) under the ordering,
/// by longest-chain dynamic programming over strict interval containment.
pub fn max_rainbow(g: &Graph, pi: &VertexOrdering) -> usize {
    max_rainbow_with_witness(g, pi).0
}

pub fn max_rainbow_with_witness(g: &Graph, pi: &VertexOrdering) -> (usize, Vec<Edge>) {
    let spans: Vec<(usize, usize)> = g.edges().iter().map(|&e| pi.span(e)).collect();
    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&i| spans[i].1 - spans[i].0);
    let mut chain = vec![1usize; spans.len()];
    let mut prev = vec![usize::MAX; spans.len()];
    let mut best = 0usize;
    let mut best_at = usize::MAX;
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[..oi] {
            // j strictly inside i
            if spans[i].0 < spans[j].0 && spans[j].1 < spans[i].1 && chain[j] + 1 > chain[i] {
                chain[i] = chain[j] + 1;
                prev[i] = j;
            }
        }
        if chain[i] > best {
            best = chain[i];
            best_at = i;
        }
    }
    let mut witness = Vec::new();
    let mut cur = best_at;
    while cur != usize::MAX {
        witness.push(g.edges()[cur]);
        cur = prev[cur];
    }
    (best, witness)
}

/// Kinds of linear layout classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutKind {
    Stack,
    Queue,
}

/// A vertex ordering together with an edge partition whose classes are all
/// stacks (no crossing) or all queues (no nesting).
#[derive(Debug, Clone)]
pub struct LinearLayout {
    pub ordering: VertexOrdering,
    pub classes: EdgePartition,
    pub kind: LayoutKind,
}

/// No two edges of the class nest strictly under the ordering.
pub fn is_queue(pi: &VertexOrdering, class: &[Edge]) -> bool {
    for (i, &e) in class.iter().enumerate() {
        for &f in &class[i + 1..] {
            let (a, b) = pi.span(e);
            let (c, d) = pi.span(f);
            if (a < c && d < b) || (c < a && b < d) {
                return false;
            }
        }
    }
    true
}

/// No two edges of the class cross under the ordering.
pub fn is_stack(pi: &VertexOrdering, class: &[Edge]) -> bool {
    for (i, &e) in class.iter().enumerate() {
        for &f in &class[i + 1..] {
            if matches!(classify_pair(pi, e, f), Ok(PairRelation::Cross)) {
                return false;
            }
        }
    }
    true
}

/// Assign each edge to queue i where i is the maximum number of edges
/// pairwise nested strictly inside it. The class count always equals
/// max_rainbow(G, π), and every class is a queue.
pub fn greedy_queue_assign(g: &Graph, pi: &VertexOrdering) -> Result<LinearLayout> {
    let heights = nesting_heights(g, pi);
    let count = heights.iter().copied().max().unwrap_or(0);
    let mut classes = vec![Vec::new(); count];
    for (i, &e) in g.edges().iter().enumerate() {
        classes[heights[i] - 1].push(e);
    }
    Ok(LinearLayout {
        ordering: pi.clone(),
        classes: EdgePartition::new(classes.into_iter().map(|c| c.into_iter().collect()).collect())?,
        kind: LayoutKind::Queue,
    })
}

/// Height of each edge in the strict-nesting order: 1 + max height of an edge
/// strictly inside it.
pub(crate) fn nesting_heights(g: &Graph, pi: &VertexOrdering) -> Vec<usize> {
    let spans: Vec<(usize, usize)> = g.edges().iter().map(|&e| pi.span(e)).collect();
    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&i| spans[i].1 - spans[i].0);
    let mut h = vec![1usize; spans.len()];
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[..oi] {
            if spans[i].0 < spans[j].0 && spans[j].1 < spans[i].1 {
                h[i] = h[i].max(h[j] + 1);
            }
        }
    }
    h
}

/// A bipartite graph drawn on two horizontal tracks; edges run between the
/// tracks. Positions are indices into the track sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTrackDrawing {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// Relative position of two edges in a two-track drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoTrackRelation {
    Adjacent,
    Cross,
    Disjoint,
}

impl TwoTrackDrawing {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = top.len() + bottom.len();
        let mut side = vec![u8::MAX; n];
        for &v in &top {
            if v >= n || side[v] != u8::MAX {
                return Err(Error::InvalidInput("tracks do not partition the vertices".into()));
            }
            side[v] = 0;
        }
        for &v in &bottom {
            if v >= n || side[v] != u8::MAX {
                return Err(Error::InvalidInput("tracks do not partition the vertices".into()));
            }
            side[v] = 1;
        }
        let mut es = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n || side[u] == side[v] {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) does not run between the tracks"
                )));
            }
            es.push(edge(u, v));
        }
        es.sort_unstable();
        es.dedup();
        Ok(TwoTrackDrawing { top, bottom, edges: es })
    }

    pub fn n(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    /// Positions of an edge as (top index, bottom index).
    fn coords(&self) -> BTreeMap<Edge, (usize, usize)> {
        let mut top_pos = BTreeMap::new();
        for (i, &v) in self.top.iter().enumerate() {
            top_pos.insert(v, i);
        }
        let mut bot_pos = BTreeMap::new();
        for (i, &v) in self.bottom.iter().enumerate() {
            bot_pos.insert(v, i);
        }
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (t, b) = if top_pos.contains_key(&u) { (u, v) } else { (v, u) };
                ((u, v), (top_pos[&t], bot_pos[&b]))
            })
            .collect()
    }

    pub fn relation(&self, e: Edge, f: Edge) -> TwoTrackRelation {
        let coords = self.coords();
        relation_from_coords(coords[&e], coords[&f])
    }

    /// The same drawing with the bottom track reversed.
    pub fn reversed_bottom(&self) -> TwoTrackDrawing {
        let mut bottom = self.bottom.clone();
        bottom.reverse();
        TwoTrackDrawing {
            top: self.top.clone(),
            bottom,
            edges: self.edges.clone(),
        }
    }
}

fn relation_from_coords(a: (usize, usize), b: (usize, usize)) -> TwoTrackRelation {
    if a.0 == b.0 || a.1 == b.1 {
        return TwoTrackRelation::Adjacent;
    }
    if (a.0 < b.0) == (a.1 < b.1) {
        TwoTrackRelation::Disjoint
    } else {
        TwoTrackRelation::Cross
    }
}

/// Partition the edges of a two-track drawing into 2-track thrackles (classes
/// that are pairwise crossing or adjacent). Edge vw joins class i+1 where i is
/// the maximum size of a pairwise-disjoint edge set entirely below-left of vw.
/// The class count equals the maximum number of pairwise disjoint edges.
pub fn two_track_thrackle_partition(d: &TwoTrackDrawing) -> Result<EdgePartition> {
    let coords = d.coords();
    let mut items: Vec<(Edge, (usize, usize))> =
        d.edges.iter().map(|&e| (e, coords[&e])).collect();
    items.sort_by_key(|&(_, c)| c);
    let mut level = vec![0usize; items.len()];
    for i in 0..items.len() {
        for j in 0..i {
            if items[j].1 .0 < items[i].1 .0 && items[j].1 .1 < items[i].1 .1 {
                level[i] = level[i].max(level[j] + 1);
            }
        }
    }
    let count = level.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); count];
    for (i, &(e, _)) in items.iter().enumerate() {
        classes[level[i]].push(e);
    }
    EdgePartition::new(classes)
}

/// Partition into noncrossing classes by reversing one track and applying the
/// thrackle rule. The class count equals the maximum pairwise-crossing set.
pub fn two_track_noncrossing_partition(d: &TwoTrackDrawing) -> Result<EdgePartition> {
    two_track_thrackle_partition(&d.reversed_bottom())
}

/// A (k,t)-track layout: ordered tracks partitioning the vertices plus an
/// edge coloring with no monochromatic X-crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackLayout {
    pub tracks: Vec<Vec<usize>>,
    pub colors: BTreeMap<Edge, usize>,
}

impl TrackLayout {
    pub fn track_count(&self) -> usize {
        self.tracks.len()
    }

    pub fn color_count(&self) -> usize {
        self.colors.values().copied().max().map_or(0, |m| m + 1)
    }

    /// (track, position) of every vertex.
    pub fn placement(&self) -> Vec<(usize, usize)> {
        let n: usize = self.tracks.iter().map(|t| t.len()).sum();
        let mut place = vec![(usize::MAX, usize::MAX); n];
        for (ti, track) in self.tracks.iter().enumerate() {
            for (pi, &v) in track.iter().enumerate() {
                place[v] = (ti, pi);
            }
        }
        place
    }
}

/// True iff the tracks partition V(G), every edge joins two distinct tracks,
/// every edge is colored, and no two same-colored edges between the same
/// track pair form an X-crossing.
pub fn validate_track_layout(g: &Graph, layout: &TrackLayout) -> bool {
    let total: usize = layout.tracks.iter().map(|t| t.len()).sum();
    if total != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for track in &layout.tracks {
        for &v in track {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    if layout.colors.len() != g.m()
        || !g.edges().iter().all(|e| layout.colors.contains_key(e))
    {
        return false;
    }
    let place = layout.placement();
    for &(u, v) in g.edges() {
        if place[u].0 == place[v].0 {
            return false; // tracks must be independent sets
        }
    }
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if layout.colors[&e] != layout.colors[&f] {
                continue;
            }
            if x_crossing(&place, e, f) {
                return false;
            }
        }
    }
    true
}

/// Two edges X-cross iff they span the same track pair and interleave.
fn x_crossing(place: &[(usize, usize)], e: Edge, f: Edge) -> bool {
    let (a, b) = (place[e.0], place[e.1]);
    let (c, d) = (place[f.0], place[f.1]);
    // orient both edges by track index
    let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
    let (c, d) = if c.0 <= d.0 { (c, d) } else { (d, c) };
    if a.0 != c.0 || b.0 != d.0 {
        return false;
    }
    let s = |x: usize, y: usize| -> i64 { x as i64 - y as i64 };
    s(a.1, c.1) * s(b.1, d.1) < 0
}

/// BFS two-track layering of a forest: even depths on track 0, odd on track 1,
/// both in visit order; edges classed by the parity of the parent's depth.
/// Components are rooted in the given order.
fn forest_two_track(g: &Graph, roots: &[usize]) -> (TrackLayout, Vec<Vec<Edge>>) {
    let mut adj = g.adjacency();
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let mut depth = vec![usize::MAX; g.n()];
    let mut tracks = vec![Vec::new(), Vec::new()];
    let mut classes = vec![Vec::new(), Vec::new()];
    for &root in roots {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        // collect per-layer visit order, then append even layers to track 0
        // and odd layers to track 1
        let mut layers: Vec<Vec<usize>> = vec![vec![root]];
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    if layers.len() <= depth[w] {
                        layers.push(Vec::new());
                    }
                    layers[depth[w]].push(w);
                    queue.push_back(w);
                    classes[depth[v] % 2].push(edge(v, w));
                }
            }
        }
        for (d, layer) in layers.iter().enumerate() {
            tracks[d % 2].extend(layer.iter().copied());
        }
    }
    let mut colors = BTreeMap::new();
    for (c, class) in classes.iter().enumerate() {
        for &e in class {
            colors.insert(e, c);
        }
    }
    // renumber colors densely if class 0 is empty
    if classes[0].is_empty() && !classes[1].is_empty() {
        for v in colors.values_mut() {
            *v = 0;
        }
        classes.swap(0, 1);
    }
    classes.retain(|c| !c.is_empty());
    tracks.retain(|t| !t.is_empty());
    (TrackLayout { tracks, colors }, classes)
}

/// Two-track drawing of a tree with at most two noncrossing classes, from a
/// breadth-first layering at the given root. Siblings are visited in
/// ascending vertex order.
pub fn tree_two_track_layout(g: &Graph, root: usize) -> Result<(TwoTrackDrawing, EdgePartition)> {
    if !g.is_tree() {
        return Err(Error::InvalidInput("tree_two_track_layout needs a tree".into()));
    }
    if root >= g.n() {
        return Err(Error::InvalidInput("root out of range".into()));
    }
    let (layout, classes) = forest_two_track(g, &[root]);
    let top = layout.tracks[0].clone();
    let bottom = layout.tracks.get(1).cloned().unwrap_or_default();
    let drawing = TwoTrackDrawing::new(top, bottom, g.edges().to_vec())?;
    let partition = if g.m() == 0 {
        EdgePartition::new(Vec::new())?
    } else {
        EdgePartition::new(classes.into_iter().map(|c| c.into_iter().collect()).collect())?
    };
    Ok((drawing, partition))
}

/// Track layout of a forest on two tracks with at most two colors, rooting
/// each component at its smallest vertex.
pub fn forest_track_layout(g: &Graph) -> Result<TrackLayout> {
    if !g.is_forest() {
        return Err(Error::InvalidInput("forest_track_layout needs a forest".into()));
    }
    let roots: Vec<usize> = g.components().iter().map(|c| c[0]).collect();
    let (layout, _) = forest_two_track(g, &roots);
    Ok(layout)
}

/// Search for a valid (k,t)-track layout: constructive fallbacks for forests
/// (two tracks, two colors) and for t ≥ n (singleton tracks, one color), then
/// seeded random assignment with first-fit coloring. Returns None when every
/// attempt fails — failure is a value, not an error.
pub fn random_track_layout(
    g: &Graph,
    t: usize,
    k: usize,
    seed: u64,
) -> Result<Option<TrackLayout>> {
    if t < 2 {
        return Err(Error::InvalidInput("random_track_layout needs t >= 2".into()));
    }
    if k == 0 {
        return Ok(None);
    }
    if g.is_forest() && k >= 2 {
        let layout = forest_track_layout(g)?;
        if layout.track_count() <= t {
            debug_assert!(validate_track_layout(g, &layout));
            return Ok(Some(layout));
        }
    }
    if t >= g.n() {
        let layout = TrackLayout {
            tracks: (0..g.n()).map(|v| vec![v]).collect(),
            colors: g.edges().iter().map(|&e| (e, 0)).collect(),
        };
        if validate_track_layout(g, &layout) {
            return Ok(Some(layout));
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        if let Some(layout) = attempt_track_layout(g, t, k, &mut rng) {
            debug_assert!(validate_track_layout(g, &layout));
            return Ok(Some(layout));
        }
    }
    Ok(None)
}

fn attempt_track_layout(g: &Graph, t: usize, k: usize, rng: &mut StdRng) -> Option<TrackLayout> {
    let mut tracks = vec![Vec::new(); t];
    // deal one vertex per track first so all t tracks are used when n >= t
    let mut verts: Vec<usize> = (0..g.n()).collect();
    verts.shuffle(rng);
    for (i, &v) in verts.iter().enumerate() {
        let ti = if i < t { i } else { rng.gen_range(0..t) };
        tracks[ti].push(v);
    }
    for track in tracks.iter_mut() {
        track.shuffle(rng);
    }
    tracks.retain(|t| !t.is_empty());
    let layout_shell = TrackLayout {
        tracks,
        colors: BTreeMap::new(),
    };
    let place = {
        let n = g.n();
        let mut place = vec![(usize::MAX, usize::MAX); n];
        for (ti, track) in layout_shell.tracks.iter().enumerate() {
            for (pi, &v) in track.iter().enumerate() {
                place[v] = (ti, pi);
            }
        }
        place
    };
    for &(u, v) in g.edges() {
        if place[u].0 == place[v].0 {
            return None; // an edge inside one track: resample
        }
    }
    // first-fit colors
    let mut colors: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut edges = g.edges().to_vec();
    edges.shuffle(rng);
    for &e in &edges {
        let mut chosen = None;
        'color: for c in 0..k {
            for (&f, &fc) in &colors {
                if fc == c && x_crossing(&place, e, f) {
                    continue 'color;
                }
            }
            chosen = Some(c);
            break;
        }
        colors.insert(e, chosen?);
    }
    Some(TrackLayout {
        tracks: layout_shell.tracks,
        colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, two_claw, Graph};

    fn id4() -> VertexOrdering {
        VertexOrdering::identity(4)
    }

    #[test]
    fn classify_pair_cases() {
        let pi = id4();
        assert_eq!(classify_pair(&pi, (0, 2), (1, 3)).unwrap(), PairRelation::Cross);
        assert_eq!(classify_pair(&pi, (0, 3), (1, 2)).unwrap(), PairRelation::Nest);
        assert_eq!(classify_pair(&pi, (0, 1), (2, 3)).unwrap(), PairRelation::Disjoint);
        assert_eq!(classify_pair(&pi, (0, 1), (1, 2)).unwrap(), PairRelation::Adjacent);
        assert!(classify_pair(&pi, (0, 1), (0, 1)).is_err());
    }

    #[test]
    fn classify_pair_total_and_reversal_invariant() {
        // exhaustive over orderings of 5 vertices and all disjoint edge pairs
        let mut order = vec![0, 1, 2, 3, 4];
        let orderings = {
            let mut all = Vec::new();
            permute(&mut order, 0, &mut all);
            all
        };
        let edges: Vec<Edge> = complete_graph(5).unwrap().edges().to_vec();
        for ord in orderings {
            let pi = VertexOrdering::new(ord).unwrap();
            let rev = pi.reversed();
            for (i, &e) in edges.iter().enumerate() {
                for &f in &edges[i + 1..] {
                    let r = classify_pair(&pi, e, f).unwrap();
                    let rr = classify_pair(&rev, e, f).unwrap();
                    assert_eq!(r, rr, "reversal must preserve the relation");
                }
            }
        }
    }

    fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }

    #[test]
    fn max_rainbow_examples() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(max_rainbow(&c4, &id4()), 2);
        let matching = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_rainbow(&matching, &id4()), 1);
        assert_eq!(max_rainbow(&complete_graph(4).unwrap(), &id4()), 2);
        let empty = Graph::new(3, []).unwrap();
        assert_eq!(max_rainbow(&empty, &VertexOrdering::identity(3)), 0);
    }

    #[test]
    fn greedy_queue_matches_rainbow() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(3..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let mut order: Vec<usize> = (0..n).collect();
            use rand::seq::SliceRandom;
            order.shuffle(&mut rng);
            let pi = VertexOrdering::new(order).unwrap();
            let layout = greedy_queue_assign(&g, &pi).unwrap();
            assert_eq!(layout.classes.class_count(), max_rainbow(&g, &pi));
            for class in layout.classes.classes() {
                assert!(is_queue(&pi, class));
            }
            layout.classes.validate_against(&g).unwrap();
        }
    }

    #[test]
    fn tree_layout_examples() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (d, p) = tree_two_track_layout(&p4, 0).unwrap();
        assert!(p.class_count() <= 2);
        assert_no_monochromatic_crossing(&d, &p);

        let (d, p) = tree_two_track_layout(&two_claw(), 0).unwrap();
        assert_eq!(p.class_count(), 2);
        assert_no_monochromatic_crossing(&d, &p);

        let star = Graph::new(6, (1..6).map(|v| (0, v))).unwrap();
        let (d, p) = tree_two_track_layout(&star, 0).unwrap();
        assert_eq!(p.class_count(), 1);
        assert_no_monochromatic_crossing(&d, &p);

        assert!(tree_two_track_layout(&complete_graph(4).unwrap(), 0).is_err());
    }

    fn assert_no_monochromatic_crossing(d: &TwoTrackDrawing, p: &EdgePartition) {
        for class in p.classes() {
            for (i, &e) in class.iter().enumerate() {
                for &f in &class[i + 1..] {
                    assert_ne!(d.relation(e, f), TwoTrackRelation::Cross);
                }
            }
        }
    }

    #[test]
    fn thrackle_partition_k22() {
        let aligned = TwoTrackDrawing::new(
            vec![0, 1],
            vec![2, 3],
            vec![(0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap();
        let p = two_track_thrackle_partition(&aligned).unwrap();
        assert_eq!(p.class_count(), 2);
        // every class pairwise non-disjoint
        for class in p.classes() {
            for (i, &e) in class.iter().enumerate() {
                for &f in &class[i + 1..] {
                    assert_ne!(aligned.relation(e, f), TwoTrackRelation::Disjoint);
                }
            }
        }
        // K_{2,2} is symmetric under reversal: one parallel pair either way
        let reversed = aligned.reversed_bottom();
        let p = two_track_thrackle_partition(&reversed).unwrap();
        assert_eq!(p.class_count(), 2);
        // and the noncrossing dual
        let q = two_track_noncrossing_partition(&aligned).unwrap();
        assert_eq!(q.class_count(), 2);
        for class in q.classes() {
            for (i, &e) in class.iter().enumerate() {
                for &f in &class[i + 1..] {
                    assert_ne!(aligned.relation(e, f), TwoTrackRelation::Cross);
                }
            }
        }
    }

    #[test]
    fn reversal_swaps_matching_partitions() {
        // two parallel edges: disjoint when aligned, crossing when reversed
        let aligned =
            TwoTrackDrawing::new(vec![0, 1], vec![2, 3], vec![(0, 2), (1, 3)]).unwrap();
        assert_eq!(two_track_thrackle_partition(&aligned).unwrap().class_count(), 2);
        assert_eq!(two_track_noncrossing_partition(&aligned).unwrap().class_count(), 1);
        let reversed = aligned.reversed_bottom();
        assert_eq!(two_track_thrackle_partition(&reversed).unwrap().class_count(), 1);
        assert_eq!(two_track_noncrossing_partition(&reversed).unwrap().class_count(), 2);
    }

    fn brute_max(d: &TwoTrackDrawing, want: TwoTrackRelation) -> usize {
        let m = d.edges.len();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let chosen: Vec<Edge> = (0..m)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| d.edges[i])
                .collect();
            if chosen.len() <= best {
                continue;
            }
            let ok = chosen.iter().enumerate().all(|(i, &e)| {
                chosen[i + 1..].iter().all(|&f| d.relation(e, f) == want)
            });
            if ok {
                best = chosen.len();
            }
        }
        best
    }

    #[test]
    fn partitions_match_brute_force() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..40 {
            let a = rng.gen_range(2..5);
            let b = rng.gen_range(2..5);
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    if rng.gen_bool(0.5) {
                        edges.push((u, a + v));
                    }
                }
            }
            if edges.is_empty() || edges.len() > 12 {
                continue;
            }
            use rand::seq::SliceRandom;
            let mut top: Vec<usize> = (0..a).collect();
            let mut bottom: Vec<usize> = (a..a + b).collect();
            top.shuffle(&mut rng);
            bottom.shuffle(&mut rng);
            let d = TwoTrackDrawing::new(top, bottom, edges).unwrap();
            let p = two_track_thrackle_partition(&d).unwrap();
            assert_eq!(p.class_count(), brute_max(&d, TwoTrackRelation::Disjoint));
            let q = two_track_noncrossing_partition(&d).unwrap();
            assert_eq!(q.class_count(), brute_max(&d, TwoTrackRelation::Cross));
        }
    }

    #[test]
    fn reversal_swaps_cross_and_disjoint() {
        let d = TwoTrackDrawing::new(
            vec![0, 1, 2],
            vec![3, 4, 5],
            vec![(0, 3), (0, 5), (1, 4), (2, 3), (2, 5)],
        )
        .unwrap();
        let r = d.reversed_bottom();
        for (i, &e) in d.edges.iter().enumerate() {
            for &f in &d.edges[i + 1..] {
                let before = d.relation(e, f);
                let after = r.relation(e, f);
                match before {
                    TwoTrackRelation::Adjacent => assert_eq!(after, TwoTrackRelation::Adjacent),
                    TwoTrackRelation::Cross => assert_eq!(after, TwoTrackRelation::Disjoint),
                    TwoTrackRelation::Disjoint => assert_eq!(after, TwoTrackRelation::Cross),
                }
            }
        }
    }

    #[test]
    fn track_layout_validation_and_search() {
        let (layout_ok, k3) = {
            let k3 = complete_graph(3).unwrap();
            let layout = TrackLayout {
                tracks: vec![vec![0], vec![1], vec![2]],
                colors: k3.edges().iter().map(|&e| (e, 0)).collect(),
            };
            (layout, k3)
        };
        assert!(validate_track_layout(&k3, &layout_ok));

        // forest fallback
        let forest = Graph::new(7, [(0, 1), (1, 2), (3, 4), (3, 5), (5, 6)]).unwrap();
        let found = random_track_layout(&forest, 2, 2, 0).unwrap();
        assert!(found.is_some());
        assert!(validate_track_layout(&forest, &found.unwrap()));

        // K_3 with three tracks
        let found = random_track_layout(&k3, 3, 1, 0).unwrap();
        assert!(found.is_some());

        // K_6 on two tracks with one color is impossible
        let k6 = complete_graph(6).unwrap();
        assert!(random_track_layout(&k6, 2, 1, 0).unwrap().is_none());

        // a deliberate X-crossing fails validation
        let g = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let bad = TrackLayout {
            tracks: vec![vec![0, 1], vec![3, 2]],
            colors: g.edges().iter().map(|&e| (e, 0)).collect(),
        };
        assert!(!validate_track_layout(&g, &bad));
        let good = TrackLayout {
            tracks: vec![vec![0, 1], vec![2, 3]],
            colors: g.edges().iter().map(|&e| (e, 0)).collect(),
        };
        assert!(validate_track_layout(&g, &good));
    }
}
