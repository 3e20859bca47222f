//! Convex thrackles: chord crossing predicates under a circular vertex
//! ordering, thrackled-matching partitions of complete graphs, the
//! track-to-convex composition, queue/arch partitions, circular graphs with
//! the spaced-set recursion, and Hamiltonian-decomposition partitions.

use std::collections::{BTreeMap, HashMap};

use crate::error::Error;
use crate::graph::{complete_graph, edge, Edge, EdgePartition, Graph};
use crate::linear::{nesting_heights, TrackLayout, VertexOrdering};
use crate::Result;

/// Relative position of two chords of a convex polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircularRelation {
    Adjacent,
    Cross,
    Disjoint,
}

/// x strictly inside the arc walked from a to b in increasing circular order.
fn arc_contains(n: usize, a: usize, b: usize, x: usize) -> bool {
    let d = (b + n - a) % n;
    let t = (x + n - a) % n;
    0 < t && t < d
}

/// Two chords with four distinct endpoints cross iff exactly one endpoint of
/// one lies strictly inside either arc spanned by the other.
pub fn chords_cross(pi: &VertexOrdering, e: Edge, f: Edge) -> bool {
    let n = pi.n();
    let (a, b) = (pi.pos(e.0), pi.pos(e.1));
    arc_contains(n, a, b, pi.pos(f.0)) != arc_contains(n, a, b, pi.pos(f.1))
}

pub fn classify_chords(pi: &VertexOrdering, e: Edge, f: Edge) -> Result<CircularRelation> {
    if e == f {
        return Err(Error::InvalidInput("classify_chords needs two distinct edges".into()));
    }
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return Ok(CircularRelation::Adjacent);
    }
    Ok(if chords_cross(pi, e, f) {
        CircularRelation::Cross
    } else {
        CircularRelation::Disjoint
    })
}

/// Every pair of edges either shares an endpoint or crosses.
pub fn is_convex_thrackle(pi: &VertexOrdering, class: &[Edge]) -> bool {
    for (i, &e) in class.iter().enumerate() {
        for &f in &class[i + 1..] {
            if e == f {
                return false;
            }
            if matches!(classify_chords(pi, e, f), Ok(CircularRelation::Disjoint)) {
                return false;
            }
        }
    }
    true
}

/// A thrackled matching: pairwise properly crossing chords.
pub fn is_thrackled_matching(pi: &VertexOrdering, class: &[Edge]) -> bool {
    for (i, &e) in class.iter().enumerate() {
        for &f in &class[i + 1..] {
            if !matches!(classify_chords(pi, e, f), Ok(CircularRelation::Cross)) {
                return false;
            }
        }
    }
    true
}

/// Maximum number of pairwise disjoint chords (no shared endpoints, no
/// crossings), by interval dynamic programming over the circular positions.
pub fn max_disjoint_chords(g: &Graph, pi: &VertexOrdering) -> usize {
    let n = pi.n();
    // chords as position intervals lo < hi; disjoint chords are exactly the
    // laminar interval families (nested or side by side)
    let mut at_lo: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for &e in g.edges() {
        let (lo, hi) = pi.span(e);
        at_lo[lo].push(hi);
    }
    let mut memo: HashMap<(usize, usize), usize> = HashMap::new();
    fn solve(
        x: usize,
        y: usize,
        at_lo: &[Vec<usize>],
        memo: &mut HashMap<(usize, usize), usize>,
    ) -> usize {
        if x >= at_lo.len() || x > y {
            return 0;
        }
        if let Some(&v) = memo.get(&(x, y)) {
            return v;
        }
        let mut best = solve(x + 1, y, at_lo, memo);
        for &b in &at_lo[x] {
            if b <= y {
                let inner = solve(x + 1, b.wrapping_sub(1), at_lo, memo);
                let right = solve(b + 1, y, at_lo, memo);
                best = best.max(1 + inner + right);
            }
        }
        memo.insert((x, y), best);
        best
    }
    if n == 0 {
        return 0;
    }
    solve(0, n - 1, &at_lo, &mut memo)
}

/// Class count of the distance-block partition of K_n into thrackled
/// matchings: sum of ceil(n/d) over distances d = 1..floor(n/2).
pub fn matchings_class_count(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        _ => (1..=n / 2).map(|d| n.div_ceil(d)).sum(),
    }
}

/// Partition E(K_n) into thrackled matchings under the circular order: the
/// distance-d edges split into blocks of up to d consecutive starting
/// vertices; the antipodal class of even n splits into two blocks.
pub fn complete_matching_partition(n: usize) -> Result<(VertexOrdering, EdgePartition)> {
    if n == 0 {
        return Err(Error::InvalidInput("complete_matching_partition needs n >= 1".into()));
    }
    let pi = VertexOrdering::identity(n);
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for d in 1..=n / 2 {
        if 2 * d < n {
            for block in 0..n.div_ceil(d) {
                let class: Vec<Edge> = (block * d..((block + 1) * d).min(n))
                    .map(|i| edge(i, (i + d) % n))
                    .collect();
                classes.push(class);
            }
        } else {
            // antipodal chords all pairwise cross; two contiguous blocks
            let half = n / 2;
            let cut = half.div_ceil(2).max(1);
            let first: Vec<Edge> = (0..cut.min(half)).map(|i| edge(i, i + half)).collect();
            let second: Vec<Edge> = (cut..half).map(|i| edge(i, i + half)).collect();
            classes.push(first);
            if !second.is_empty() {
                classes.push(second);
            }
        }
    }
    let partition = EdgePartition::new(classes)?;
    partition.validate_against(&complete_graph(n)?)?;
    for class in partition.classes() {
        if !is_thrackled_matching(&pi, class) {
            return Err(Error::Verification(
                "distance-block class is not a thrackled matching".into(),
            ));
        }
    }
    if n >= 3 && partition.class_count() != matchings_class_count(n) {
        return Err(Error::Verification(format!(
            "expected {} matching classes, built {}",
            matchings_class_count(n),
            partition.class_count()
        )));
    }
    Ok((pi, partition))
}

/// Hand-checked optimal partitions of K_3, K_4, K_5 into thrackled matchings
/// under the circular order.
pub fn small_complete_partition(t: usize) -> Result<EdgePartition> {
    let classes: Vec<Vec<Edge>> = match t {
        3 => vec![vec![(0, 1)], vec![(1, 2)], vec![(0, 2)]],
        4 => vec![
            vec![(0, 2), (1, 3)],
            vec![(0, 1)],
            vec![(1, 2)],
            vec![(2, 3)],
            vec![(0, 3)],
        ],
        5 => vec![
            vec![(0, 2), (1, 3)],
            vec![(1, 4), (0, 3)],
            vec![(2, 4)],
            vec![(0, 1)],
            vec![(1, 2)],
            vec![(2, 3)],
            vec![(3, 4)],
            vec![(0, 4)],
        ],
        _ => {
            return Err(Error::InvalidInput(
                "small_complete_partition is defined for t in {3, 4, 5}".into(),
            ))
        }
    };
    let partition = EdgePartition::new(classes)?;
    partition.validate_against(&complete_graph(t)?)?;
    let pi = VertexOrdering::identity(t);
    for class in partition.classes() {
        if !is_thrackled_matching(&pi, class) {
            return Err(Error::Verification("small partition class is not a thrackled matching".into()));
        }
    }
    Ok(partition)
}

/// Compose a (k,t)-track layout of G with a partition of E(K_t) into
/// thrackled matchings: concatenating the tracks in order gives a circular
/// ordering under which the edges split into at most k * p convex thrackles,
/// classed by (layout color, matching class of the track pair).
pub fn compose_track_to_convex(
    g: &Graph,
    layout: &TrackLayout,
    pattern: &EdgePartition,
) -> Result<(VertexOrdering, EdgePartition)> {
    if !crate::linear::validate_track_layout(g, layout) {
        return Err(Error::InvalidInput("invalid track layout for the graph".into()));
    }
    let t = layout.track_count();
    pattern.validate_against(&complete_graph(t)?)?;
    let pi_t = VertexOrdering::identity(t);
    for class in pattern.classes() {
        if !is_thrackled_matching(&pi_t, class) {
            return Err(Error::InvalidInput(
                "pattern classes must be thrackled matchings of the track graph".into(),
            ));
        }
    }
    let mut pattern_class: BTreeMap<Edge, usize> = BTreeMap::new();
    for (j, class) in pattern.classes().iter().enumerate() {
        for &e in class {
            pattern_class.insert(e, j);
        }
    }
    let order: Vec<usize> = layout.tracks.iter().flatten().copied().collect();
    let pi = VertexOrdering::new(order)?;
    let place = layout.placement();
    let mut buckets: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
    for &e in g.edges() {
        let (a, b) = (place[e.0].0, place[e.1].0);
        let j = pattern_class[&edge(a, b)];
        let color = layout.colors[&e];
        buckets.entry((color, j)).or_default().push(e);
    }
    let classes: Vec<Vec<Edge>> = buckets.into_values().collect();
    let partition = EdgePartition::new(classes)?;
    partition.validate_against(g)?;
    for class in partition.classes() {
        if !is_convex_thrackle(&pi, class) {
            return Err(Error::Verification(
                "composed class is not a convex thrackle".into(),
            ));
        }
    }
    let cap = layout.color_count() * pattern.class_count();
    if partition.class_count() > cap {
        return Err(Error::Verification(format!(
            "composition produced {} classes, above the k*p bound {}",
            partition.class_count(),
            cap
        )));
    }
    Ok((pi, partition))
}

/// Upper bound on the queue/arch class count: sum of floor(k/i) for i = 1..k.
pub fn queue_arch_bound(k: usize) -> usize {
    (1..=k).map(|i| k / i).sum()
}

/// Partition the edges into convex thrackles by queue (nesting height) and
/// arch (rank in the left-to-right chain of disjoint same-queue edges).
/// Returns the partition and k, the maximum number of pairwise disjoint
/// chords; the class count is at most sum_i floor(k/i).
pub fn convex_queue_arch_partition(
    g: &Graph,
    pi: &VertexOrdering,
) -> Result<(EdgePartition, usize)> {
    if pi.n() != g.n() {
        return Err(Error::InvalidInput("ordering size does not match the graph".into()));
    }
    let heights = nesting_heights(g, pi);
    let spans: Vec<(usize, usize)> = g.edges().iter().map(|&e| pi.span(e)).collect();
    // rank within each queue: longest chain of same-queue edges lying
    // entirely to the left, by increasing right endpoint
    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&i| spans[i].1);
    let mut rank = vec![0usize; spans.len()];
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[..oi] {
            if heights[j] == heights[i] && spans[j].1 < spans[i].0 {
                rank[i] = rank[i].max(rank[j] + 1);
            }
        }
    }
    let mut buckets: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
    for (i, &e) in g.edges().iter().enumerate() {
        buckets.entry((heights[i], rank[i])).or_default().push(e);
    }
    let partition = EdgePartition::new(buckets.into_values().collect())?;
    partition.validate_against(g)?;
    for class in partition.classes() {
        if !is_convex_thrackle(&pi, class) {
            return Err(Error::Verification(
                "queue/arch class is not a convex thrackle".into(),
            ));
        }
    }
    let k = max_disjoint_chords(g, pi);
    if partition.class_count() > queue_arch_bound(k) {
        return Err(Error::Verification(format!(
            "queue/arch partition has {} classes, above the bound {}",
            partition.class_count(),
            queue_arch_bound(k)
        )));
    }
    Ok((partition, k))
}

pub fn circular_distance(n: usize, i: usize, j: usize) -> usize {
    let d = (j + n - i) % n;
    d.min(n - d)
}

/// The circulant graph on n vertices with edges between all pairs at
/// circular distance at least d.
pub fn circular_graph(n: usize, d: usize) -> Result<Graph> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidInput("circular_graph needs n >= 1 and d >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if circular_distance(n, i, j) >= d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// One step of the spaced-set recursion on a graph whose vertices sit in
/// circular position 0..n.
#[derive(Debug, Clone)]
pub struct ConstructionStep {
    pub n: usize,
    pub ell: usize,
    pub s_vertices: Vec<usize>,
    pub classes: EdgePartition,
    /// residual graph on the surviving vertices, relabeled in circular order
    pub residual: Graph,
    /// original label of each residual vertex
    pub residual_labels: Vec<usize>,
    /// nominal residual parameters (floor(d*n/(d+1)), d+1)
    pub nominal: (usize, usize),
    /// whether the actual residual equals the nominal circulant graph
    pub residual_is_nominal: bool,
}

/// Whether ceil(n/(d+1)) vertices can be placed with every circular gap equal
/// to d or d+1. Fails exactly when n < ceil(n/(d+1)) * d, which happens once
/// d grows past roughly sqrt(n).
pub fn spaced_step_feasible(n: usize, d: usize) -> bool {
    n.div_ceil(d + 1) * d <= n
}

/// Choose ceil(n/(d+1)) spaced vertices starting at 0: the gaps of d+1 first,
/// then gaps of d as forced by divisibility. Caller checks feasibility.
fn spaced_set(n: usize, d: usize) -> Vec<usize> {
    let s = n.div_ceil(d + 1);
    let a = n - s * d;
    let mut v = 0usize;
    let mut set = Vec::with_capacity(s);
    for j in 0..s {
        set.push(v);
        v += if j < a { d + 1 } else { d };
    }
    debug_assert_eq!(v, n);
    set
}

/// Remove a spaced set S and the distance-{d, d+1} edges: each removed edge
/// joins the class of an S-vertex it touches or whose position lies on its
/// shortest boundary arc. Every class is a convex thrackle; the residual is
/// the untouched remainder.
pub fn construction_step_on(g: &Graph, d: usize) -> Result<ConstructionStep> {
    let n = g.n();
    if n < 3 || d == 0 || d >= n / 2 {
        return Err(Error::InvalidInput(format!(
            "spaced-set step needs n >= 3 and 1 <= d < floor(n/2), got n={n}, d={d}"
        )));
    }
    if !spaced_step_feasible(n, d) {
        return Err(Error::InvalidInput(format!(
            "no set of {} vertices spaces {n} positions with gaps of {d} or {}",
            n.div_ceil(d + 1),
            d + 1
        )));
    }
    let s_vertices = spaced_set(n, d);
    let s = s_vertices.len();
    let mut in_s = vec![false; n];
    for &v in &s_vertices {
        in_s[v] = true;
    }
    let mut class_of_s: BTreeMap<usize, Vec<Edge>> = s_vertices.iter().map(|&v| (v, Vec::new())).collect();
    // A consecutive S-pair (u,w) at gap exactly d leaves the edge
    // (u-1, w+1) spanning both removed vertices, which would sit one unit
    // too close in the relabeled residual and poison later rounds. Pin the
    // pair's own edge to the counterclockwise class c_u and route the
    // straddling edge into the clockwise class c_w: with (u,w) absent from
    // c_w, the straddler crosses every chord and w-edge there (anything
    // landing strictly inside its span would be shorter than distance d).
    let mut forced: BTreeMap<Edge, usize> = BTreeMap::new();
    for (j, &u) in s_vertices.iter().enumerate() {
        let w = s_vertices[(j + 1) % s];
        if (w + n - u) % n == d {
            forced.insert(edge(u, w), u);
            let x = (u + n - 1) % n;
            let y = (w + 1) % n;
            if !in_s[x] && !in_s[y] {
                forced.insert(edge(x, y), w);
            }
        }
    }
    let mut residual_edges: Vec<Edge> = Vec::new();
    for &(x, y) in g.edges() {
        if let Some(&v) = forced.get(&(x, y)) {
            class_of_s.get_mut(&v).unwrap().push((x, y));
            continue;
        }
        if in_s[x] || in_s[y] {
            let v = if in_s[x] { x } else { y };
            class_of_s.get_mut(&v).unwrap().push((x, y));
            continue;
        }
        let dist = circular_distance(n, x, y);
        if dist == d || dist == d + 1 {
            if let Some(v) = first_s_on_shortest_arc(n, x, y, &in_s) {
                class_of_s.get_mut(&v).unwrap().push((x, y));
                continue;
            }
        }
        residual_edges.push((x, y));
    }
    let classes: Vec<Vec<Edge>> = class_of_s.into_values().filter(|c| !c.is_empty()).collect();
    let partition = EdgePartition::new(classes)?;
    let pi = VertexOrdering::identity(n);
    for class in partition.classes() {
        if !is_convex_thrackle(&pi, class) {
            return Err(Error::Verification(
                "spaced-set class is not a convex thrackle".into(),
            ));
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    let relabel: HashMap<usize, usize> =
        survivors.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let residual = Graph::new(
        survivors.len(),
        residual_edges.iter().map(|&(x, y)| (relabel[&x], relabel[&y])),
    )?;
    let nominal = (d * n / (d + 1), d + 1);
    debug_assert_eq!(nominal.0, n - s);
    let residual_is_nominal = residual.n() == nominal.0
        && residual.edges() == circular_graph(nominal.0.max(1), nominal.1)?.edges();
    Ok(ConstructionStep {
        n,
        ell: d,
        s_vertices,
        classes: partition,
        residual,
        residual_labels: survivors,
        nominal,
        residual_is_nominal,
    })
}

/// The spaced-set step applied to the circulant graph itself.
pub fn convex_construction_step(n: usize, d: usize) -> Result<ConstructionStep> {
    construction_step_on(&circular_graph(n, d)?, d)
}

/// First S-vertex strictly inside the shortest arc between x and y, walking
/// from the smaller endpoint; an antipodal tie walks clockwise.
fn first_s_on_shortest_arc(n: usize, x: usize, y: usize, in_s: &[bool]) -> Option<usize> {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    let fwd = y - x;
    let bwd = n - fwd;
    let step_fwd = fwd <= bwd; // clockwise on a tie
    let len = fwd.min(bwd);
    for t in 1..len {
        let v = if step_fwd { (x + t) % n } else { (x + n - t) % n };
        if in_s[v] {
            return Some(v);
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct ColoringStep {
    pub n: usize,
    pub ell: usize,
    pub class_count: usize,
    pub residual_is_nominal: bool,
}

/// The full recursion output for K_n under the circular order.
#[derive(Debug, Clone)]
pub struct UpperColoring {
    pub partition: EdgePartition,
    pub steps: Vec<ColoringStep>,
    pub base_class_used: bool,
    /// classes spent by the distance-block finish when the spaced-set step
    /// became infeasible before the base case (0 when unused)
    pub terminal_classes: usize,
}

/// Partition a remainder graph into convex thrackles by grouping chords of
/// equal circular distance k into blocks of k consecutive starting positions:
/// chords (i, i+k) and (j, j+k) with 0 < j-i < k properly cross, and the
/// antipodal chords (when 2k = n) pairwise cross as one block. Costs
/// ceil(n/k) classes per distance, so it is only worthwhile once few
/// distances remain.
pub fn distance_block_partition(g: &Graph) -> Result<Vec<Vec<Edge>>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidInput("distance_block_partition needs n >= 3".into()));
    }
    let mut blocks: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
    for &(x, y) in g.edges() {
        let k = circular_distance(n, x, y);
        let key = if 2 * k == n {
            (k, 0)
        } else {
            let start = if y - x == k { x } else { y };
            (k, start / k)
        };
        blocks.entry(key).or_default().push((x, y));
    }
    let pi = VertexOrdering::identity(n);
    let classes: Vec<Vec<Edge>> = blocks.into_values().collect();
    for class in &classes {
        if !is_convex_thrackle(&pi, class) {
            return Err(Error::Verification(
                "distance-block class is not a convex thrackle".into(),
            ));
        }
    }
    Ok(classes)
}

/// Partition E(K_n) into convex thrackles by iterating the spaced-set step
/// from distance 1. The recursion ends either at the base case (remainder
/// distance threshold reaches floor(m/2), leaving a single thrackle) or,
/// when the residual is too small for the next spaced set, with the
/// distance-block finish.
pub fn convex_kn_upper_coloring(n: usize) -> Result<UpperColoring> {
    if n < 3 {
        return Err(Error::InvalidInput("convex_kn_upper_coloring needs n >= 3".into()));
    }
    let pi = VertexOrdering::identity(n);
    let mut g = complete_graph(n)?;
    let mut orig: Vec<usize> = (0..n).collect();
    let mut d = 1usize;
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    let mut steps = Vec::new();
    let mut base_class_used = false;
    let mut terminal_classes = 0usize;
    loop {
        if g.m() == 0 {
            break;
        }
        if d >= g.n() / 2 {
            let class: Vec<Edge> = g.edges().iter().map(|&(x, y)| edge(orig[x], orig[y])).collect();
            if !is_convex_thrackle(&pi, &class) {
                return Err(Error::Verification(
                    "base-case remainder is not a single convex thrackle".into(),
                ));
            }
            classes.push(class);
            base_class_used = true;
            break;
        }
        if !spaced_step_feasible(g.n(), d) {
            for class in distance_block_partition(&g)? {
                let mapped: Vec<Edge> = class.iter().map(|&(x, y)| edge(orig[x], orig[y])).collect();
                if !is_convex_thrackle(&pi, &mapped) {
                    return Err(Error::Verification(
                        "distance-block class fails under the original circular order".into(),
                    ));
                }
                classes.push(mapped);
                terminal_classes += 1;
            }
            break;
        }
        let step = construction_step_on(&g, d)?;
        for class in step.classes.classes() {
            let mapped: Vec<Edge> = class.iter().map(|&(x, y)| edge(orig[x], orig[y])).collect();
            if !is_convex_thrackle(&pi, &mapped) {
                return Err(Error::Verification(
                    "spaced-set class fails under the original circular order".into(),
                ));
            }
            classes.push(mapped);
        }
        steps.push(ColoringStep {
            n: step.n,
            ell: step.ell,
            class_count: step.classes.class_count(),
            residual_is_nominal: step.residual_is_nominal,
        });
        orig = step.residual_labels.iter().map(|&v| orig[v]).collect();
        g = step.residual;
        d += 1;
    }
    let partition = EdgePartition::new(classes)?;
    partition.validate_against(&complete_graph(n)?)?;
    Ok(UpperColoring {
        partition,
        steps,
        base_class_used,
        terminal_classes,
    })
}

/// Partition E(K_n) into ceil((n-1)/2) classes: Hamiltonian cycles for odd n;
/// for even n, Hamiltonian cycles of K_{n-1} plus the star at vertex n-1.
pub fn walecki_partition(n: usize) -> Result<EdgePartition> {
    if n < 3 {
        return Err(Error::InvalidInput("walecki_partition needs n >= 3".into()));
    }
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    let rim_n = if n % 2 == 1 { n } else { n - 1 };
    // decompose K_{rim_n} (odd) into (rim_n - 1)/2 Hamiltonian zigzag cycles
    // around hub rim_n - 1
    let hub = rim_n - 1;
    let rim = rim_n - 1; // rim vertices 0..rim
    let m = rim / 2;
    for i in 0..m {
        let mut seq = vec![i];
        for step in 1..m {
            seq.push((i + step) % rim);
            seq.push((i + rim - step) % rim);
        }
        seq.push((i + m) % rim);
        let mut cycle = vec![edge(hub, seq[0]), edge(hub, *seq.last().unwrap())];
        for w in seq.windows(2) {
            cycle.push(edge(w[0], w[1]));
        }
        cycle.sort_unstable();
        classes.push(cycle);
    }
    if n % 2 == 0 {
        classes.push((0..n - 1).map(|v| edge(v, n - 1)).collect());
    }
    let partition = EdgePartition::new(classes)?;
    partition.validate_against(&complete_graph(n)?)?;
    verify_walecki(n, &partition)?;
    Ok(partition)
}

/// Check the structural shape of a Hamiltonian-decomposition partition:
/// cycle classes are single spanning cycles (of K_n for odd n, of K_{n-1}
/// for even n); even n additionally ends with the full star at n-1.
pub fn verify_walecki(n: usize, partition: &EdgePartition) -> Result<()> {
    let expected = (n - 1).div_ceil(2);
    if partition.class_count() != expected {
        return Err(Error::Verification(format!(
            "expected {expected} classes, found {}",
            partition.class_count()
        )));
    }
    let cycle_span = if n % 2 == 1 { n } else { n - 1 };
    let cycle_classes = if n % 2 == 1 { expected } else { expected - 1 };
    for (i, class) in partition.classes().iter().enumerate() {
        if i < cycle_classes {
            if !is_spanning_cycle(class, cycle_span) {
                return Err(Error::Verification(format!(
                    "class {i} is not a spanning cycle on {cycle_span} vertices"
                )));
            }
        } else if class.len() != n - 1 || !class.iter().all(|&(u, v)| u == n - 1 || v == n - 1) {
            return Err(Error::Verification("final class is not the star at the last vertex".into()));
        }
    }
    Ok(())
}

fn is_spanning_cycle(class: &[Edge], span: usize) -> bool {
    if class.len() != span {
        return false;
    }
    let mut deg = vec![0usize; span];
    let mut adj = vec![Vec::new(); span];
    for &(u, v) in class {
        if u >= span || v >= span {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
        adj[u].push(v);
        adj[v].push(u);
    }
    if deg.iter().any(|&d| d != 2) {
        return false;
    }
    // connected 2-regular graph with span edges = single cycle
    let mut seen = vec![false; span];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == span
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::two_claw;
    use crate::linear::random_track_layout;

    #[test]
    fn chord_classification() {
        let pi = VertexOrdering::identity(5);
        assert_eq!(classify_chords(&pi, (0, 2), (1, 3)).unwrap(), CircularRelation::Cross);
        assert_eq!(classify_chords(&pi, (0, 1), (2, 3)).unwrap(), CircularRelation::Disjoint);
        assert_eq!(classify_chords(&pi, (0, 3), (1, 2)).unwrap(), CircularRelation::Disjoint);
        assert_eq!(classify_chords(&pi, (0, 1), (1, 2)).unwrap(), CircularRelation::Adjacent);
        // wrap-around: chord (3, 0) vs (4, 1) crosses
        assert_eq!(classify_chords(&pi, (0, 3), (1, 4)).unwrap(), CircularRelation::Cross);
    }

    #[test]
    fn disjoint_chords_examples() {
        let id = VertexOrdering::identity(4);
        assert_eq!(max_disjoint_chords(&complete_graph(4).unwrap(), &id), 2);
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(max_disjoint_chords(&c5, &VertexOrdering::identity(5)), 2);
        assert_eq!(
            max_disjoint_chords(&complete_graph(6).unwrap(), &VertexOrdering::identity(6)),
            3
        );
        let crossing = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(max_disjoint_chords(&crossing, &id), 1);
        // nested chords count as disjoint
        let nested = Graph::new(6, [(0, 5), (1, 4), (2, 3)]).unwrap();
        assert_eq!(max_disjoint_chords(&nested, &VertexOrdering::identity(6)), 3);
    }

    #[test]
    fn matching_partition_counts() {
        assert_eq!(matchings_class_count(12), 30);
        for n in 2..=40 {
            let (pi, p) = complete_matching_partition(n).unwrap();
            if n >= 3 {
                assert_eq!(p.class_count(), matchings_class_count(n));
            }
            for class in p.classes() {
                assert!(is_thrackled_matching(&pi, class));
            }
        }
    }

    #[test]
    fn small_partitions() {
        assert_eq!(small_complete_partition(3).unwrap().class_count(), 3);
        let p4 = small_complete_partition(4).unwrap();
        assert_eq!(p4.class_count(), 5);
        assert_eq!(p4.classes().iter().filter(|c| c.len() == 2).count(), 1);
        let p5 = small_complete_partition(5).unwrap();
        assert_eq!(p5.class_count(), 8);
        assert!(small_complete_partition(6).is_err());
    }

    #[test]
    fn compose_examples() {
        // two-claw tree on two tracks with two colors, pattern K_2
        let g = two_claw();
        let layout = crate::linear::forest_track_layout(&g).unwrap();
        let pattern = EdgePartition::new(vec![vec![(0, 1)]]).unwrap();
        let (_, p) = compose_track_to_convex(&g, &layout, &pattern).unwrap();
        assert!(p.class_count() <= 2);

        // K_3 on three singleton tracks, one color, pattern = small(3)
        let k3 = complete_graph(3).unwrap();
        let layout = random_track_layout(&k3, 3, 1, 0).unwrap().unwrap();
        let t = layout.track_count();
        assert_eq!(t, 3);
        let (_, p) = compose_track_to_convex(&k3, &layout, &small_complete_partition(3).unwrap()).unwrap();
        assert!(p.class_count() <= 3);

        // a random layout on five tracks with two colors composes with small(5)
        let g = Graph::new(
            8,
            [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 7), (1, 4)],
        )
        .unwrap();
        let layout = random_track_layout(&g, 5, 2, 1).unwrap().unwrap();
        let (_, p) = compose_track_to_convex(&g, &layout, &small_complete_partition(5).unwrap()).unwrap();
        assert!(p.class_count() <= 2 * 8);
    }

    #[test]
    fn queue_arch_examples() {
        let id4 = VertexOrdering::identity(4);
        let (p, k) = convex_queue_arch_partition(&complete_graph(4).unwrap(), &id4).unwrap();
        assert_eq!(k, 2);
        assert_eq!(p.class_count(), 3);
        assert!(p.class_count() <= queue_arch_bound(k));

        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let (p, k) = convex_queue_arch_partition(&c5, &VertexOrdering::identity(5)).unwrap();
        assert_eq!(k, 2);
        assert!(p.class_count() <= 3);

        let m = Graph::new(6, [(0, 3), (1, 4), (2, 5)]).unwrap();
        let (p, k) = convex_queue_arch_partition(&m, &VertexOrdering::identity(6)).unwrap();
        assert_eq!((p.class_count(), k), (1, 1));
    }

    #[test]
    fn circulant_graphs() {
        let g = circular_graph(7, 1).unwrap();
        assert_eq!(g.edges(), complete_graph(7).unwrap().edges());
        let g = circular_graph(6, 3).unwrap();
        assert_eq!(g.edges(), &[(0, 3), (1, 4), (2, 5)]);
        let g = circular_graph(7, 3).unwrap();
        assert_eq!(g.m(), 7);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn construction_step_examples() {
        let step = convex_construction_step(12, 2).unwrap();
        assert_eq!(step.s_vertices, vec![0, 3, 6, 9]);
        assert_eq!(step.classes.class_count(), 4);
        assert!(step.residual_is_nominal);
        assert_eq!(step.nominal, (8, 3));
        assert_eq!(step.residual.edges(), circular_graph(8, 3).unwrap().edges());

        let step = convex_construction_step(6, 1).unwrap();
        assert_eq!(step.classes.class_count(), 3);
        assert_eq!(step.nominal, (3, 2));
        assert!(step.residual_is_nominal);
        assert_eq!(step.residual.m(), 0);

        // n = s*d exactly: every gap is small, so each antipodal chord that
        // straddles a removed pair joins the clockwise class instead of
        // surviving one unit too close in the residual
        let step = convex_construction_step(12, 4).unwrap();
        assert_eq!(step.s_vertices, vec![0, 4, 8]);
        assert!(step.residual_is_nominal);
        assert_eq!(step.residual.m(), 0);

        // past roughly sqrt(n) no spaced set with gaps {d, d+1} exists
        assert!(!spaced_step_feasible(17, 7));
        assert!(convex_construction_step(17, 7).is_err());
        let blocks = distance_block_partition(&circular_graph(17, 7).unwrap()).unwrap();
        assert_eq!(blocks.len(), 6); // ceil(17/7) + ceil(17/8)
    }

    #[test]
    fn upper_coloring_counts() {
        let pi12 = VertexOrdering::identity(12);
        let c = convex_kn_upper_coloring(12).unwrap();
        assert_eq!(c.partition.class_count(), 8);
        for class in c.partition.classes() {
            assert!(is_convex_thrackle(&pi12, class));
        }
        assert_eq!(convex_kn_upper_coloring(24).unwrap().partition.class_count(), 18);
        let c48 = convex_kn_upper_coloring(48).unwrap();
        assert_eq!(c48.partition.class_count(), 39);
        assert!(!c48.base_class_used);
        assert!(c48.steps.iter().all(|s| s.residual_is_nominal));
        // tiny cases collapse to the closed-form optimum
        assert_eq!(convex_kn_upper_coloring(3).unwrap().partition.class_count(), 1);
        assert_eq!(convex_kn_upper_coloring(4).unwrap().partition.class_count(), 2);
        assert_eq!(convex_kn_upper_coloring(6).unwrap().partition.class_count(), 3);
    }

    #[test]
    fn walecki_examples() {
        assert_eq!(walecki_partition(5).unwrap().class_count(), 2);
        assert_eq!(walecki_partition(7).unwrap().class_count(), 3);
        let p6 = walecki_partition(6).unwrap();
        assert_eq!(p6.class_count(), 3);
        // two 5-cycles plus the star at vertex 5
        assert!(p6.classes()[..2].iter().all(|c| c.len() == 5));
        assert!(p6.classes()[2].iter().all(|&(_, v)| v == 5));
        for n in 3..=13 {
            walecki_partition(n).unwrap();
        }
    }
}
