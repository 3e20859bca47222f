//! Exact brute-force oracles: maximum clique and chromatic number on bitset
//! graphs, minimum clique covers of auxiliary crossing graphs, and exhaustive
//! minimization of layout parameters over vertex orderings at small scale.

use crate::convex::{chords_cross, classify_chords, max_disjoint_chords, CircularRelation};
use crate::error::Error;
use crate::graph::{arboricity, Edge, Graph};
use crate::linear::{greedy_queue_assign, max_rainbow, VertexOrdering};
use crate::Result;

/// Adjacency as one u64 bitmask per vertex; the oracles are capped at 64.
#[derive(Debug, Clone)]
pub struct BitGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl BitGraph {
    pub fn from_graph(g: &Graph) -> Result<BitGraph> {
        if g.n() > 64 {
            return Err(Error::CapExceeded(format!(
                "bitset oracle supports at most 64 vertices, got {}",
                g.n()
            )));
        }
        let mut adj = vec![0u64; g.n()];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(BitGraph { n: g.n(), adj })
    }

    pub fn complement(&self) -> BitGraph {
        let full = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n)
            .map(|v| (full & !self.adj[v]) & !(1u64 << v))
            .collect();
        BitGraph { n: self.n, adj }
    }
}

/// Largest clique by branch and bound with greedy-coloring upper bounds.
pub fn max_clique(b: &BitGraph) -> Vec<usize> {
    let full = if b.n == 0 {
        return Vec::new();
    } else if b.n == 64 {
        !0u64
    } else {
        (1u64 << b.n) - 1
    };
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(b, &mut current, full, &mut best);
    best
}

fn expand_clique(b: &BitGraph, current: &mut Vec<usize>, candidates: u64, best: &mut Vec<usize>) {
    if candidates == 0 {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // order candidates by sequential coloring; color number bounds the
    // clique extension
    let mut order: Vec<(usize, usize)> = Vec::new(); // (vertex, color)
    let mut uncolored = candidates;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            avail &= !b.adj[v];
            uncolored &= !(1u64 << v);
            order.push((v, color));
        }
    }
    let mut cands = candidates;
    for &(v, c) in order.iter().rev() {
        if current.len() + c <= best.len() {
            return;
        }
        current.push(v);
        expand_clique(b, current, cands & b.adj[v], best);
        current.pop();
        cands &= !(1u64 << v);
    }
}

/// Greedy DSATUR coloring; returns (color count, coloring).
pub fn greedy_coloring(b: &BitGraph) -> (usize, Vec<usize>) {
    let n = b.n;
    let mut color = vec![usize::MAX; n];
    let mut used = 0usize;
    for _ in 0..n {
        // highest saturation, then highest degree, then lowest index
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..n {
            if color[v] != usize::MAX {
                continue;
            }
            let mut sat_mask = 0u128;
            let mut w_bits = b.adj[v];
            while w_bits != 0 {
                let w = w_bits.trailing_zeros() as usize;
                w_bits &= w_bits - 1;
                if color[w] != usize::MAX {
                    sat_mask |= 1 << color[w];
                }
            }
            let key = (sat_mask.count_ones() as usize, b.adj[v].count_ones() as usize);
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let mut forbidden = 0u128;
        let mut w_bits = b.adj[v];
        while w_bits != 0 {
            let w = w_bits.trailing_zeros() as usize;
            w_bits &= w_bits - 1;
            if color[w] != usize::MAX {
                forbidden |= 1 << color[w];
            }
        }
        let c = (0..).find(|&c| forbidden & (1u128 << c) == 0).unwrap();
        color[v] = c;
        used = used.max(c + 1);
    }
    (used, color)
}

struct ColorSearch<'a> {
    b: &'a BitGraph,
    best_count: usize,
    best: Option<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl ColorSearch<'_> {
    fn run(&mut self, color: &mut Vec<usize>, used: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::CapExceeded(format!(
                "chromatic search exceeded the {}-node budget",
                self.budget
            )));
        }
        if used >= self.best_count {
            return Ok(());
        }
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize);
        for v in 0..self.b.n {
            if color[v] != usize::MAX {
                continue;
            }
            let mut sat = 0u128;
            let mut w_bits = self.b.adj[v];
            while w_bits != 0 {
                let w = w_bits.trailing_zeros() as usize;
                w_bits &= w_bits - 1;
                if color[w] != usize::MAX {
                    sat |= 1 << color[w];
                }
            }
            let key = (sat.count_ones() as usize, self.b.adj[v].count_ones() as usize);
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        if pick == usize::MAX {
            self.best_count = used;
            self.best = Some(color.clone());
            return Ok(());
        }
        let v = pick;
        let mut forbidden = 0u128;
        let mut w_bits = self.b.adj[v];
        while w_bits != 0 {
            let w = w_bits.trailing_zeros() as usize;
            w_bits &= w_bits - 1;
            if color[w] != usize::MAX {
                forbidden |= 1 << color[w];
            }
        }
        let new_limit = if used + 1 < self.best_count { used + 1 } else { used };
        for c in 0..new_limit {
            if forbidden & (1u128 << c) != 0 {
                continue;
            }
            color[v] = c;
            self.run(color, used.max(c + 1))?;
            color[v] = usize::MAX;
        }
        Ok(())
    }
}

/// Exact coloring with fewer than `cutoff` colors, if one exists; seeds the
/// search by pre-coloring a maximum clique.
pub fn chromatic_below(
    b: &BitGraph,
    cutoff: usize,
    budget: u64,
) -> Result<(Option<(usize, Vec<usize>)>, u64)> {
    if b.n == 0 {
        return Ok((Some((0, Vec::new())), 0));
    }
    let clique = max_clique(b);
    if clique.len() >= cutoff {
        return Ok((None, 0));
    }
    let mut color = vec![usize::MAX; b.n];
    for (c, &v) in clique.iter().enumerate() {
        color[v] = c;
    }
    let mut search = ColorSearch {
        b,
        best_count: cutoff,
        best: None,
        nodes: 0,
        budget,
    };
    search.run(&mut color, clique.len())?;
    Ok((search.best.map(|col| (search.best_count, col)), search.nodes))
}

/// Exact chromatic number with a certificate coloring and node count.
pub fn chromatic_exact(b: &BitGraph, budget: u64) -> Result<(usize, Vec<usize>, u64)> {
    if b.n == 0 {
        return Ok((0, Vec::new(), 0));
    }
    let (ub, greedy) = greedy_coloring(b);
    let (better, nodes) = chromatic_below(b, ub, budget)?;
    match better {
        Some((v, col)) => Ok((v, col, nodes)),
        None => Ok((ub, greedy, nodes)),
    }
}

/// The crossing graph of a convex drawing: one vertex per edge of G,
/// adjacent iff the chords properly cross (plus = also adjacent on a shared
/// endpoint).
pub fn convex_aux_graph(g: &Graph, pi: &VertexOrdering, plus: bool) -> Result<Graph> {
    let edges = g.edges();
    let mut aux = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let rel = classify_chords(pi, edges[i], edges[j])?;
            let adjacent = match rel {
                CircularRelation::Cross => true,
                CircularRelation::Adjacent => plus,
                CircularRelation::Disjoint => false,
            };
            if adjacent {
                aux.push((i, j));
            }
        }
    }
    Graph::new(edges.len(), aux)
}

#[derive(Debug, Clone)]
pub struct CoverResult {
    pub value: usize,
    /// vertex classes of the auxiliary graph, each a clique
    pub classes: Vec<Vec<usize>>,
    pub nodes: u64,
}

/// Minimum clique cover of an auxiliary graph via the chromatic number of
/// its complement; the certificate is re-verified before returning.
pub fn min_clique_cover(h: &Graph, cap: usize, budget: u64) -> Result<CoverResult> {
    if h.n() > cap {
        return Err(Error::CapExceeded(format!(
            "clique cover needs at most {cap} auxiliary vertices, got {}",
            h.n()
        )));
    }
    let b = BitGraph::from_graph(h)?;
    let comp = b.complement();
    let (value, coloring, nodes) = chromatic_exact(&comp, budget)?;
    let mut classes = vec![Vec::new(); value];
    for (v, &c) in coloring.iter().enumerate() {
        classes[c].push(v);
    }
    for class in &classes {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if !h.has_edge(u, v) {
                    return Err(Error::Verification(
                        "cover class is not a clique in the auxiliary graph".into(),
                    ));
                }
            }
        }
    }
    Ok(CoverResult { value, classes, nodes })
}

/// A minimized parameter with the ordering certificate that achieves it.
#[derive(Debug, Clone)]
pub struct OrderResult {
    pub value: usize,
    pub order: Vec<usize>,
    pub classes: Vec<Vec<Edge>>,
    pub nodes: u64,
}

fn permutations_of(items: Vec<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items = items;
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

/// Circular orderings up to rotation and reflection: vertex 0 first, second
/// entry smaller than the last.
fn canonical_circular_orderings(n: usize) -> Vec<Vec<usize>> {
    if n <= 2 {
        return vec![(0..n).collect()];
    }
    permutations_of((1..n).collect())
        .into_iter()
        .filter(|p| p[0] < p[n - 2])
        .map(|p| {
            let mut order = Vec::with_capacity(n);
            order.push(0);
            order.extend(p);
            order
        })
        .collect()
}

/// Linear orderings up to reflection.
fn canonical_linear_orderings(n: usize) -> Vec<Vec<usize>> {
    if n <= 1 {
        return vec![(0..n).collect()];
    }
    permutations_of((0..n).collect())
        .into_iter()
        .filter(|p| p[0] < p[n - 1])
        .collect()
}

/// Exact convex antithickness: the least thrackle-partition size over all
/// circular orderings. Complete graphs are vertex-transitive under rotation,
/// so a single ordering suffices for them (allowed up to n = 10); general
/// graphs are capped at n = 9.
pub fn convex_antithickness_exact(g: &Graph, budget: u64) -> Result<OrderResult> {
    convex_antithickness_exact_jobs(g, budget, 1)
}

/// Chunk-parallel variant of [`convex_antithickness_exact`]: the ordering
/// list splits into `jobs` contiguous chunks searched independently (each
/// with its own incumbent), and ties between chunks go to the earliest
/// ordering index, so value, certificate, and node total are reproducible
/// for any fixed `jobs`.
pub fn convex_antithickness_exact_jobs(g: &Graph, budget: u64, jobs: usize) -> Result<OrderResult> {
    let n = g.n();
    let complete = g.m() == n * (n.saturating_sub(1)) / 2;
    if n > 10 || (n > 9 && !complete) {
        return Err(Error::CapExceeded(
            "convex antithickness oracle is capped at 9 vertices (10 for complete graphs)".into(),
        ));
    }
    if g.m() == 0 {
        return Ok(OrderResult {
            value: 0,
            order: (0..n).collect(),
            classes: Vec::new(),
            nodes: 0,
        });
    }
    let orderings = if complete {
        vec![(0..n).collect::<Vec<usize>>()]
    } else {
        canonical_circular_orderings(n)
    };
    let (best, nodes_total) = search_chunked(&orderings, jobs, |chunk| {
        antithickness_over(g, chunk, budget)
    })?;
    let mut result =
        best.ok_or_else(|| Error::Verification("no ordering produced a partition".into()))?;
    result.nodes = nodes_total;
    Ok(result)
}

/// Search one slice of orderings for the best thrackle partition; returns the
/// in-slice index of the winner so chunked callers can break ties globally.
fn antithickness_over(
    g: &Graph,
    orderings: &[Vec<usize>],
    budget: u64,
) -> Result<(Option<(usize, OrderResult)>, u64)> {
    // every convex thrackle has at most n edges
    let floor = (g.m().div_ceil(g.n())).max(1);
    let mut best: Option<(usize, OrderResult)> = None;
    let mut nodes_total = 0u64;
    for (idx, order) in orderings.iter().enumerate() {
        let pi = VertexOrdering::new(order.clone())?;
        let best_value = best.as_ref().map_or(usize::MAX, |(_, b)| b.value);
        if best_value == floor {
            break;
        }
        // pairwise disjoint chords need distinct classes
        if max_disjoint_chords(g, &pi) >= best_value {
            continue;
        }
        let aux = convex_aux_graph(g, &pi, true)?;
        let comp = BitGraph::from_graph(&aux)?.complement();
        let cutoff = best_value.min(g.m() + 1);
        let (found, nodes) = chromatic_below(&comp, cutoff, budget)?;
        nodes_total += nodes;
        if let Some((value, coloring)) = found {
            let mut classes = vec![Vec::new(); value];
            for (ei, &c) in coloring.iter().enumerate() {
                classes[c].push(g.edges()[ei]);
            }
            for class in &classes {
                if !crate::convex::is_convex_thrackle(&pi, class) {
                    return Err(Error::Verification(
                        "oracle certificate class is not a convex thrackle".into(),
                    ));
                }
            }
            best = Some((
                idx,
                OrderResult {
                    value,
                    order: order.clone(),
                    classes,
                    nodes: 0,
                },
            ));
        }
    }
    Ok((best, nodes_total))
}

/// Run `search` over `jobs` contiguous chunks of the ordering list and merge:
/// node counts add, and the winner is the best value with the smallest global
/// ordering index, independent of scheduling.
fn search_chunked<F>(
    orderings: &[Vec<usize>],
    jobs: usize,
    search: F,
) -> Result<(Option<OrderResult>, u64)>
where
    F: Fn(&[Vec<usize>]) -> Result<(Option<(usize, OrderResult)>, u64)> + Sync,
{
    let jobs = jobs.max(1).min(orderings.len().max(1));
    if jobs == 1 {
        let (best, nodes) = search(orderings)?;
        return Ok((best.map(|(_, r)| r), nodes));
    }
    let chunk_len = orderings.len().div_ceil(jobs);
    let chunks: Vec<(usize, &[Vec<usize>])> = orderings
        .chunks(chunk_len)
        .enumerate()
        .map(|(i, c)| (i * chunk_len, c))
        .collect();
    let outcomes: Vec<Result<(Option<(usize, OrderResult)>, u64)>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|&(_, chunk)| scope.spawn(|| search(chunk)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search thread panicked"))
                .collect()
        });
    let mut best: Option<(usize, OrderResult)> = None;
    let mut nodes_total = 0u64;
    for ((start, _), outcome) in chunks.iter().zip(outcomes) {
        let (chunk_best, nodes) = outcome?;
        nodes_total += nodes;
        if let Some((idx, result)) = chunk_best {
            let key = (result.value, start + idx);
            if best
                .as_ref()
                .map_or(true, |(bi, br)| key < (br.value, *bi))
            {
                best = Some((start + idx, result));
            }
        }
    }
    Ok((best.map(|(_, r)| r), nodes_total))
}

/// Exact book thickness: the least stack-partition size (chromatic number of
/// the chord crossing graph) over circular orderings, capped at 9 vertices.
pub fn book_thickness_exact(g: &Graph, budget: u64) -> Result<OrderResult> {
    book_thickness_exact_jobs(g, budget, 1)
}

/// Chunk-parallel variant of [`book_thickness_exact`]; same determinism
/// contract as [`convex_antithickness_exact_jobs`].
pub fn book_thickness_exact_jobs(g: &Graph, budget: u64, jobs: usize) -> Result<OrderResult> {
    let n = g.n();
    if n > 9 {
        return Err(Error::CapExceeded("book thickness oracle is capped at 9 vertices".into()));
    }
    if g.m() == 0 {
        return Ok(OrderResult {
            value: 0,
            order: (0..n).collect(),
            classes: Vec::new(),
            nodes: 0,
        });
    }
    let orderings = canonical_circular_orderings(n);
    let (best, nodes_total) =
        search_chunked(&orderings, jobs, |chunk| book_thickness_over(g, chunk, budget))?;
    let mut result =
        best.ok_or_else(|| Error::Verification("no ordering produced a partition".into()))?;
    result.nodes = nodes_total;
    Ok(result)
}

fn book_thickness_over(
    g: &Graph,
    orderings: &[Vec<usize>],
    budget: u64,
) -> Result<(Option<(usize, OrderResult)>, u64)> {
    let mut best: Option<(usize, OrderResult)> = None;
    let mut nodes_total = 0u64;
    for (idx, order) in orderings.iter().enumerate() {
        let pi = VertexOrdering::new(order.clone())?;
        let best_value = best.as_ref().map_or(usize::MAX, |(_, b)| b.value);
        if best_value == 1 {
            break;
        }
        let aux = convex_aux_graph(g, &pi, false)?;
        let b = BitGraph::from_graph(&aux)?;
        let cutoff = best_value.min(g.m() + 1);
        let (found, nodes) = chromatic_below(&b, cutoff, budget)?;
        nodes_total += nodes;
        if let Some((value, coloring)) = found {
            let value = value.max(1);
            let mut classes = vec![Vec::new(); value];
            for (ei, &c) in coloring.iter().enumerate() {
                classes[c].push(g.edges()[ei]);
            }
            for class in &classes {
                for (i, &e) in class.iter().enumerate() {
                    for &f in &class[i + 1..] {
                        if classify_chords(&pi, e, f)? == CircularRelation::Cross {
                            return Err(Error::Verification("stack class contains a crossing".into()));
                        }
                    }
                }
            }
            best = Some((
                idx,
                OrderResult {
                    value,
                    order: order.clone(),
                    classes,
                    nodes: 0,
                },
            ));
        }
    }
    Ok((best, nodes_total))
}

/// Exact queue number: the least max-rainbow over linear orderings, capped
/// at 9 vertices.
pub fn queue_number_exact(g: &Graph) -> Result<OrderResult> {
    queue_number_exact_jobs(g, 1)
}

/// Chunk-parallel variant of [`queue_number_exact`]. The per-ordering value
/// is a pure function and ties go to the earliest ordering, so the result is
/// identical for every `jobs` except for the node count, which stops early
/// per chunk.
pub fn queue_number_exact_jobs(g: &Graph, jobs: usize) -> Result<OrderResult> {
    let n = g.n();
    if n > 9 {
        return Err(Error::CapExceeded("queue number oracle is capped at 9 vertices".into()));
    }
    if g.m() == 0 {
        return Ok(OrderResult {
            value: 0,
            order: (0..n).collect(),
            classes: Vec::new(),
            nodes: 0,
        });
    }
    let orderings = canonical_linear_orderings(n);
    let (best, nodes) = search_chunked(&orderings, jobs, |chunk| {
        let mut best: Option<(usize, OrderResult)> = None;
        let mut nodes = 0u64;
        for (idx, order) in chunk.iter().enumerate() {
            nodes += 1;
            let pi = VertexOrdering::new(order.clone())?;
            let value = max_rainbow(g, &pi);
            if best.as_ref().map_or(true, |(_, b)| value < b.value) {
                best = Some((
                    idx,
                    OrderResult {
                        value,
                        order: order.clone(),
                        classes: Vec::new(),
                        nodes: 0,
                    },
                ));
                if value == 1 {
                    break;
                }
            }
        }
        Ok((best, nodes))
    })?;
    let mut result = best.ok_or_else(|| Error::Verification("no ordering searched".into()))?;
    let pi = VertexOrdering::new(result.order.clone())?;
    let layout = greedy_queue_assign(g, &pi)?;
    result.classes = layout.classes.classes().to_vec();
    result.nodes = nodes;
    Ok(result)
}

#[derive(Debug, Clone)]
pub struct TwoTrackResult {
    pub value: usize,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub nodes: u64,
}

/// Exact 2-track thickness of a bipartite graph: the least noncrossing
/// partition size over two-track drawings, which equals the least maximum
/// pairwise-crossing set. Disjoint components stack side by side, so the
/// answer is the maximum over components; each side is capped at 7.
pub fn two_track_thickness_exact(g: &Graph) -> Result<TwoTrackResult> {
    if g.m() == 0 {
        return Ok(TwoTrackResult {
            value: 0,
            top: (0..g.n()).collect(),
            bottom: Vec::new(),
            nodes: 0,
        });
    }
    let sides = g
        .bipartition()
        .ok_or_else(|| Error::InvalidInput("two-track thickness needs a bipartite graph".into()))?;
    let mut value = 0usize;
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut nodes = 0u64;
    for comp in g.components() {
        let a: Vec<usize> = comp.iter().copied().filter(|&v| sides[v] == 0).collect();
        let b: Vec<usize> = comp.iter().copied().filter(|&v| sides[v] == 1).collect();
        if a.len() > 7 || b.len() > 7 {
            return Err(Error::CapExceeded(
                "two-track thickness oracle is capped at 7 vertices per side".into(),
            ));
        }
        let (cv, ct, cb, cn) = component_two_track(g, &a, &b)?;
        nodes += cn;
        value = value.max(cv);
        top.extend(ct);
        bottom.extend(cb);
    }
    Ok(TwoTrackResult { value, top, bottom, nodes })
}

fn component_two_track(
    g: &Graph,
    a: &[usize],
    b: &[usize],
) -> Result<(usize, Vec<usize>, Vec<usize>, u64)> {
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| a.contains(&u) || a.contains(&v) || b.contains(&u) || b.contains(&v))
        .collect();
    if edges.is_empty() {
        return Ok((0, a.to_vec(), b.to_vec(), 0));
    }
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    let mut nodes = 0u64;
    // both side assignments; orderings of each side; simultaneous reversal
    // halved by fixing the first side's orientation
    for flip in [false, true] {
        let (ta, tb) = if flip { (b, a) } else { (a, b) };
        for pa in permutations_of(ta.to_vec()) {
            for pb in permutations_of(tb.to_vec()) {
                // quotient by reversing both tracks together
                if ta.len() > 1 && pa[0] > pa[ta.len() - 1] {
                    continue;
                }
                nodes += 1;
                let mut pos = vec![(0usize, 0usize); g.n()];
                for (i, &v) in pa.iter().enumerate() {
                    pos[v] = (0, i);
                }
                for (i, &v) in pb.iter().enumerate() {
                    pos[v] = (1, i);
                }
                let coords: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(u, v)| {
                        let (x, y) = if pos[u].0 == 0 { (u, v) } else { (v, u) };
                        (pos[x].1, pos[y].1)
                    })
                    .collect();
                let mut items = coords.clone();
                items.sort_unstable();
                // longest strictly decreasing chain in the second coordinate
                // = largest pairwise-crossing set
                let mut lvl = vec![1usize; items.len()];
                let mut peak = 1usize;
                for i in 0..items.len() {
                    for j in 0..i {
                        if items[j].0 < items[i].0 && items[j].1 > items[i].1 {
                            lvl[i] = lvl[i].max(lvl[j] + 1);
                        }
                    }
                    peak = peak.max(lvl[i]);
                }
                if best.as_ref().map_or(true, |(bv, _, _)| peak < *bv) {
                    best = Some((peak, pa.clone(), pb.clone()));
                }
            }
        }
    }
    let (value, top, bottom) = best.unwrap();
    Ok((value, top, bottom, nodes))
}

/// Planar-decomposition density bound: thickness >= ceil(m / (3n - 6)).
pub fn thickness_lower_by_density(g: &Graph) -> Result<usize> {
    if g.m() == 0 {
        return Ok(0);
    }
    if g.n() < 3 {
        return Ok(1);
    }
    Ok(g.m().div_ceil(3 * (g.n() - 2)))
}

/// Antithickness bounds: thrackles have at most 167n/117 edges, so at least
/// ceil(117m/(167n)) classes are needed; a partition into forests gives the
/// arboricity upper bound.
pub fn antithickness_bounds(g: &Graph) -> Result<(usize, usize)> {
    if g.m() == 0 {
        return Ok((0, 0));
    }
    let lower = (117 * g.m()).div_ceil(167 * g.n());
    let upper = arboricity(g, 16)?;
    Ok((lower.max(1), upper))
}

/// Antithickness of K_n: between n/3 (edge counting) and ceil((n-1)/2)
/// (Hamiltonian decomposition into thrackles).
pub fn complete_antithickness_bounds(n: usize) -> Result<(usize, usize)> {
    if n < 2 {
        return Err(Error::InvalidInput("complete_antithickness_bounds needs n >= 2".into()));
    }
    Ok((n.div_ceil(3), (n - 1).div_ceil(2)))
}

/// Chords that properly cross under the ordering, for quick H adjacency.
pub fn convex_crossing_count(g: &Graph, pi: &VertexOrdering) -> usize {
    let edges = g.edges();
    let mut count = 0;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (e, f) = (edges[i], edges[j]);
            if e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 && chords_cross(pi, e, f) {
                count += 1;
            }
        }
    }
    count
}
