//! Graph type, generators for the named families, arboricity, compatible
//! bijections and planarity.

use std::collections::{HashSet, VecDeque};

use crate::error::Error;
use crate::planarity;
use crate::Result;

/// An undirected edge, always stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Normalize an unordered pair to `(min, max)` form.
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>, // normalized, sorted, deduplicated
}

impl Graph {
    pub fn new(n: usize, raw: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (u, v) in raw {
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            let e = edge(u, v);
            if !seen.insert(e) {
                return Err(Error::InvalidInput(format!("parallel edge ({},{})", e.0, e.1)));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// A forest has no cycle: every connected component is a tree.
    pub fn is_forest(&self) -> bool {
        self.n.checked_sub(self.m()).map_or(false, |_| {
            self.m() + self.component_count() == self.n
        })
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        comps
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Two-color the graph if it is bipartite; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Induced subgraph on `verts`, relabeled 0..verts.len() in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| edge(index[u], index[v]))
            .collect::<Vec<_>>();
        Graph {
            n: verts.len(),
            edges: {
                let mut e = edges;
                e.sort_unstable();
                e
            },
        }
    }
}

/// A partition of a graph's edge set into nonempty disjoint classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    classes: Vec<Vec<Edge>>,
}

impl EdgePartition {
    /// Build a partition from classes; edges are normalized and sorted, empty
    /// classes are rejected, and duplicates (within or across classes) are
    /// rejected.
    pub fn new(raw: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut classes = Vec::with_capacity(raw.len());
        for class in raw {
            if class.is_empty() {
                return Err(Error::InvalidInput("empty partition class".into()));
            }
            let mut c: Vec<Edge> = class.into_iter().map(|(u, v)| edge(u, v)).collect();
            c.sort_unstable();
            for &e in &c {
                if !seen.insert(e) {
                    return Err(Error::InvalidInput(format!(
                        "edge ({},{}) appears in two classes",
                        e.0, e.1
                    )));
                }
            }
            classes.push(c);
        }
        Ok(EdgePartition { classes })
    }

    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Check that the classes cover E(G) exactly.
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        let mut union: Vec<Edge> = self.classes.iter().flatten().copied().collect();
        union.sort_unstable();
        if union != g.edges() {
            return Err(Error::Verification(
                "partition union does not equal the edge set".into(),
            ));
        }
        Ok(())
    }
}

/// K_n.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInput("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Index of the division vertex of pair `(i, j)` in `complete_subdivision(n)`:
/// `n` plus the lexicographic position of `(i, j)` among all pairs with i < j.
pub fn division_vertex(n: usize, i: usize, j: usize) -> usize {
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),... — rank of (i,j) is
    // i*n - i(i+1)/2 + (j - i - 1)
    n + i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// K_n with every edge subdivided exactly once. Original vertices keep labels
/// 0..n; the division vertex of {i,j} sits at `division_vertex(n, i, j)`.
pub fn complete_subdivision(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidInput("complete_subdivision needs n >= 2".into()));
    }
    let nv = n + n * (n - 1) / 2;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = division_vertex(n, i, j);
            edges.push((i, d));
            edges.push((j, d));
        }
    }
    Graph::new(nv, edges)
}

/// The 2-claw: a root r joined to v1,v2,v3, each vi joined to a leaf wi.
/// Vertex labels: r=0, v1..v3 = 1..3, w1..w3 = 4..6.
pub fn two_claw() -> Graph {
    Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).expect("static edge list")
}

/// Edge-maximal planar graph of n nested triangles. Triangle i has corners
/// u_i = i, v_i = n+i, w_i = 2n+i. Edges: consecutive same-corner paths (A),
/// the triangles themselves (B), and the diagonals u_i v_{i+1}, v_i w_{i+1},
/// w_i u_{i+1} (C). Total 3(n-1) + 3n + 3(n-1) = 9n−6 = 3(3n)−6 edges.
pub fn nested_triangles(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidInput("nested_triangles needs n >= 2".into()));
    }
    let u = |i: usize| i;
    let v = |i: usize| n + i;
    let w = |i: usize| 2 * n + i;
    let mut edges = Vec::with_capacity(9 * n - 6);
    for i in 0..n - 1 {
        edges.push((u(i), u(i + 1)));
        edges.push((v(i), v(i + 1)));
        edges.push((w(i), w(i + 1)));
    }
    for i in 0..n {
        edges.push((u(i), v(i)));
        edges.push((v(i), w(i)));
        edges.push((w(i), u(i)));
    }
    for i in 0..n - 1 {
        edges.push((u(i), v(i + 1)));
        edges.push((v(i), w(i + 1)));
        edges.push((w(i), u(i + 1)));
    }
    Graph::new(3 * n, edges)
}

/// All 3-element subsets of 0..n in lexicographic order.
fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Bipartite containment graph between singletons (vertices 0..n) and
/// tripletons (vertices n..n+C(n,3), in lexicographic order of the triple).
pub fn singleton_tripleton_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput(
            "singleton_tripleton_graph needs n >= 3".into(),
        ));
    }
    let ts = triples(n);
    let mut edges = Vec::with_capacity(3 * ts.len());
    for (t, tri) in ts.iter().enumerate() {
        for &s in tri {
            edges.push((s, n + t));
        }
    }
    Graph::new(n + ts.len(), edges)
}

/// Partition the singleton–tripleton graph into three star forests: class r
/// collects the edges whose singleton is the (r+1)-smallest element of its
/// tripleton. Every tripleton has degree 1 per class, so each component is a
/// star centered at a singleton.
pub fn star_forest_partition_gn(g: &Graph) -> Result<EdgePartition> {
    // recover n from |V| = n + C(n,3) and insist on the exact generator output
    let mut base = None;
    for n in 3..=g.n() {
        if n + n * (n - 1) * (n - 2) / 6 == g.n() {
            base = Some(n);
            break;
        }
        if n + n * (n - 1) * (n - 2) / 6 > g.n() {
            break;
        }
    }
    let n = base.ok_or_else(|| {
        Error::InvalidInput("vertex count does not match any singleton_tripleton_graph".into())
    })?;
    if singleton_tripleton_graph(n)? != *g {
        return Err(Error::InvalidInput(
            "input is not the output of singleton_tripleton_graph".into(),
        ));
    }
    let mut classes = vec![Vec::new(), Vec::new(), Vec::new()];
    for (t, tri) in triples(n).iter().enumerate() {
        for (rank, &s) in tri.iter().enumerate() {
            classes[rank].push((s, n + t));
        }
    }
    EdgePartition::new(classes)
}

/// True when every component of the class is a star and no tripleton-style
/// vertex has degree above 1 — the shape star_forest_partition_gn promises.
pub fn is_star_forest(n: usize, class: &[Edge]) -> bool {
    let mut deg = vec![0usize; n];
    for &(u, v) in class {
        deg[u] += 1;
        deg[v] += 1;
    }
    // acyclic + every edge has an endpoint of degree 1 fails for paths of
    // length 2 centered oddly; the direct condition: every edge must have at
    // most one endpoint of degree > 1.
    class
        .iter()
        .all(|&(u, v)| deg[u] == 1 || deg[v] == 1)
}

/// Exact arboricity by the density maximum over induced subgraphs, searched
/// exhaustively over vertex subsets. The optimal subgraph may be taken induced
/// because adding edges inside a fixed vertex set only increases density.
pub fn arboricity(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::CapExceeded(format!(
            "arboricity: n={} exceeds cap {}",
            g.n(),
            cap
        )));
    }
    if g.m() == 0 {
        return Ok(0);
    }
    let n = g.n();
    let mut best = 1usize;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let mut inside = 0usize;
        for &(u, v) in g.edges() {
            if mask & (1 << u) != 0 && mask & (1 << v) != 0 {
                inside += 1;
            }
        }
        if inside == 0 {
            continue;
        }
        let dens = inside.div_ceil(size - 1);
        if dens > best {
            best = dens;
        }
    }
    Ok(best)
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn smallest_prime_above(bound: usize) -> usize {
    let mut p = bound + 1;
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// The nested-triangles graph on the smallest prime n > 3k², its k pairwise
/// compatible bijections f_p (p = 1..k), and the union of the relabeled
/// copies. Compatibility (pairwise edge-disjointness of the copies) and the
/// union count 3k(3n−2) are checked by direct set intersection; a failure
/// would falsify the construction and is reported as such.
pub fn compatible_bijections(k: usize) -> Result<(Graph, Vec<Vec<usize>>, Graph)> {
    if k == 0 {
        return Err(Error::InvalidInput("compatible_bijections needs k >= 1".into()));
    }
    let n = smallest_prime_above(3 * k * k);
    let g = nested_triangles(n)?;
    let nv = 3 * n;
    let mut bijections = Vec::with_capacity(k);
    let mut copies: Vec<HashSet<Edge>> = Vec::with_capacity(k);
    for p in 1..=k {
        let f: Vec<usize> = (0..nv)
            .map(|x| {
                let (block, i) = (x / n, x % n);
                let image = (p * i + block * p * (k + 1)) % n;
                block * n + image
            })
            .collect();
        // f permutes each block since gcd(p, n) = 1
        let mut hit = vec![false; nv];
        for &y in &f {
            if hit[y] {
                return Err(Error::Construction(format!(
                    "f_{p} is not a bijection (n={n}, k={k})"
                )));
            }
            hit[y] = true;
        }
        let copy: HashSet<Edge> = g.edges().iter().map(|&(u, v)| edge(f[u], f[v])).collect();
        if copy.len() != g.m() {
            return Err(Error::Construction(format!(
                "relabeled copy under f_{p} lost edges"
            )));
        }
        bijections.push(f);
        copies.push(copy);
    }
    for p in 0..k {
        for q in p + 1..k {
            if let Some(e) = copies[p].intersection(&copies[q]).next() {
                return Err(Error::Construction(format!(
                    "copies f_{} and f_{} share edge ({},{})",
                    p + 1,
                    q + 1,
                    e.0,
                    e.1
                )));
            }
        }
    }
    let union: Vec<Edge> = copies.iter().flatten().copied().collect();
    let expected = 3 * k * (3 * n - 2);
    if union.len() != expected {
        return Err(Error::Construction(format!(
            "union has {} edges, expected {expected}",
            union.len()
        )));
    }
    let union_graph = Graph::new(nv, union)?;
    Ok((g, bijections, union_graph))
}

/// Relabel a graph through a vertex bijection.
pub fn relabel(g: &Graph, f: &[usize]) -> Result<Graph> {
    Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (f[u], f[v])))
}

/// True iff G is planar.
pub fn planarity_check(g: &Graph) -> bool {
    planarity::is_planar(g)
}
