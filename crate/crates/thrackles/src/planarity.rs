//! Planarity testing via incremental face embedding (Demoucron–Malgrange–
//! Pertuiset) run independently on each biconnected block.

use crate::graph::{edge, Edge, Graph};

pub fn is_planar(g: &Graph) -> bool {
    for block in biconnected_blocks(g) {
        if block.len() < 3 {
            continue; // a bridge or a single cycle edge cannot break planarity
        }
        if !block_planar(&block) {
            return false;
        }
    }
    true
}

/// Edge sets of the biconnected blocks (bridges appear as 1-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.n();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut stack: Vec<Edge> = Vec::new();
    let mut blocks = Vec::new();

    // iterative DFS: (vertex, neighbor index)
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, ref mut idx)) = call.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(edge(v, w));
                    call.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    stack.push(edge(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        // u cuts off the subtree at v; flush its block,
                        // everything pushed after (and including) edge (u,v)
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == edge(u, v) {
                                break;
                            }
                        }
                        if !block.is_empty() {
                            blocks.push(block);
                        }
                    }
                }
            }
        }
    }
    blocks
}

/// Planarity of one biconnected block given by its edge list.
fn block_planar(edges: &[Edge]) -> bool {
    // relabel vertices
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    let m = edges.len();
    if n < 5 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let index = |v: usize| verts.binary_search(&v).unwrap();
    let es: Vec<Edge> = edges.iter().map(|&(u, v)| edge(index(u), index(v))).collect();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &es {
        adj[u].push(v);
        adj[v].push(u);
    }

    // initial cycle by DFS
    let cycle = find_cycle(n, &adj).expect("biconnected block with n >= 3 has a cycle");

    let mut in_h = vec![false; n];
    for &v in &cycle {
        in_h[v] = true;
    }
    let mut embedded = vec![false; m];
    let eidx: std::collections::HashMap<Edge, usize> =
        es.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    for i in 0..cycle.len() {
        let e = edge(cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded[eidx[&e]] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut remaining = m - cycle.len();

    while remaining > 0 {
        // fragments: single chords, and components of G − H with their pendant edges
        struct Fragment {
            attachments: Vec<usize>,
            comp: Vec<usize>,  // interior (non-H) vertices, empty for a chord
            chord: Option<Edge>,
        }
        let mut fragments: Vec<Fragment> = Vec::new();
        for (i, &(u, v)) in es.iter().enumerate() {
            if !embedded[i] && in_h[u] && in_h[v] {
                fragments.push(Fragment {
                    attachments: vec![u, v],
                    comp: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if in_h[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = std::collections::VecDeque::from([s]);
            seen[s] = true;
            let mut attachments = std::collections::BTreeSet::new();
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if in_h[w] {
                        attachments.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            fragments.push(Fragment {
                attachments: attachments.into_iter().collect(),
                comp,
                chord: None,
            });
        }

        // admissible faces per fragment
        let mut best: Option<(usize, usize, usize)> = None; // (count, fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (i, face) in faces.iter().enumerate() {
                if frag.attachments.iter().all(|a| face.contains(a)) {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = i;
                    }
                }
            }
            if count == 0 {
                return false;
            }
            if best.map_or(true, |(c, _, _)| count < c) {
                best = Some((count, fi, first_face));
            }
        }
        let (_, fi, face_id) = best.expect("fragments nonempty while edges remain");
        let frag = &fragments[fi];

        // choose a path between two attachments through the fragment
        let path: Vec<usize> = if let Some((u, v)) = frag.chord {
            vec![u, v]
        } else {
            fragment_path(&adj, &in_h, &frag.comp, &frag.attachments)
        };

        // mark path as embedded
        for w in path.windows(2) {
            embedded[eidx[&edge(w[0], w[1])]] = true;
            remaining -= 1;
        }
        for &v in &path[1..path.len() - 1] {
            in_h[v] = true;
        }

        // split the chosen face
        let face = faces[face_id].clone();
        let (a, b) = (path[0], path[path.len() - 1]);
        let ia = face.iter().position(|&v| v == a).unwrap();
        let ib = face.iter().position(|&v| v == b).unwrap();
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % face.len();
            }
            out
        };
        let interior: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut f1 = arc(ia, ib);
        f1.extend(interior.iter().rev());
        let mut f2 = arc(ib, ia);
        f2.extend(interior.iter());
        faces[face_id] = f1;
        faces.push(f2);
    }
    true
}

/// Any cycle in a connected graph with a cycle, as a vertex list.
fn find_cycle(n: usize, adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((v, p)) = stack.pop() {
        if depth[v] != usize::MAX {
            continue;
        }
        parent[v] = p;
        depth[v] = if p == usize::MAX { 0 } else { depth[p] + 1 };
        for &w in &adj[v] {
            if depth[w] == usize::MAX {
                stack.push((w, v));
            } else if w != p {
                // back edge v→w: cycle w ... v
                let mut path = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    if cur == usize::MAX {
                        break;
                    }
                    path.push(cur);
                }
                if path.last() == Some(&w) {
                    return Some(path);
                }
            }
        }
    }
    None
}

/// Shortest path between two distinct attachment vertices whose interior lies
/// in the fragment's component.
fn fragment_path(
    adj: &[Vec<usize>],
    in_h: &[bool],
    comp: &[usize],
    attachments: &[usize],
) -> Vec<usize> {
    let a = attachments[0];
    let in_comp = {
        let mut set = vec![false; adj.len()];
        for &v in comp {
            set[v] = true;
        }
        set
    };
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    // first step from a must enter the component
    for &w in &adj[a] {
        if in_comp[w] && !seen[w] {
            seen[w] = true;
            parent[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if in_h[w] && w != a {
                // reached another attachment
                let mut path = vec![w, v];
                let mut cur = v;
                while parent[cur] != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if in_comp[w] && !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment in a biconnected graph has two attachments");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_subdivision, nested_triangles, Graph};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Kuratowski-subdivision brute force for n ≤ 8: planar iff no K. or K3,3
    /// subdivision. Independent of the embedding algorithm above.
    fn planar_by_kuratowski(g: &Graph) -> bool {
        !has_subdivision_k5(g) && !has_subdivision_k33(g)
    }

    fn path_exists(g: &Graph, a: usize, b: usize, interior: &[usize]) -> bool {
        // a path a → perm(interior) → b with all hops edges of g
        fn perms(items: &[usize]) -> Vec<Vec<usize>> {
            if items.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for (i, &x) in items.iter().enumerate() {
                let mut rest = items.to_vec();
                rest.remove(i);
                for mut p in perms(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        for p in perms(interior) {
            let mut ok = true;
            let mut cur = a;
            for &x in &p {
                if !g.has_edge(cur, x) {
                    ok = false;
                    break;
                }
                cur = x;
            }
            if ok && g.has_edge(cur, b) {
                return true;
            }
        }
        false
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        if k > n {
            return out;
        }
        loop {
            out.push(idx.clone());
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    fn has_subdivision(g: &Graph, branch_count: usize, pattern_of: &dyn Fn(&[usize]) -> Vec<Vec<(usize, usize)>>, min_deg: usize) -> bool {
        let n = g.n();
        if n < branch_count {
            return false;
        }
        let deg = g.degrees();
        for branches in combinations(n, branch_count) {
            if branches.iter().any(|&v| deg[v] < min_deg) {
                continue;
            }
            let spares: Vec<usize> = (0..n).filter(|v| !branches.contains(v)).collect();
            for pattern in pattern_of(&branches) {
                let p = pattern.len();
                // assign each spare vertex to one of the p paths or to none
                let mut assign = vec![0usize; spares.len()]; // 0 = unused, 1..=p
                loop {
                    let mut interiors: Vec<Vec<usize>> = vec![Vec::new(); p];
                    for (si, &a) in assign.iter().enumerate() {
                        if a > 0 {
                            interiors[a - 1].push(spares[si]);
                        }
                    }
                    if (0..p).all(|i| path_exists(g, pattern[i].0, pattern[i].1, &interiors[i])) {
                        return true;
                    }
                    // increment the mixed-radix counter
                    let mut carry = true;
                    for slot in assign.iter_mut() {
                        if *slot == p {
                            *slot = 0;
                        } else {
                            *slot += 1;
                            carry = false;
                            break;
                        }
                    }
                    if carry {
                        break;
                    }
                }
            }
        }
        false
    }

    fn has_subdivision_k5(g: &Graph) -> bool {
        has_subdivision(
            g,
            5,
            &|branches| {
                let mut pairs = Vec::new();
                for i in 0..5 {
                    for j in i + 1..5 {
                        pairs.push((branches[i], branches[j]));
                    }
                }
                vec![pairs]
            },
            3,
        )
    }

    fn has_subdivision_k33(g: &Graph) -> bool {
        has_subdivision(
            g,
            6,
            &|branches| {
                let mut patterns = Vec::new();
                for left in combinations(6, 3) {
                    if !left.contains(&0) {
                        continue; // fix vertex 0 on the left side to kill the swap symmetry
                    }
                    let right: Vec<usize> = (0..6).filter(|i| !left.contains(i)).collect();
                    let mut pairs = Vec::new();
                    for &i in &left {
                        for &j in &right {
                            pairs.push((branches[i], branches[j]));
                        }
                    }
                    patterns.push(pairs);
                }
                patterns
            },
            3,
        )
    }

    #[test]
    fn matches_kuratowski_exhaustive_n5() {
        // all graphs on 5 vertices
        for mask in 0u32..(1 << 10) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask & (1 << bit) != 0 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::new(5, edges).unwrap();
            assert_eq!(
                is_planar(&g),
                planar_by_kuratowski(&g),
                "disagreement at mask {mask}"
            );
        }
    }

    #[test]
    fn matches_kuratowski_random_n6_to_n8() {
        let mut rng = StdRng::seed_from_u64(0xB10C5);
        for n in 6..=8 {
            let trials = if n == 8 { 60 } else { 150 };
            for _ in 0..trials {
                let p = rng.gen_range(0.25..0.75);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(
                    is_planar(&g),
                    planar_by_kuratowski(&g),
                    "disagreement on n={n} graph {:?}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn named_graphs() {
        assert!(!is_planar(&complete_graph(5).unwrap()));
        assert!(is_planar(&complete_graph(4).unwrap()));
        assert!(is_planar(&nested_triangles(7).unwrap()));
        assert!(!is_planar(&complete_subdivision(5).unwrap()));
        assert!(is_planar(&complete_subdivision(4).unwrap()));
        // two blocks sharing an articulation vertex: K_4 glued to K_4
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]);
        assert!(is_planar(&Graph::new(7, edges).unwrap()));
        // K_5 glued to a triangle stays nonplanar
        let mut edges = vec![(5, 6), (6, 7), (5, 7)];
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        assert!(!is_planar(&Graph::new(8, edges).unwrap()));
    }
}
