//! Acceptance checks: one test per shipped guarantee, each printing a
//! single PASS line (with its elapsed time) when it holds. Every check
//! recomputes its claim from scratch — closed formulas against exhaustive
//! search, constructions against independent verifiers, and greedy
//! partitions against brute-force extremal sets.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thrackles::convex::{
    complete_matching_partition, compose_track_to_convex, convex_kn_upper_coloring,
    is_convex_thrackle, is_thrackled_matching, matchings_class_count, small_complete_partition,
    verify_walecki, walecki_partition,
};
use thrackles::geometry::{
    check_not_geometric_thrackle, geometric_thickness_extremal, is_noncrossing_class,
    knprime_drawing, Drawing, SegmentRelation,
};
use thrackles::graph::{
    compatible_bijections, complete_graph, planarity_check, relabel, two_claw, Edge, Graph,
};
use thrackles::linear::{
    greedy_queue_assign, max_rainbow, random_track_layout, two_track_noncrossing_partition,
    two_track_thrackle_partition, TwoTrackDrawing, TwoTrackRelation, VertexOrdering,
};
use thrackles::numbers::{
    ctn_complete_formula, ctn_lower_bound, ctn_upper_bound_interval, n_ln_2n_interval, q, q_usize,
};
use thrackles::oracle::{
    convex_antithickness_exact, max_clique, queue_number_exact, thickness_lower_by_density,
    BitGraph,
};
use thrackles::Error;

const ORACLE_BUDGET: u64 = 200_000_000;

fn finish(name: &str, detail: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {name} PASS: {detail} ({} ms)", elapsed.as_millis());
    assert!(
        elapsed <= limit,
        "criterion {name} exceeded its {:?} time budget: {elapsed:?}",
        limit
    );
}

fn random_graph(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize, num: u32, den: u32) -> Graph {
    let n = rng.gen_range(n_lo..=n_hi);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(num, den) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("random graph is simple by construction")
}

/// Size of the largest edge set whose pairs all satisfy `adj`, by exact
/// maximum-clique search on the compatibility graph.
fn largest_pairwise_set(m: usize, adj: impl Fn(usize, usize) -> bool) -> usize {
    if m == 0 {
        return 0;
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if adj(i, j) {
                pairs.push((i, j));
            }
        }
    }
    let g = Graph::new(m, pairs).expect("compatibility graph");
    max_clique(&BitGraph::from_graph(&g).expect("fits in machine words")).len()
}

/// The exact solver for complete-graph convex antithickness agrees with the
/// closed formula n − ⌊√(2n+¼) − ½⌋ on every size it can search.
#[test]
fn criterion_01_complete_antithickness_formula() {
    let started = Instant::now();
    let mut checked_ten = "n=10 skipped (search budget exhausted)";
    for n in 3..=10usize {
        let formula = ctn_complete_formula(n as u64) as usize;
        let result = convex_antithickness_exact(&complete_graph(n).unwrap(), ORACLE_BUDGET);
        match result {
            Ok(r) => {
                assert_eq!(
                    r.value, formula,
                    "complete graph on {n}: solver found {}, formula gives {formula}",
                    r.value
                );
                if n == 10 {
                    checked_ten = "including n=10";
                }
            }
            Err(Error::CapExceeded(_)) if n == 10 => {}
            Err(e) => panic!("solver failed on complete graph of {n} vertices: {e}"),
        }
    }
    finish(
        "01",
        &format!("complete-graph antithickness equals the closed formula for n=3..=9, {checked_ten}"),
        started,
        Duration::from_secs(300),
    );
}

/// The matching partition of every complete graph up to 128 vertices has
/// exactly the harmonic-sum class count, every class is a thrackled
/// matching, and the count stays strictly below n·ln(2n) — the comparison
/// made through certified rational enclosures of the logarithm.
#[test]
fn criterion_02_matching_partition_counts() {
    let started = Instant::now();
    for n in 6..=128usize {
        let (pi, p) = complete_matching_partition(n).unwrap();
        assert_eq!(
            p.class_count(),
            matchings_class_count(n),
            "class count mismatch at n={n}"
        );
        p.validate_against(&complete_graph(n).unwrap()).unwrap();
        for class in p.classes() {
            assert!(is_thrackled_matching(&pi, class), "non-matching class at n={n}");
            assert!(is_convex_thrackle(&pi, class), "non-thrackle class at n={n}");
        }
        let envelope = n_ln_2n_interval(n as u64).unwrap();
        assert!(
            envelope.lo > q_usize(p.class_count()),
            "count {} not certainly below n ln(2n) at n={n}",
            p.class_count()
        );
    }
    finish(
        "02",
        "matching partitions for n=6..=128 have the harmonic-sum count, all classes \
         thrackled matchings, count < n ln(2n) by certified enclosures",
        started,
        Duration::from_secs(60),
    );
}

/// The spaced-difference coloring of the complete graph stays within the
/// n − √(n/2) − ln(n)/2 + 4 enclosure upper bound and above the known
/// 2⌊(n+1)/3⌋ − 1 lower bound.
#[test]
fn criterion_03_complete_coloring_bounds() {
    let started = Instant::now();
    for n in [12usize, 24, 48, 64, 128] {
        let u = convex_kn_upper_coloring(n).unwrap();
        u.partition.validate_against(&complete_graph(n).unwrap()).unwrap();
        let pi = VertexOrdering::identity(n);
        for class in u.partition.classes() {
            assert!(is_convex_thrackle(&pi, class), "non-thrackle class at n={n}");
        }
        let count = u.partition.class_count();
        let upper = ctn_upper_bound_interval(n as u64).unwrap();
        assert!(
            upper.certainly_ge(&q_usize(count)),
            "count {count} not certainly within the upper bound at n={n}"
        );
        let lower = ctn_lower_bound(n as u64) as usize;
        assert!(count >= lower, "count {count} below the lower bound {lower} at n={n}");
    }
    finish(
        "03",
        "complete-graph colorings for n in {12,24,48,64,128} sit between the certified \
         upper enclosure and the floor lower bound",
        started,
        Duration::from_secs(60),
    );
}

/// The rotation bijections of the nested-triangulation produce pairwise
/// edge-disjoint planar copies whose union pins its thickness exactly by
/// the density lower bound.
#[test]
fn criterion_04_compatible_bijections() {
    let started = Instant::now();
    let expected_primes = [5usize, 13, 29];
    for k in 1..=3usize {
        let (g, bijections, union) = compatible_bijections(k).unwrap();
        let n = g.n() / 3;
        assert_eq!(n, expected_primes[k - 1], "wrong prime for k={k}");
        assert_eq!(bijections.len(), k);
        let copies: Vec<Graph> = bijections
            .iter()
            .map(|f| relabel(&g, f).unwrap())
            .collect();
        let mut merged: Vec<Edge> = Vec::new();
        for (i, c) in copies.iter().enumerate() {
            assert!(planarity_check(c), "copy {i} not planar for k={k}");
            assert_eq!(c.m(), g.m(), "copy {i} lost edges for k={k}");
            merged.extend_from_slice(c.edges());
        }
        let total = merged.len();
        merged.sort_unstable();
        merged.dedup();
        assert_eq!(merged.len(), total, "copies share an edge for k={k}");
        assert_eq!(merged, union.edges(), "union is not the merged edge set for k={k}");
        assert_eq!(union.m(), 3 * k * (3 * n - 2), "union edge count wrong for k={k}");
        assert_eq!(
            thickness_lower_by_density(&union).unwrap(),
            k,
            "density bound does not pin thickness for k={k}"
        );
    }
    finish(
        "04",
        "k=1,2,3 rotation copies (primes 5,13,29) are edge-disjoint planar triangulations \
         with union size 3k(3n-2) and density lower bound exactly k",
        started,
        Duration::from_secs(60),
    );
}

/// The layered extremal drawings achieve k(3n−4k−3) edges with every color
/// class non-crossing under exact rational predicates, below the k(3n−k−5)
/// ceiling.
#[test]
fn criterion_05_extremal_layered_drawings() {
    let started = Instant::now();
    for (k, s) in [(2usize, 2usize), (2, 3), (2, 4), (3, 3)] {
        let layered = geometric_thickness_extremal(k, s).unwrap();
        let g = layered.drawing.graph();
        let n = g.n();
        assert_eq!(
            g.m(),
            k * (3 * n - 4 * k - 3),
            "edge count off the nominal identity for k={k}, s={s}"
        );
        assert!(
            g.m() <= k * (3 * n - k - 5),
            "edge count above the ceiling for k={k}, s={s}"
        );
        assert_eq!(layered.color_count(), k, "wrong class count for k={k}, s={s}");
        let mut classes = vec![Vec::new(); k];
        for (ei, &c) in layered.colors.iter().enumerate() {
            classes[c].push(ei);
        }
        for (c, class) in classes.iter().enumerate() {
            assert!(
                is_noncrossing_class(&layered.drawing, class).unwrap(),
                "color {c} crosses itself for k={k}, s={s}"
            );
        }
    }
    finish(
        "05",
        "layered drawings for (k,s) in {(2,2),(2,3),(2,4),(3,3)} hit k(3n-4k-3) edges, \
         all classes non-crossing under exact predicates, within the k(3n-k-5) cap",
        started,
        Duration::from_secs(120),
    );
}

/// In the two-colored subdivision drawing of the complete graph, every
/// same-colored edge pair meets; two classes are optimal as soon as the
/// graph has more edges than vertices, since a single geometric thrackle
/// carries at most as many edges as vertices.
#[test]
fn criterion_06_subdivided_complete_two_classes() {
    let started = Instant::now();
    for n in 3..=6usize {
        let s = knprime_drawing(n).unwrap();
        let edges = s.drawing.graph().edges();
        let index: BTreeMap<Edge, usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        assert_eq!(s.blue.len() + s.red.len(), edges.len(), "classes must cover all edges");
        for (name, class) in [("blue", &s.blue), ("red", &s.red)] {
            for (a, &e) in class.iter().enumerate() {
                for &f in &class[a + 1..] {
                    let rel = s.drawing.relation(index[&e], index[&f]).unwrap();
                    assert_ne!(
                        rel,
                        SegmentRelation::Disjoint,
                        "{name} edges {e:?} and {f:?} fail to meet for n={n}"
                    );
                }
            }
        }
        if n >= 4 {
            let (nv, m) = (s.drawing.graph().n(), s.drawing.graph().m());
            assert!(
                m > nv,
                "optimality needs more edges than vertices at n={n} (got {m} vs {nv})"
            );
        }
    }
    finish(
        "06",
        "subdivided complete drawings for n=3..=6 have all same-color pairs meeting; \
         for n>=4 the two classes are optimal because |E| > |V|",
        started,
        Duration::from_secs(300),
    );
}

/// On random two-track drawings the greedy partition counts equal the exact
/// extremal sets they are built from, and reversing one track exchanges the
/// two parameters.
#[test]
fn criterion_07_two_track_duality() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..200 {
        let t = rng.gen_range(2..=4usize);
        let b = rng.gen_range(2..=4usize);
        let mut edges = Vec::new();
        for u in 0..t {
            for v in 0..b {
                if rng.gen_ratio(3, 5) {
                    edges.push((u, t + v));
                }
            }
        }
        if edges.len() < 2 {
            continue;
        }
        let mut top: Vec<usize> = (0..t).collect();
        let mut bottom: Vec<usize> = (t..t + b).collect();
        top.shuffle(&mut rng);
        bottom.shuffle(&mut rng);
        let d = TwoTrackDrawing::new(top, bottom, edges).unwrap();
        let thrackle = two_track_thrackle_partition(&d).unwrap().class_count();
        let noncross = two_track_noncrossing_partition(&d).unwrap().class_count();
        let m = d.edges.len();
        let relation_set = |rel: TwoTrackRelation| {
            largest_pairwise_set(m, |i, j| d.relation(d.edges[i], d.edges[j]) == rel)
        };
        assert_eq!(
            thrackle,
            relation_set(TwoTrackRelation::Disjoint),
            "thrackle partition count off the exact disjoint set (round {round})"
        );
        assert_eq!(
            noncross,
            relation_set(TwoTrackRelation::Cross),
            "noncrossing partition count off the exact crossing set (round {round})"
        );
        let r = d.reversed_bottom();
        assert_eq!(
            two_track_thrackle_partition(&r).unwrap().class_count(),
            noncross,
            "reversal must swap the two counts (round {round})"
        );
        assert_eq!(
            two_track_noncrossing_partition(&r).unwrap().class_count(),
            thrackle,
            "reversal must swap the two counts (round {round})"
        );
    }
    finish(
        "07",
        "200 seeded two-track drawings: partition counts equal exact extremal sets and \
         track reversal exchanges them",
        started,
        Duration::from_secs(60),
    );
}

/// The greedy queue assignment is exactly the rainbow size on every
/// ordering, and the exact queue number never exceeds the exact convex
/// antithickness.
#[test]
fn criterion_08_queue_machinery() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for round in 0..200 {
        let g = random_graph(&mut rng, 4, 8, 9, 20);
        let mut orderings = vec![
            VertexOrdering::identity(g.n()),
            VertexOrdering::identity(g.n()).reversed(),
        ];
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            orderings.push(VertexOrdering::new(perm).unwrap());
        }
        for pi in &orderings {
            let layout = greedy_queue_assign(&g, pi).unwrap();
            assert_eq!(
                layout.classes.class_count(),
                max_rainbow(&g, pi),
                "greedy queue count differs from the rainbow size (round {round})"
            );
        }
        let qn = queue_number_exact(&g).unwrap().value;
        let cat = convex_antithickness_exact(&g, ORACLE_BUDGET).unwrap().value;
        assert!(
            qn <= cat,
            "queue number {qn} exceeds convex antithickness {cat} (round {round})"
        );
    }
    finish(
        "08",
        "200 seeded graphs: greedy queue assignment equals the rainbow bound on every \
         ordering, and exact queue number <= exact convex antithickness",
        started,
        Duration::from_secs(300),
    );
}

/// Composing a track layout with a convex template of its track-complete
/// graph yields at most (colors)·(template classes) convex thrackles.
#[test]
fn criterion_09_track_to_convex_composition() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut found = 0usize;
    let mut seed = 0u64;
    while found < 50 {
        seed += 1;
        assert!(seed < 4000, "could not find 50 track layouts");
        let g = random_graph(&mut rng, 4, 9, 2, 5);
        if g.m() == 0 {
            continue;
        }
        let t = rng.gen_range(3..=5usize);
        let k = rng.gen_range(1..=2usize);
        let Some(layout) = random_track_layout(&g, t, k, seed).unwrap() else {
            continue;
        };
        let tracks = layout.track_count();
        let pattern = if (3..=5).contains(&tracks) {
            small_complete_partition(tracks).unwrap()
        } else {
            complete_matching_partition(tracks).unwrap().1
        };
        let (pi, p) = compose_track_to_convex(&g, &layout, &pattern).unwrap();
        assert!(
            p.class_count() <= layout.color_count().max(1) * pattern.class_count(),
            "composition exceeded colors x template classes (seed {seed})"
        );
        for class in p.classes() {
            assert!(is_convex_thrackle(&pi, class), "non-thrackle class (seed {seed})");
        }
        found += 1;
    }
    finish(
        "09",
        "50 seeded track layouts compose into <= colors x template-classes convex \
         thrackles, all classes verified",
        started,
        Duration::from_secs(60),
    );
}

/// The rotating Hamiltonian decomposition produces exactly ⌈(n−1)/2⌉
/// verified classes for every n in 5..=13.
#[test]
fn criterion_10_hamiltonian_decomposition() {
    let started = Instant::now();
    for n in 5..=13usize {
        let p = walecki_partition(n).unwrap();
        verify_walecki(n, &p).unwrap();
        assert_eq!(
            p.class_count(),
            (n - 1).div_ceil(2),
            "wrong class count at n={n}"
        );
    }
    finish(
        "10",
        "Hamiltonian decompositions for n=5..=13 verify with exactly ceil((n-1)/2) classes",
        started,
        Duration::from_secs(10),
    );
}

/// No straight-line placement of the double claw is a geometric thrackle:
/// every random rational placement must fail the test, so a single passing
/// placement refutes the implementation.
#[test]
fn criterion_11_double_claw_falsifier() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let claw = two_claw();
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 1000 {
        attempts += 1;
        assert!(attempts < 20_000, "too many degenerate placements");
        let points: Vec<(thrackles::numbers::Q, thrackles::numbers::Q)> = (0..claw.n())
            .map(|_| {
                (
                    q(rng.gen_range(-60..=60), rng.gen_range(1..=6)),
                    q(rng.gen_range(-60..=60), rng.gen_range(1..=6)),
                )
            })
            .collect();
        let Ok(d) = Drawing::new(claw.clone(), points) else {
            continue; // degenerate placement: not in general position
        };
        assert!(
            check_not_geometric_thrackle(&d).unwrap(),
            "found a geometric thrackle placement of the double claw — refutation!"
        );
        checked += 1;
    }
    finish(
        "11",
        "1000 seeded rational placements of the double claw all fail the geometric \
         thrackle test",
        started,
        Duration::from_secs(30),
    );
}
