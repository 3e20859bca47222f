//! The `report` subcommand: regenerate the bound tables.
//!
//! The report contains only integers and booleans derived from certified
//! rational enclosures, so its bytes do not depend on `--jobs`.

use serde_json::{json, Value};

use thrackles::convex::{
    complete_matching_partition, convex_kn_upper_coloring, matchings_class_count,
};
use thrackles::geometry::geometric_thickness_extremal;
use thrackles::graph::complete_graph;
use thrackles::numbers::{
    ctn_complete_formula, ctn_lower_bound, ctn_upper_bound_interval, n_ln_2n_interval, q_usize,
};
use thrackles::oracle::convex_antithickness_exact;

use crate::{CliResult, Failure};

/// Node budget for the oracle column; small graphs finish far below it.
const ORACLE_BUDGET: u64 = 100_000_000;

/// Sizes the enclosure-vs-construction coloring table covers.
const COLORING_SIZES: [usize; 5] = [12, 24, 48, 64, 128];

/// The extremal layered-drawing parameters with exact edge-count identities.
const EXTREMAL_PAIRS: [(usize, usize); 4] = [(2, 2), (2, 3), (2, 4), (3, 3)];

/// Order-preserving parallel map; results are identical for every `jobs`.
fn par_map<T, F>(items: &[T], jobs: usize, f: F) -> CliResult<Vec<Value>>
where
    T: Sync,
    F: Fn(&T) -> CliResult<Value> + Sync,
{
    if items.is_empty() {
        return Ok(Vec::new());
    }
    let jobs = jobs.clamp(1, items.len());
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut out: Vec<Option<CliResult<Value>>> = Vec::new();
    out.resize_with(items.len(), || None);
    std::thread::scope(|scope| {
        let f = &f;
        let mut handles = Vec::new();
        for (w, slice) in items.chunks(chunk).enumerate() {
            handles.push((
                w * chunk,
                scope.spawn(move || slice.iter().map(f).collect::<Vec<_>>()),
            ));
        }
        for (start, h) in handles {
            for (i, r) in h.join().expect("report worker panicked").into_iter().enumerate() {
                out[start + i] = Some(r);
            }
        }
    });
    out.into_iter().map(|r| r.expect("all rows computed")).collect()
}

pub fn bounds(nmax: usize, oracle_nmax: usize, jobs: usize) -> CliResult<Value> {
    if nmax < 3 {
        return Err(Failure::schema("report bounds requires --nmax >= 3"));
    }

    // Convex antithickness of complete graphs: closed form vs exact search.
    let ctn_rows: Vec<usize> = (3..=nmax.min(64)).collect();
    let oracle_cap = oracle_nmax.min(10);
    let ctn_complete = par_map(&ctn_rows, jobs, |&n| {
        let formula = ctn_complete_formula(n as u64);
        let mut row = json!({"n": n, "formula": formula});
        if n <= oracle_cap {
            let r = convex_antithickness_exact(&complete_graph(n)?, ORACLE_BUDGET)?;
            row.as_object_mut()
                .expect("rows are objects")
                .insert("oracle".into(), json!(r.value));
            if r.value as u64 != formula {
                return Err(Failure::verification(format!(
                    "complete graph on {n}: oracle {} != formula {formula}",
                    r.value
                )));
            }
        }
        Ok(row)
    })?;

    // Matching partitions of complete graphs vs the n ln(2n) envelope.
    let matching_rows: Vec<usize> = (6..=nmax).collect();
    let matching_classes = par_map(&matching_rows, jobs, |&n| {
        let (_, p) = complete_matching_partition(n)?;
        let classes = p.class_count();
        if classes != matchings_class_count(n) {
            return Err(Failure::verification(format!(
                "matching partition of {n} has {classes} classes, expected the harmonic sum"
            )));
        }
        let envelope = n_ln_2n_interval(n as u64)?;
        Ok(json!({
            "n": n,
            "classes": classes,
            "below_n_ln_2n": envelope.lo > q_usize(classes),
        }))
    })?;

    // The spaced-set coloring vs the enclosure upper bound and the lower bound.
    let coloring_rows: Vec<usize> = COLORING_SIZES.iter().copied().filter(|&n| n <= nmax).collect();
    let convex_coloring = par_map(&coloring_rows, jobs, |&n| {
        let u = convex_kn_upper_coloring(n)?;
        let classes = u.partition.class_count();
        let upper = ctn_upper_bound_interval(n as u64)?;
        let lower = ctn_lower_bound(n as u64) as usize;
        Ok(json!({
            "n": n,
            "classes": classes,
            "within_upper": upper.certainly_ge(&q_usize(classes)),
            "lower": lower,
            "at_least_lower": classes >= lower,
        }))
    })?;

    // Extremal layered drawings: nominal edge identity and the hard cap.
    let extremal = par_map(&EXTREMAL_PAIRS, jobs, |&(k, s)| {
        let layered = geometric_thickness_extremal(k, s)?;
        let g = layered.drawing.graph();
        let n = g.n();
        let edges = g.m();
        let expected = k * (3 * n - 4 * k - 3);
        let cap = k * (3 * n - k - 5);
        Ok(json!({
            "k": k,
            "s": s,
            "n": n,
            "edges": edges,
            "expected": expected,
            "matches": edges == expected,
            "cap": cap,
            "within_cap": edges <= cap,
        }))
    })?;

    Ok(json!({
        "type": "bounds_report",
        "nmax": nmax,
        "oracle_nmax": oracle_nmax,
        "ctn_complete": ctn_complete,
        "matching_classes": matching_classes,
        "convex_coloring": convex_coloring,
        "extremal": extremal,
    }))
}
