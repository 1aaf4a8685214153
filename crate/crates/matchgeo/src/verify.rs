//! End-to-end oracle suite: recomputes every structural claim about the
//! flip graph at one size `m` by brute force and compares against the
//! closed forms. Sampling is seeded, so a run is reproducible bit for bit.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::geodesics::{
    count_cycle_factorizations, cycle_geodesics_closed, cycle_geodesics_recurrence,
    cycle_geodesics_weighted, enumerate_geodesics, geodesic_count, labeled_tree_count,
    DEFAULT_GEODESIC_CAP,
};
use crate::graph::MatchingGraph;
use crate::matching::{matching_count, matching_count_u64, Edge, Matching};
use crate::metric::{
    antipode_count, antipodes, antipodes_filtered_default, classify_insertion, distance,
    InsertionEffect,
};
use crate::noncrossing::{
    boundary_pair, catalan, is_noncrossing, noncrossing_distance, verify_unique_maximal_pair,
};

/// One named verification outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Statistics on success, the first counterexample on failure.
    pub detail: String,
}

/// Outcome of the whole suite at one size.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub m: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

const SUITE_SEED: u64 = 0x6d61_7463_6867;

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// Whether an edge insertion into both members of an adjacent pair behaves
/// as the case split predicts: insertions touching two vertices of the
/// symmetric-difference 4-cycle merge the pair, all others keep it adjacent.
pub fn insertion_adjacency_lemma_holds(
    m1: &Matching,
    m2: &Matching,
    e: Edge,
) -> Result<bool, Error> {
    let cycle_vertices: BTreeSet<u32> = m1
        .symmetric_difference(m2)?
        .iter()
        .flat_map(|d| [d.a(), d.b()])
        .collect();
    let touched = [e.a(), e.b()]
        .iter()
        .filter(|v| cycle_vertices.contains(v))
        .count();
    let r1 = m1.insert_edge(e)?;
    let r2 = m2.insert_edge(e)?;
    Ok(if touched == 2 {
        r1 == r2
    } else {
        r1 != r2 && r1.is_adjacent(&r2)?
    })
}

fn sample(m: usize, total: u64, rng: &mut ChaCha8Rng) -> Matching {
    crate::matching::matching_by_rank(m, rng.gen_range(0..total))
        .expect("rank is within range")
}

/// Runs the full oracle suite for size `m` (at least 2). Fails with a
/// resource error when `(2m-1)!!` is too large to materialize.
pub fn run_suite(m: usize) -> Result<VerifyReport, Error> {
    assert!(m >= 2, "the suite needs at least two edges");
    let graph = MatchingGraph::build(m, crate::metric::DEFAULT_BFS_CAP)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED + m as u64);
    let total = matching_count_u64(m).expect("size fits after the cap check");
    let mut checks = Vec::new();

    // vertex count
    let want_order = matching_count(m);
    let order_ok = BigUint::from(graph.vertex_count()) == want_order;
    checks.push(check(
        "order",
        order_ok,
        format!("{} vertices, expected {want_order}", graph.vertex_count()),
    ));

    // regularity
    let want_degree = m * (m - 1);
    let bad_degree = (0..graph.vertex_count()).find(|&i| graph.degree(i) != want_degree);
    checks.push(check(
        "regularity",
        bad_degree.is_none(),
        match bad_degree {
            None => format!("every degree is {want_degree}"),
            Some(i) => format!(
                "vertex {} has degree {}, expected {want_degree}",
                graph.vertices()[i],
                graph.degree(i)
            ),
        },
    ));

    // connectivity
    let from_first = graph.bfs_distances(0);
    let unreached = from_first.iter().filter(|&&d| d == u32::MAX).count();
    checks.push(check(
        "connectivity",
        unreached == 0,
        format!("{unreached} vertices unreached from the first"),
    ));

    // distance formula against breadth-first search
    checks.push(distance_formula_check(&graph, m, &mut rng));

    // eccentricity, diameter and antipode counts per vertex
    checks.push(eccentricity_check(&graph, m, &mut rng));

    // antipode generator against the filter oracle
    checks.push(antipode_oracle_check(m, total, &mut rng));

    // insertion trichotomy
    checks.push(trichotomy_check(&graph, m, total, &mut rng));

    // insertion into adjacent pairs
    checks.push(adjacency_lemma_check(&graph, m, total, &mut rng));

    // first insertion of a missing target edge
    checks.push(first_insertion_check(&graph, m, total, &mut rng));

    // geodesics keep the common edges of their endpoints
    checks.push(common_edges_check(&graph, m, total, &mut rng));

    // four routes to the single-cycle geodesic count
    let mut counts_ok = true;
    let mut counts_detail = String::from("agreement up to k=12");
    for k in 1..=12usize {
        let a = cycle_geodesics_recurrence(k);
        let b = cycle_geodesics_weighted(k);
        let c = cycle_geodesics_closed(k);
        let d = labeled_tree_count(k);
        if !(a == b && b == c && c == d) {
            counts_ok = false;
            counts_detail = format!("k={k}: recurrence {a}, weighted {b}, closed {c}, trees {d}");
            break;
        }
    }
    checks.push(check("single-cycle-counts", counts_ok, counts_detail));

    // enumerated geodesics between one antipodal pair
    let base = Matching::consecutive(m);
    let anti = antipodes(&base).next().expect("m >= 2 has antipodes");
    let want = cycle_geodesics_closed(m);
    let got = enumerate_geodesics(&base, &anti, DEFAULT_GEODESIC_CAP)?.count();
    checks.push(check(
        "antipodal-geodesics",
        BigUint::from(got) == want,
        format!("{got} paths between {base} and {anti}, expected {want}"),
    ));

    // counting formula against enumeration for arbitrary pairs
    checks.push(pair_count_check(&graph, m, total, &mut rng));

    // the single-cycle count ignores the ambient size
    checks.push(embedding_check(m));

    // transposition factorizations of a full cycle
    if m <= 6 {
        let got = count_cycle_factorizations(m)?;
        let want = cycle_geodesics_closed(m);
        checks.push(check(
            "cycle-factorizations",
            got == want,
            format!("{got} factorizations, expected {want}"),
        ));
    }

    // non-crossing matchings are counted by the Catalan numbers
    let noncrossing: Vec<&Matching> = graph.vertices().iter().filter(|v| is_noncrossing(v)).collect();
    let want_catalan = catalan(m);
    checks.push(check(
        "catalan",
        BigUint::from(noncrossing.len()) == want_catalan,
        format!(
            "{} non-crossing matchings, expected {want_catalan}",
            noncrossing.len()
        ),
    ));

    // subgraph distances match the ambient formula
    checks.push(subgraph_distance_check(&graph));

    // geodesics between the boundary pair never leave the subgraph
    let (b1, b2) = boundary_pair(m);
    let mut boundary_ok = true;
    let mut boundary_detail = String::new();
    let mut boundary_paths = 0usize;
    for path in enumerate_geodesics(&b1, &b2, DEFAULT_GEODESIC_CAP)? {
        boundary_paths += 1;
        if let Some(step) = path.steps().iter().find(|s| !is_noncrossing(s)) {
            boundary_ok = false;
            boundary_detail = format!("step {step} crosses");
            break;
        }
    }
    if boundary_ok {
        boundary_detail = format!("all steps of {boundary_paths} paths stay non-crossing");
    }
    checks.push(check(
        "boundary-geodesics",
        boundary_ok,
        boundary_detail,
    ));

    // the boundary pair is the unique maximum in the subgraph
    let report = verify_unique_maximal_pair(m, DEFAULT_GEODESIC_CAP)?;
    checks.push(check(
        "unique-maximal-pair",
        report.holds(),
        format!(
            "maximum {} attained by {} pair(s), expected {} at the boundary pair",
            report.max_count,
            report.maximal_pairs.len(),
            report.expected_count
        ),
    ));

    Ok(VerifyReport { m, checks })
}

fn distance_formula_check(graph: &MatchingGraph, m: usize, rng: &mut ChaCha8Rng) -> Check {
    let vs = graph.vertices();
    let sources: Vec<usize> = if m <= 5 {
        (0..vs.len()).collect()
    } else {
        (0..40).map(|_| rng.gen_range(0..vs.len())).collect()
    };
    let mut pairs = 0usize;
    for &src in &sources {
        let bfs = graph.bfs_distances(src);
        let targets: Vec<usize> = if m <= 5 {
            (0..vs.len()).collect()
        } else {
            (0..250).map(|_| rng.gen_range(0..vs.len())).collect()
        };
        for tgt in targets {
            pairs += 1;
            let formula = distance(&vs[src], &vs[tgt]).unwrap();
            if formula != bfs[tgt] as usize {
                return check(
                    "distance-formula",
                    false,
                    format!(
                        "{} vs {}: formula {formula}, search {}",
                        vs[src], vs[tgt], bfs[tgt]
                    ),
                );
            }
        }
    }
    check(
        "distance-formula",
        true,
        format!("{pairs} ordered pairs agree with search"),
    )
}

fn eccentricity_check(graph: &MatchingGraph, m: usize, rng: &mut ChaCha8Rng) -> Check {
    let vs = graph.vertices();
    let sources: Vec<usize> = if m <= 5 {
        (0..vs.len()).collect()
    } else {
        (0..30).map(|_| rng.gen_range(0..vs.len())).collect()
    };
    let want_antipodes = antipode_count(m);
    for &src in &sources {
        let bfs = graph.bfs_distances(src);
        let ecc = bfs.iter().copied().max().unwrap() as usize;
        if ecc != m - 1 {
            return check(
                "eccentricity-antipodes",
                false,
                format!("{} has eccentricity {ecc}, expected {}", vs[src], m - 1),
            );
        }
        let at_max = bfs.iter().filter(|&&d| d as usize == m - 1).count();
        if BigUint::from(at_max) != want_antipodes {
            return check(
                "eccentricity-antipodes",
                false,
                format!(
                    "{} has {at_max} antipodes, expected {want_antipodes}",
                    vs[src]
                ),
            );
        }
    }
    check(
        "eccentricity-antipodes",
        true,
        format!(
            "{} vertices have eccentricity {} and {want_antipodes} antipodes",
            sources.len(),
            m - 1
        ),
    )
}

fn antipode_oracle_check(m: usize, total: u64, rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..3 {
        let base = sample(m, total, rng);
        let mut direct: Vec<Matching> = antipodes(&base).collect();
        direct.sort();
        let filtered = antipodes_filtered_default(&base).unwrap();
        if direct != filtered {
            return check(
                "antipode-generator",
                false,
                format!(
                    "direct generation yields {} antipodes of {base}, filter {}",
                    direct.len(),
                    filtered.len()
                ),
            );
        }
    }
    check(
        "antipode-generator",
        true,
        "direct generation matches the filter oracle on 3 bases".to_string(),
    )
}

fn trichotomy_check(
    graph: &MatchingGraph,
    m: usize,
    total: u64,
    rng: &mut ChaCha8Rng,
) -> Check {
    let n = 2 * m as u32;
    let mut cases = 0usize;
    let mut run = |a: &Matching, b: &Matching, e: Edge| -> Option<Check> {
        cases += 1;
        let effect = classify_insertion(a, b, e).unwrap();
        let before = distance(a, b).unwrap();
        let after = distance(&a.insert_edge(e).unwrap(), b).unwrap();
        let want = match effect {
            InsertionEffect::Increase => before + 1,
            InsertionEffect::Decrease => before - 1,
            InsertionEffect::Neutral => before,
        };
        if after != want {
            return Some(check(
                "insertion-trichotomy",
                false,
                format!("a={a} b={b} e={e}: classified {effect:?}, distance {before} -> {after}"),
            ));
        }
        None
    };
    if m <= 3 {
        let vs = graph.vertices();
        for a in vs {
            for b in vs {
                for u in 1..=n {
                    for v in u + 1..=n {
                        let e = Edge::new(u, v);
                        if a.contains(e) {
                            continue;
                        }
                        if let Some(bad) = run(a, b, e) {
                            return bad;
                        }
                    }
                }
            }
        }
    } else {
        for _ in 0..2000 {
            let a = sample(m, total, rng);
            let b = sample(m, total, rng);
            let e = loop {
                let u = rng.gen_range(1..=n);
                let v = rng.gen_range(1..=n);
                if u != v && a.partner(u) != v {
                    break Edge::new(u, v);
                }
            };
            if let Some(bad) = run(&a, &b, e) {
                return bad;
            }
        }
    }
    check(
        "insertion-trichotomy",
        true,
        format!("{cases} insertions classified consistently"),
    )
}

fn adjacency_lemma_check(
    graph: &MatchingGraph,
    m: usize,
    total: u64,
    rng: &mut ChaCha8Rng,
) -> Check {
    let n = 2 * m as u32;
    let mut cases = 0usize;
    if m <= 3 {
        let vs = graph.vertices();
        for (i, a) in vs.iter().enumerate() {
            for &j in graph.neighbors_of(i) {
                let b = &vs[j as usize];
                for u in 1..=n {
                    for v in u + 1..=n {
                        cases += 1;
                        let e = Edge::new(u, v);
                        if !insertion_adjacency_lemma_holds(a, b, e).unwrap() {
                            return check(
                                "insertion-adjacency",
                                false,
                                format!("a={a} b={b} e={e}"),
                            );
                        }
                    }
                }
            }
        }
    } else {
        for _ in 0..10_000 {
            cases += 1;
            let a = sample(m, total, rng);
            let neighbors = a.neighbors();
            let b = &neighbors[rng.gen_range(0..neighbors.len())];
            let u = rng.gen_range(1..=n);
            let v = loop {
                let v = rng.gen_range(1..=n);
                if v != u {
                    break v;
                }
            };
            let e = Edge::new(u, v);
            if !insertion_adjacency_lemma_holds(&a, b, e).unwrap() {
                return check("insertion-adjacency", false, format!("a={a} b={b} e={e}"));
            }
        }
    }
    check(
        "insertion-adjacency",
        true,
        format!("{cases} insertions into adjacent pairs behave as predicted"),
    )
}

fn first_insertion_check(
    graph: &MatchingGraph,
    m: usize,
    total: u64,
    rng: &mut ChaCha8Rng,
) -> Check {
    let pairs: Vec<(Matching, Matching)> = if m <= 3 {
        let vs = graph.vertices();
        vs.iter()
            .flat_map(|a| vs.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| a != b)
            .collect()
    } else {
        (0..300)
            .map(|_| (sample(m, total, rng), sample(m, total, rng)))
            .filter(|(a, b)| a != b)
            .collect()
    };
    let mut cases = 0usize;
    for (a, b) in &pairs {
        let d = distance(a, b).unwrap();
        for e in b.edges().filter(|&e| !a.contains(e)) {
            cases += 1;
            let closer = a.insert_edge(e).unwrap();
            if distance(&closer, b).unwrap() != d - 1 {
                return check(
                    "first-insertion",
                    false,
                    format!("a={a} b={b} e={e} does not step toward the target"),
                );
            }
        }
    }
    check(
        "first-insertion",
        true,
        format!("{cases} target-edge insertions each shrink the distance"),
    )
}

fn common_edges_check(
    graph: &MatchingGraph,
    m: usize,
    total: u64,
    rng: &mut ChaCha8Rng,
) -> Check {
    let pairs: Vec<(Matching, Matching)> = if m <= 4 {
        let vs = graph.vertices();
        vs.iter()
            .flat_map(|a| vs.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    } else {
        (0..200)
            .map(|_| (sample(m, total, rng), sample(m, total, rng)))
            .collect()
    };
    let mut paths = 0usize;
    for (a, b) in &pairs {
        let common: Vec<Edge> = a.edges().filter(|&e| b.contains(e)).collect();
        let d = distance(a, b).unwrap();
        for path in enumerate_geodesics(a, b, DEFAULT_GEODESIC_CAP).unwrap() {
            paths += 1;
            if path.hops() != d {
                return check(
                    "common-edges",
                    false,
                    format!("a={a} b={b}: path of {} hops, distance {d}", path.hops()),
                );
            }
            for step in path.steps() {
                if let Some(&missing) = common.iter().find(|&&e| !step.contains(e)) {
                    return check(
                        "common-edges",
                        false,
                        format!("a={a} b={b}: step {step} drops common edge {missing}"),
                    );
                }
            }
        }
    }
    check(
        "common-edges",
        true,
        format!(
            "{paths} geodesics over {} pairs keep all common edges",
            pairs.len()
        ),
    )
}

fn pair_count_check(
    graph: &MatchingGraph,
    m: usize,
    total: u64,
    rng: &mut ChaCha8Rng,
) -> Check {
    let mut pairs: Vec<(Matching, Matching)> = Vec::new();
    if m <= 4 {
        let vs = graph.vertices();
        for a in vs {
            for b in vs {
                pairs.push((a.clone(), b.clone()));
            }
        }
    } else if m == 5 {
        for _ in 0..500 {
            pairs.push((sample(m, total, rng), sample(m, total, rng)));
        }
    } else {
        for _ in 0..200 {
            pairs.push((sample(m, total, rng), sample(m, total, rng)));
        }
        for _ in 0..20 {
            let base = sample(m, total, rng);
            let far: Vec<Matching> = antipodes(&base).collect();
            let pick = far[rng.gen_range(0..far.len())].clone();
            pairs.push((base, pick));
        }
    }
    for (a, b) in &pairs {
        let formula = geodesic_count(a, b).unwrap();
        let enumerated = enumerate_geodesics(a, b, DEFAULT_GEODESIC_CAP)
            .unwrap()
            .count();
        if BigUint::from(enumerated) != formula {
            return check(
                "pair-count-formula",
                false,
                format!("a={a} b={b}: formula {formula}, enumeration {enumerated}"),
            );
        }
    }
    check(
        "pair-count-formula",
        true,
        format!("formula matches enumeration on {} pairs", pairs.len()),
    )
}

fn embedding_check(m: usize) -> Check {
    // a single 2k-cycle inside a larger matching: the geodesic count must
    // ignore m entirely
    for k in 2..=4usize.min(m) {
        let a = Matching::consecutive(m);
        let mut pairs: Vec<(u32, u32)> = (1..k as u32).map(|i| (2 * i, 2 * i + 1)).collect();
        pairs.push((2 * k as u32, 1));
        for i in k..m {
            pairs.push((2 * i as u32 + 1, 2 * i as u32 + 2));
        }
        let b = Matching::from_pairs(&pairs, m).unwrap();
        let want = cycle_geodesics_closed(k);
        let got = enumerate_geodesics(&a, &b, DEFAULT_GEODESIC_CAP)
            .unwrap()
            .count();
        if BigUint::from(got) != want {
            return check(
                "embedded-cycle-counts",
                false,
                format!("cycle with {k} pairs inside m={m}: {got} paths, expected {want}"),
            );
        }
    }
    check(
        "embedded-cycle-counts",
        true,
        format!("embedded cycle counts ignore m for k=2..={}", 4usize.min(m)),
    )
}

fn subgraph_distance_check(graph: &MatchingGraph) -> Check {
    let sub = graph.induced(is_noncrossing);
    let vs = sub.vertices();
    for src in 0..vs.len() {
        let bfs = sub.bfs_distances(src);
        for tgt in 0..vs.len() {
            if bfs[tgt] == u32::MAX {
                return check(
                    "subgraph-distance",
                    false,
                    format!("{} unreachable from {} inside the subgraph", vs[tgt], vs[src]),
                );
            }
            let formula = noncrossing_distance(&vs[src], &vs[tgt]).unwrap();
            let ambient = distance(&vs[src], &vs[tgt]).unwrap();
            if formula != bfs[tgt] as usize || formula != ambient {
                return check(
                    "subgraph-distance",
                    false,
                    format!(
                        "{} vs {}: formula {formula}, subgraph search {}, ambient {ambient}",
                        vs[src], vs[tgt], bfs[tgt]
                    ),
                );
            }
        }
    }
    check(
        "subgraph-distance",
        true,
        format!(
            "all {} non-crossing pairs agree with subgraph search",
            vs.len() * vs.len()
        ),
    )
}
