//! Acceptance suite: every structural and counting claim the crate makes,
//! checked exactly (integer comparisons, tolerance zero) against brute
//! force at desk scale. One test per criterion; each prints a summary line.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matchgeo::geodesics::DEFAULT_GEODESIC_CAP;
use matchgeo::matching::matching_by_rank;
use matchgeo::metric::DEFAULT_BFS_CAP;
use matchgeo::verify::insertion_adjacency_lemma_holds;
use matchgeo::{
    all_matchings, antipode_count, boundary_pair, catalan, count_cycle_factorizations,
    cycle_geodesics_closed, cycle_geodesics_recurrence, cycle_geodesics_weighted, distance,
    enumerate_geodesics, geodesic_count, is_noncrossing, labeled_tree_count, matching_count,
    verify_unique_maximal_pair, Edge, GeodesicPath, Matching, MatchingGraph,
};

const SEED: u64 = 0xacce97;

fn sample(m: usize, total: u64, rng: &mut ChaCha8Rng) -> Matching {
    matching_by_rank(m, rng.gen_range(0..total)).unwrap()
}

fn total(m: usize) -> u64 {
    u64::try_from(&matching_count(m)).unwrap()
}

/// Checks every invariant a geodesic path must satisfy: endpoints, length
/// equal to the distance, pairwise-distinct steps, consecutive adjacency,
/// and containment of every common edge of the endpoints.
fn validate_geodesic(a: &Matching, b: &Matching, path: &GeodesicPath) {
    let steps = path.steps();
    assert_eq!(steps.first(), Some(a));
    assert_eq!(steps.last(), Some(b));
    assert_eq!(path.hops(), distance(a, b).unwrap());
    for i in 0..steps.len() {
        for j in i + 1..steps.len() {
            assert_ne!(steps[i], steps[j], "repeated step in geodesic");
        }
    }
    for pair in steps.windows(2) {
        assert!(pair[0].is_adjacent(&pair[1]).unwrap());
    }
    let common: Vec<Edge> = a.edges().filter(|&e| b.contains(e)).collect();
    for step in steps {
        for &e in &common {
            assert!(step.contains(e), "step {step} drops common edge {e}");
        }
    }
}

#[test]
fn criterion_1_order_and_regularity() {
    let expected = [(2usize, 3u64), (3, 15), (4, 105), (5, 945), (6, 10395)];
    for (m, want) in expected {
        let graph = MatchingGraph::build(m, DEFAULT_BFS_CAP).unwrap();
        assert_eq!(graph.vertex_count() as u64, want, "order at m={m}");
        let degree = m * (m - 1);
        for i in 0..graph.vertex_count() {
            assert_eq!(graph.degree(i), degree, "degree at m={m}");
        }
        println!("criterion 1 (m={m}): {want} vertices, all of degree {degree} .. pass");
    }
}

#[test]
fn criterion_2_distance_theorem() {
    for m in 2..=5usize {
        let graph = MatchingGraph::build(m, DEFAULT_BFS_CAP).unwrap();
        let vs = graph.vertices();
        let mut pairs = 0u64;
        for src in 0..vs.len() {
            let bfs = graph.bfs_distances(src);
            for tgt in 0..vs.len() {
                assert_eq!(
                    distance(&vs[src], &vs[tgt]).unwrap(),
                    bfs[tgt] as usize,
                    "m={m} {} vs {}",
                    vs[src],
                    vs[tgt]
                );
                pairs += 1;
            }
        }
        println!("criterion 2 (m={m}): all {pairs} ordered pairs match search .. pass");
    }

    let m = 6;
    let graph = MatchingGraph::build(m, DEFAULT_BFS_CAP).unwrap();
    let vs = graph.vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pairs = 0u64;
    for _ in 0..40 {
        let src = rng.gen_range(0..vs.len());
        let bfs = graph.bfs_distances(src);
        for _ in 0..250 {
            let tgt = rng.gen_range(0..vs.len());
            assert_eq!(
                distance(&vs[src], &vs[tgt]).unwrap(),
                bfs[tgt] as usize,
                "m=6 {} vs {}",
                vs[src],
                vs[tgt]
            );
            pairs += 1;
        }
    }
    println!("criterion 2 (m=6): {pairs} random pairs match search .. pass");
}

#[test]
fn criterion_3_diameter_eccentricity_antipodes() {
    let expected_antipodes = [(2usize, 2u64), (3, 8), (4, 48), (5, 384)];
    for (m, want_antipodes) in expected_antipodes {
        let graph = MatchingGraph::build(m, DEFAULT_BFS_CAP).unwrap();
        for src in 0..graph.vertex_count() {
            let bfs = graph.bfs_distances(src);
            let ecc = bfs.iter().copied().max().unwrap() as usize;
            assert_eq!(ecc, m - 1, "eccentricity at m={m}");
            let at_max = bfs.iter().filter(|&&d| d as usize == m - 1).count() as u64;
            assert_eq!(at_max, want_antipodes, "antipode count at m={m}");
        }
        assert_eq!(antipode_count(m), BigUint::from(want_antipodes));
        println!(
            "criterion 3 (m={m}): every vertex has eccentricity {} and {want_antipodes} antipodes .. pass",
            m - 1
        );
    }
}

#[test]
fn criterion_4_counting_identities() {
    let closed_values: [u64; 12] = [
        1,
        1,
        3,
        16,
        125,
        1296,
        16807,
        262144,
        4782969,
        100_000_000,
        2_357_947_691,
        61_917_364_224,
    ];
    for k in 1..=12usize {
        let want = BigUint::from(closed_values[k - 1]);
        assert_eq!(cycle_geodesics_recurrence(k), want, "recurrence at k={k}");
        assert_eq!(cycle_geodesics_weighted(k), want, "weighted at k={k}");
        assert_eq!(cycle_geodesics_closed(k), want, "closed form at k={k}");
        assert_eq!(labeled_tree_count(k), want, "tree recurrence at k={k}");
    }
    println!("criterion 4: four counting routes agree exactly for k=1..=12 .. pass");
}

#[test]
fn criterion_5_antipodal_geodesics() {
    let expected = [(2usize, 1u64), (3, 3), (4, 16), (5, 125), (6, 1296)];
    for (m, want) in expected {
        let (a, b) = boundary_pair(m);
        assert_eq!(a.decompose_union(&b).unwrap().cycle_count(), 1);
        let mut count = 0u64;
        for path in enumerate_geodesics(&a, &b, DEFAULT_GEODESIC_CAP).unwrap() {
            validate_geodesic(&a, &b, &path);
            // between the boundary pair no geodesic ever leaves the
            // non-crossing subgraph
            for step in path.steps() {
                assert!(is_noncrossing(step), "m={m}: step {step} crosses");
            }
            count += 1;
        }
        assert_eq!(count, want, "antipodal count at m={m}");
        assert_eq!(geodesic_count(&a, &b).unwrap(), BigUint::from(want));
        println!("criterion 5 (m={m}): {count} geodesics between a fixed antipodal pair .. pass");
    }
}

#[test]
fn criterion_6_general_pair_formula() {
    for m in 2..=4usize {
        let all: Vec<Matching> = all_matchings(m).unwrap().collect();
        let mut pairs = 0u64;
        for a in &all {
            for b in &all {
                let formula = geodesic_count(a, b).unwrap();
                let mut enumerated = 0u64;
                for path in enumerate_geodesics(a, b, DEFAULT_GEODESIC_CAP).unwrap() {
                    validate_geodesic(a, b, &path);
                    enumerated += 1;
                }
                assert_eq!(BigUint::from(enumerated), formula, "m={m} {a} vs {b}");
                pairs += 1;
            }
        }
        println!("criterion 6 (m={m}): formula matches enumeration on all {pairs} pairs .. pass");
    }

    let m = 5;
    let total = total(m);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for _ in 0..500 {
        let a = sample(m, total, &mut rng);
        let b = sample(m, total, &mut rng);
        let formula = geodesic_count(&a, &b).unwrap();
        let mut enumerated = 0u64;
        for path in enumerate_geodesics(&a, &b, DEFAULT_GEODESIC_CAP).unwrap() {
            validate_geodesic(&a, &b, &path);
            enumerated += 1;
        }
        assert_eq!(BigUint::from(enumerated), formula, "m=5 {a} vs {b}");
    }
    println!("criterion 6 (m=5): formula matches enumeration on 500 random pairs .. pass");
}

#[test]
fn criterion_7_factorization_cross_check() {
    let expected = [(2usize, 1u64), (3, 3), (4, 16), (5, 125), (6, 1296)];
    for (n, want) in expected {
        let got = count_cycle_factorizations(n).unwrap();
        assert_eq!(got, BigUint::from(want), "n={n}");
        assert_eq!(got, cycle_geodesics_closed(n), "n={n}");
        println!("criterion 7 (n={n}): {want} transposition factorizations .. pass");
    }
}

#[test]
fn criterion_8_noncrossing_uniqueness() {
    let expected_catalan = [(3usize, 5u64), (4, 14), (5, 42), (6, 132)];
    for (m, want_catalan) in expected_catalan {
        let report = verify_unique_maximal_pair(m, DEFAULT_GEODESIC_CAP).unwrap();
        assert_eq!(report.noncrossing_count, want_catalan, "Catalan at m={m}");
        assert_eq!(catalan(m), BigUint::from(want_catalan));
        assert!(
            report.holds(),
            "m={m}: maximum {} attained by {} pairs",
            report.max_count,
            report.maximal_pairs.len()
        );
        assert_eq!(report.max_count, cycle_geodesics_closed(m));
        assert_eq!(report.maximal_pairs[0], boundary_pair(m));
        println!(
            "criterion 8 (m={m}): {want_catalan} non-crossing matchings, boundary pair uniquely attains {} .. pass",
            report.max_count
        );
    }
}

#[test]
fn criterion_9_lemma_suites() {
    // insertion into adjacent pairs, exhaustively at m = 3
    let all: Vec<Matching> = all_matchings(3).unwrap().collect();
    let mut cases = 0u64;
    for a in &all {
        for b in a.neighbors() {
            for u in 1..=6u32 {
                for v in u + 1..=6 {
                    assert!(
                        insertion_adjacency_lemma_holds(a, &b, Edge::new(u, v)).unwrap(),
                        "a={a} b={b} e={u}-{v}"
                    );
                    cases += 1;
                }
            }
        }
    }
    println!("criterion 9 (m=3): insertion lemma holds in all {cases} cases .. pass");

    // randomized trials at m = 4, 5, 6
    for m in 4..=6usize {
        let total = total(m);
        let n = 2 * m as u32;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + m as u64);
        for _ in 0..10_000 {
            let a = sample(m, total, &mut rng);
            let neighbors = a.neighbors();
            let b = &neighbors[rng.gen_range(0..neighbors.len())];
            let u = rng.gen_range(1..=n);
            let v = loop {
                let v = rng.gen_range(1..=n);
                if v != u {
                    break v;
                }
            };
            assert!(
                insertion_adjacency_lemma_holds(&a, b, Edge::new(u, v)).unwrap(),
                "m={m} a={a} b={b} e={u}-{v}"
            );
        }
        println!("criterion 9 (m={m}): insertion lemma holds in 10000 random trials .. pass");
    }

    // the common-edge property is asserted on every geodesic enumerated in
    // criteria 5 and 6; re-verify it standalone at m = 3
    for a in &all {
        for b in &all {
            let common: Vec<Edge> = a.edges().filter(|&e| b.contains(e)).collect();
            for path in enumerate_geodesics(a, b, DEFAULT_GEODESIC_CAP).unwrap() {
                for step in path.steps() {
                    for &e in &common {
                        assert!(step.contains(e));
                    }
                }
            }
        }
    }
    println!("criterion 9: common edges preserved along every enumerated geodesic .. pass");

    // non-crossing matchings are counted by Catalan numbers at the sizes
    // not already swept by criterion 8
    for (m, want) in [(1usize, 1u64), (2, 2), (7, 429)] {
        let got = all_matchings(m).unwrap().filter(is_noncrossing).count() as u64;
        assert_eq!(got, want, "m={m}");
    }
    println!("criterion 9: non-crossing counts match Catalan numbers at m=1,2,7 .. pass");
}
