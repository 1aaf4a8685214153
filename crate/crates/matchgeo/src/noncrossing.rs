//! The induced subgraph of non-crossing matchings.
//!
//! The `2m` labels sit on a circle in label order; a matching is
//! non-crossing when no two of its chords interleave. Crossing is decided
//! purely combinatorially: two disjoint chords cross exactly when one
//! endpoint of the second lies strictly between the endpoints of the first.
//! Distances inside the subgraph coincide with the ambient ones; geodesic
//! counts do not, and the boundary pair is the unique pair attaining the
//! ambient maximum `m^(m-2)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::geodesics::{binomial, cycle_geodesics_closed, decreasing_neighbors, geodesic_count};
use crate::matching::{all_matchings, Edge, Matching};

/// Whether two vertex-disjoint chords cross when the labels `1..=2m` are
/// placed on a circle in order.
pub fn edges_cross(e1: Edge, e2: Edge, m: usize) -> Result<bool, Error> {
    let n = 2 * m as u32;
    for v in [e1.a(), e1.b(), e2.a(), e2.b()] {
        if v > n {
            return Err(Error::VertexOutOfRange { vertex: v, max: n });
        }
    }
    for v in [e2.a(), e2.b()] {
        if e1.touches(v) {
            return Err(Error::SharedVertex(v));
        }
    }
    Ok(chords_interleave(e1, e2))
}

fn chords_interleave(e1: Edge, e2: Edge) -> bool {
    let (a, b) = e1.endpoints();
    let inside = |x: u32| a < x && x < b;
    inside(e2.a()) != inside(e2.b())
}

/// Whether no two chords of the matching cross.
pub fn is_noncrossing(m: &Matching) -> bool {
    let edges: Vec<Edge> = m.edges().collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if chords_interleave(edges[i], edges[j]) {
                return false;
            }
        }
    }
    true
}

/// The `m`-th Catalan number, the count of non-crossing matchings on `2m`
/// points.
pub fn catalan(m: usize) -> BigUint {
    binomial(2 * m, m) / BigUint::from(m + 1)
}

/// The two matchings whose chords all lie on the hull boundary:
/// `{1-2, 3-4, ...}` and `{2-3, 4-5, ..., 2m-1}`.
///
/// Both are non-crossing and their union is one cycle through all `2m`
/// vertices, so they are antipodal.
pub fn boundary_pair(m: usize) -> (Matching, Matching) {
    assert!(m >= 2, "the boundary pair needs at least two edges");
    let first = Matching::consecutive(m);
    let mut pairs: Vec<(u32, u32)> = (1..m as u32).map(|i| (2 * i, 2 * i + 1)).collect();
    pairs.push((2 * m as u32, 1));
    let second = Matching::from_pairs(&pairs, m).expect("shifted boundary matching is valid");
    (first, second)
}

/// Distance between two non-crossing matchings inside the subgraph,
/// evaluated as half the sum of `length(C) - 2` over the cycles of the
/// union. It coincides with the ambient distance.
pub fn noncrossing_distance(a: &Matching, b: &Matching) -> Result<usize, Error> {
    for m in [a, b] {
        if !is_noncrossing(m) {
            return Err(Error::NotNonCrossing(m.clone()));
        }
    }
    let dec = a.decompose_union(b)?;
    let total: usize = dec.cycles().iter().map(|c| c.len() - 2).sum();
    Ok(total / 2)
}

/// Number of ambient geodesics between two non-crossing matchings that stay
/// inside the non-crossing subgraph throughout.
///
/// Counts by restricted depth-first traversal with memoization on the
/// intermediate matching; the ambient closed-form count is consulted first
/// and the cap refuses anything larger. Always at most the ambient count.
pub fn noncrossing_geodesic_count(a: &Matching, b: &Matching, cap: u64) -> Result<BigUint, Error> {
    for m in [a, b] {
        if !is_noncrossing(m) {
            return Err(Error::NotNonCrossing(m.clone()));
        }
    }
    let ambient = geodesic_count(a, b)?;
    if ambient > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: ambient,
            cap,
        });
    }
    let mut memo: HashMap<Matching, BigUint> = HashMap::new();
    Ok(count_restricted(a, b, &mut memo))
}

fn count_restricted(
    from: &Matching,
    target: &Matching,
    memo: &mut HashMap<Matching, BigUint>,
) -> BigUint {
    if from == target {
        return BigUint::one();
    }
    if let Some(hit) = memo.get(from) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for next in decreasing_neighbors(from, target).expect("endpoints share m") {
        if is_noncrossing(&next) {
            total += count_restricted(&next, target, memo);
        }
    }
    memo.insert(from.clone(), total.clone());
    total
}

/// Outcome of sweeping all unordered pairs of distinct non-crossing
/// matchings for the pair with the most subgraph geodesics.
#[derive(Clone, Debug)]
pub struct UniqueMaximalReport {
    pub m: usize,
    /// How many non-crossing matchings were swept; equal to the Catalan
    /// number.
    pub noncrossing_count: u64,
    /// The largest subgraph geodesic count seen.
    pub max_count: BigUint,
    /// Every pair attaining the maximum, each listed with its smaller
    /// member first.
    pub maximal_pairs: Vec<(Matching, Matching)>,
    /// The boundary pair, which the sweep is expected to single out.
    pub expected_pair: (Matching, Matching),
    /// `m^(m-2)`, the count the boundary pair is expected to attain.
    pub expected_count: BigUint,
}

impl UniqueMaximalReport {
    /// Whether the boundary pair is the unique maximum and attains
    /// `m^(m-2)`.
    pub fn holds(&self) -> bool {
        self.max_count == self.expected_count
            && self.maximal_pairs.len() == 1
            && self.maximal_pairs[0] == self.expected_pair
    }
}

/// Sweeps every unordered pair of distinct non-crossing matchings and
/// reports which pairs attain the maximal subgraph geodesic count.
pub fn verify_unique_maximal_pair(m: usize, cap: u64) -> Result<UniqueMaximalReport, Error> {
    assert!(m >= 2, "the sweep needs at least two edges");
    let vertices: Vec<Matching> = all_matchings(m)?.filter(is_noncrossing).collect();
    let mut max_count = BigUint::zero();
    let mut maximal_pairs: Vec<(Matching, Matching)> = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let count = noncrossing_geodesic_count(&vertices[i], &vertices[j], cap)?;
            if count > max_count {
                max_count = count.clone();
                maximal_pairs.clear();
            }
            if count == max_count {
                maximal_pairs.push((vertices[i].clone(), vertices[j].clone()));
            }
        }
    }
    let expected_pair = boundary_pair(m);
    Ok(UniqueMaximalReport {
        m,
        noncrossing_count: vertices.len() as u64,
        max_count,
        maximal_pairs,
        expected_pair,
        expected_count: cycle_geodesics_closed(m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesics::DEFAULT_GEODESIC_CAP;
    use crate::metric::distance;

    fn mt(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(edges_cross(Edge::new(1, 3), Edge::new(2, 4), 2).unwrap());
        assert!(!edges_cross(Edge::new(1, 2), Edge::new(3, 4), 2).unwrap());
        assert!(!edges_cross(Edge::new(1, 6), Edge::new(2, 4), 3).unwrap());
    }

    #[test]
    fn crossing_is_symmetric() {
        for m in [2usize, 3, 4] {
            let n = 2 * m as u32;
            for a in 1..=n {
                for b in a + 1..=n {
                    for c in 1..=n {
                        for d in c + 1..=n {
                            if a == c || a == d || b == c || b == d {
                                continue;
                            }
                            let e1 = Edge::new(a, b);
                            let e2 = Edge::new(c, d);
                            assert_eq!(
                                edges_cross(e1, e2, m).unwrap(),
                                edges_cross(e2, e1, m).unwrap(),
                                "{e1} {e2}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn crossing_rejects_shared_and_out_of_range() {
        assert_eq!(
            edges_cross(Edge::new(1, 3), Edge::new(3, 4), 2).unwrap_err(),
            Error::SharedVertex(3)
        );
        assert_eq!(
            edges_cross(Edge::new(1, 3), Edge::new(2, 9), 2).unwrap_err(),
            Error::VertexOutOfRange { vertex: 9, max: 4 }
        );
    }

    #[test]
    fn noncrossing_predicate_examples() {
        assert!(is_noncrossing(&mt("1-2,3-4,5-6")));
        assert!(!is_noncrossing(&mt("1-3,2-4")));
        let count = all_matchings(3)
            .unwrap()
            .filter(is_noncrossing)
            .count();
        assert_eq!(count, 5);
    }

    #[test]
    fn noncrossing_counts_are_catalan() {
        for (m, want) in [(1usize, 1u64), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132), (7, 429)] {
            assert_eq!(catalan(m), BigUint::from(want));
            let got = all_matchings(m).unwrap().filter(is_noncrossing).count() as u64;
            assert_eq!(got, want, "m={m}");
        }
    }

    #[test]
    fn boundary_pair_shape() {
        let (a, b) = boundary_pair(2);
        assert_eq!(a, mt("1-2,3-4"));
        assert_eq!(b, mt("1-4,2-3"));

        let (a, b) = boundary_pair(3);
        assert!(is_noncrossing(&a) && is_noncrossing(&b));
        let dec = a.decompose_union(&b).unwrap();
        assert_eq!(dec.cycle_count(), 1);
        assert_eq!(distance(&a, &b).unwrap(), 2);
    }

    #[test]
    fn subgraph_distance_matches_ambient() {
        let (a, b) = boundary_pair(3);
        assert_eq!(noncrossing_distance(&a, &a).unwrap(), 0);
        assert_eq!(noncrossing_distance(&a, &b).unwrap(), 2);
        // two 4-cycles at m = 4
        let c = mt("1-2,3-4,5-6,7-8");
        let d = mt("1-4,2-3,5-8,6-7");
        assert_eq!(noncrossing_distance(&c, &d).unwrap(), 2);
        assert_eq!(distance(&c, &d).unwrap(), 2);
    }

    #[test]
    fn crossing_input_is_rejected() {
        let crossing = mt("1-3,2-4");
        let fine = mt("1-2,3-4");
        assert_eq!(
            noncrossing_distance(&crossing, &fine).unwrap_err(),
            Error::NotNonCrossing(crossing.clone())
        );
        assert!(noncrossing_geodesic_count(&fine, &crossing, 100).is_err());
    }

    #[test]
    fn boundary_pair_attains_closed_form() {
        for m in 2..=5usize {
            let (a, b) = boundary_pair(m);
            assert_eq!(
                noncrossing_geodesic_count(&a, &b, DEFAULT_GEODESIC_CAP).unwrap(),
                cycle_geodesics_closed(m),
                "m={m}"
            );
        }
    }

    #[test]
    fn identical_endpoints_have_one_geodesic() {
        let a = mt("1-2,3-4,5-6");
        assert_eq!(
            noncrossing_geodesic_count(&a, &a, 10).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn other_antipodal_pairs_fall_short_at_m3() {
        let (b1, b2) = boundary_pair(3);
        let vertices: Vec<Matching> = all_matchings(3).unwrap().filter(is_noncrossing).collect();
        assert_eq!(vertices.len(), 5);
        let mut seen_other_antipodal = false;
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let (a, b) = (&vertices[i], &vertices[j]);
                if distance(a, b).unwrap() != 2 {
                    continue;
                }
                let count = noncrossing_geodesic_count(a, b, 100).unwrap();
                if (a == &b1 && b == &b2) || (a == &b2 && b == &b1) {
                    assert_eq!(count, BigUint::from(3u32));
                } else {
                    seen_other_antipodal = true;
                    assert!(count < BigUint::from(3u32), "{a} vs {b} -> {count}");
                }
            }
        }
        assert!(seen_other_antipodal);
    }

    #[test]
    fn subgraph_search_agrees_with_formula() {
        use crate::graph::MatchingGraph;
        for m in 2..=5usize {
            let sub = MatchingGraph::build(m, 1_000_000)
                .unwrap()
                .induced(is_noncrossing);
            let vs = sub.vertices();
            for src in 0..vs.len() {
                let bfs = sub.bfs_distances(src);
                for tgt in 0..vs.len() {
                    assert_ne!(bfs[tgt], u32::MAX, "subgraph is connected");
                    let formula = noncrossing_distance(&vs[src], &vs[tgt]).unwrap();
                    assert_eq!(formula, bfs[tgt] as usize, "m={m} {} {}", vs[src], vs[tgt]);
                    assert_eq!(formula, distance(&vs[src], &vs[tgt]).unwrap());
                }
            }
        }
    }

    #[test]
    fn unique_maximal_pair_reports() {
        for m in 2..=4usize {
            let report = verify_unique_maximal_pair(m, DEFAULT_GEODESIC_CAP).unwrap();
            assert!(report.holds(), "m={m}: {report:?}");
            assert_eq!(BigUint::from(report.noncrossing_count), catalan(m));
            assert_eq!(report.max_count, cycle_geodesics_closed(m));
        }
    }
}
