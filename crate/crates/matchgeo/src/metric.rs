//! Exact metric structure of the matching flip graph: distance, insertion
//! trichotomy, eccentricity, diameter and antipode generation, together with
//! breadth-first oracles that recompute everything from the adjacency
//! relation alone.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::error::Error;
use crate::graph::MatchingGraph;
use crate::matching::{
    double_factorial, matching_count, matching_count_u64, AllMatchings, Edge, Matching,
    DEFAULT_ENUM_CAP,
};

/// Default cap on graph size for the breadth-first oracles.
pub const DEFAULT_BFS_CAP: u64 = 1_000_000;

/// How inserting one edge moves a matching relative to a fixed target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionEffect {
    /// Distance grows by one: the endpoints lie in two different cycles of
    /// the union.
    Increase,
    /// Distance shrinks by one: the endpoints lie in one cycle and the
    /// insertion splits it.
    Decrease,
    /// Distance is unchanged: same cycle, no split.
    Neutral,
}

/// Distance between two matchings in the flip graph: `m - l`, where `l` is
/// the number of alternating cycles in their union.
pub fn distance(a: &Matching, b: &Matching) -> Result<usize, Error> {
    Ok(a.m() - a.decompose_union(b)?.cycle_count())
}

/// Whether inserting the within-cycle edge `u-v` into `a` splits the cycle
/// of `a ∪ b` containing both endpoints.
///
/// Walks the cycle from `u` away from its `a`-partner; the arc ends either
/// at `v` (the two halves close separately: split) or at `v`'s `a`-partner
/// (the halves reconnect into one cycle).
pub(crate) fn insertion_splits(a: &Matching, b: &Matching, u: u32, v: u32) -> bool {
    let rejoin = a.partner(v);
    let mut x = b.partner(u);
    loop {
        if x == v {
            return true;
        }
        if x == rejoin {
            return false;
        }
        x = b.partner(a.partner(x));
    }
}

/// Classifies the effect of inserting `e` into `a` on the distance to `b`.
///
/// The edge must not belong to `a`. The answer is read off the cycle
/// structure of `a ∪ b`, never by recomputing distances, so it can serve as
/// one side of an oracle check.
pub fn classify_insertion(a: &Matching, b: &Matching, e: Edge) -> Result<InsertionEffect, Error> {
    let dec = a.decompose_union(b)?;
    let n = a.vertex_count() as u32;
    if e.b() > n {
        return Err(Error::VertexOutOfRange {
            vertex: e.b(),
            max: n,
        });
    }
    if a.contains(e) {
        return Err(Error::EdgeAlreadyPresent(e));
    }
    let (u, v) = e.endpoints();
    if dec.cycle_of(u) != dec.cycle_of(v) {
        return Ok(InsertionEffect::Increase);
    }
    if insertion_splits(a, b, u, v) {
        Ok(InsertionEffect::Decrease)
    } else {
        Ok(InsertionEffect::Neutral)
    }
}

/// Breadth-first distance oracle over the implicit flip graph.
///
/// Refuses to run when `(2m-1)!!` exceeds [`DEFAULT_BFS_CAP`].
pub fn bfs_distance(a: &Matching, b: &Matching) -> Result<usize, Error> {
    if a.m() != b.m() {
        return Err(Error::MixedSizes {
            left: a.m(),
            right: b.m(),
        });
    }
    match matching_count_u64(a.m()) {
        Some(total) if total <= DEFAULT_BFS_CAP => {}
        _ => {
            return Err(Error::ResourceLimit {
                what: "breadth-first search",
                needed: matching_count(a.m()),
                cap: DEFAULT_BFS_CAP,
            })
        }
    }
    if a == b {
        return Ok(0);
    }
    let mut dist: HashMap<Matching, usize> = HashMap::new();
    dist.insert(a.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        let d = dist[&cur];
        for next in cur.neighbors() {
            if next == *b {
                return Ok(d + 1);
            }
            dist.entry(next.clone()).or_insert_with(|| {
                queue.push_back(next);
                d + 1
            });
        }
    }
    unreachable!("the flip graph is connected");
}

/// Eccentricity of a matching: `m - 1` for every vertex (0 when `m = 1`).
pub fn eccentricity(of: &Matching) -> usize {
    of.m() - 1
}

/// Diameter of the flip graph on matchings with `m` edges: `m - 1`.
pub fn diameter(m: usize) -> usize {
    assert!(m >= 1, "a matching needs at least one edge");
    m - 1
}

/// Brute-force eccentricity: maximum breadth-first distance from `of`.
pub fn bfs_eccentricity(of: &Matching, cap: u64) -> Result<usize, Error> {
    let graph = MatchingGraph::build(of.m(), cap)?;
    let src = graph
        .index_of(of)
        .expect("every matching is a vertex of its flip graph");
    let dist = graph.bfs_distances(src);
    Ok(dist.iter().map(|&d| d as usize).max().unwrap_or(0))
}

/// Brute-force diameter: maximum eccentricity over every vertex.
pub fn bfs_diameter(m: usize, cap: u64) -> Result<usize, Error> {
    let graph = MatchingGraph::build(m, cap)?;
    let mut best = 0usize;
    for src in 0..graph.vertex_count() {
        let dist = graph.bfs_distances(src);
        let ecc = dist.iter().map(|&d| d as usize).max().unwrap_or(0);
        best = best.max(ecc);
    }
    Ok(best)
}

/// Number of antipodes of any matching with `m` edges: `(2m-2)!!`.
pub fn antipode_count(m: usize) -> BigUint {
    assert!(m >= 1, "a matching needs at least one edge");
    double_factorial(2 * m as u64 - 2)
}

/// Lazily generates every antipode of `base`: the matchings whose union
/// with `base` is a single cycle through all `2m` vertices.
///
/// Antipodes are built directly by walking an alternating cycle from vertex
/// 1: after each forced `base`-edge the walk picks the next vertex among the
/// unvisited ones, smallest label first, so the order is deterministic.
/// There are exactly `(2m-2)!!` of them, each at distance `m - 1`.
pub fn antipodes(base: &Matching) -> Antipodes {
    Antipodes {
        base: base.clone(),
        digits: vec![0; base.m() - 1],
        exhausted: false,
    }
}

pub struct Antipodes {
    base: Matching,
    /// Mixed-radix counter; digit `j` ranges over `0..2*(m-1-j)`.
    digits: Vec<u32>,
    exhausted: bool,
}

impl Antipodes {
    fn decode(&self) -> Matching {
        let m = self.base.m();
        let n = 2 * m;
        let mut visited = vec![false; n];
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(m);
        visited[0] = true;
        let first = self.base.partner(1);
        visited[(first - 1) as usize] = true;
        let mut cur = first;
        for &d in &self.digits {
            let mut remaining = d as usize;
            let mut w = 0u32;
            for v in 1..=n as u32 {
                if !visited[(v - 1) as usize] {
                    if remaining == 0 {
                        w = v;
                        break;
                    }
                    remaining -= 1;
                }
            }
            pairs.push((cur, w));
            visited[(w - 1) as usize] = true;
            let next = self.base.partner(w);
            visited[(next - 1) as usize] = true;
            cur = next;
        }
        pairs.push((cur, 1));
        Matching::from_pairs(&pairs, m).expect("cycle walk yields a valid matching")
    }

    fn advance(&mut self) {
        let m = self.base.m();
        for j in (0..self.digits.len()).rev() {
            let radix = 2 * (m - 1 - j) as u32;
            if self.digits[j] + 1 < radix {
                self.digits[j] += 1;
                for d in self.digits[j + 1..].iter_mut() {
                    *d = 0;
                }
                return;
            }
        }
        self.exhausted = true;
    }
}

impl Iterator for Antipodes {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.exhausted {
            return None;
        }
        let item = self.decode();
        self.advance();
        Some(item)
    }
}

/// Antipode oracle: filters the full enumeration for single-cycle unions.
pub fn antipodes_filtered(base: &Matching, cap: u64) -> Result<Vec<Matching>, Error> {
    let all = AllMatchings::new(base.m(), cap)?;
    Ok(all
        .filter(|m| base.decompose_union(m).unwrap().cycle_count() == 1)
        .collect())
}

/// Convenience wrapper around [`antipodes_filtered`] with the default cap.
pub fn antipodes_filtered_default(base: &Matching) -> Result<Vec<Matching>, Error> {
    antipodes_filtered(base, DEFAULT_ENUM_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{all_matchings, matching_by_rank};

    fn mt(s: &str) -> Matching {
        s.parse().unwrap()
    }

    #[test]
    fn distance_examples() {
        let a = mt("1-2,3-4,5-6");
        assert_eq!(distance(&a, &a).unwrap(), 0);
        assert_eq!(distance(&a, &mt("2-3,4-5,6-1")).unwrap(), 2);
        assert_eq!(distance(&mt("1-2,3-4"), &mt("1-3,2-4")).unwrap(), 1);
    }

    #[test]
    fn classify_examples() {
        let a = mt("1-2,3-4,5-6");
        let b = mt("2-3,4-5,6-1");
        assert_eq!(
            classify_insertion(&a, &b, Edge::new(1, 4)).unwrap(),
            InsertionEffect::Decrease
        );
        assert_eq!(
            classify_insertion(&a, &b, Edge::new(1, 3)).unwrap(),
            InsertionEffect::Neutral
        );
        let c = mt("1-2,3-4");
        assert_eq!(
            classify_insertion(&c, &c, Edge::new(1, 3)).unwrap(),
            InsertionEffect::Increase
        );
        assert_eq!(
            classify_insertion(&c, &c, Edge::new(1, 2)).unwrap_err(),
            Error::EdgeAlreadyPresent(Edge::new(1, 2))
        );
    }

    #[test]
    fn classification_matches_distance_delta_exhaustively() {
        // every pair and every absent edge at m = 3
        let all: Vec<Matching> = all_matchings(3).unwrap().collect();
        for a in &all {
            for b in &all {
                let d = distance(a, b).unwrap();
                for u in 1..=6u32 {
                    for v in u + 1..=6 {
                        let e = Edge::new(u, v);
                        if a.contains(e) {
                            continue;
                        }
                        let effect = classify_insertion(a, b, e).unwrap();
                        let d2 = distance(&a.insert_edge(e).unwrap(), b).unwrap();
                        let expected = match effect {
                            InsertionEffect::Increase => d + 1,
                            InsertionEffect::Decrease => d - 1,
                            InsertionEffect::Neutral => d,
                        };
                        assert_eq!(d2, expected, "a={a} b={b} e={e}");
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_agrees_with_formula_at_small_scale() {
        let all: Vec<Matching> = all_matchings(3).unwrap().collect();
        for a in &all {
            for b in &all {
                assert_eq!(bfs_distance(a, b).unwrap(), distance(a, b).unwrap());
            }
        }
    }

    #[test]
    fn triangle_graph_for_two_edges() {
        // the three matchings on four vertices are pairwise adjacent
        let all: Vec<Matching> = all_matchings(2).unwrap().collect();
        assert_eq!(all.len(), 3);
        for a in &all {
            for b in &all {
                let want = usize::from(a != b);
                assert_eq!(bfs_distance(a, b).unwrap(), want);
            }
        }
    }

    #[test]
    fn eccentricity_and_diameter() {
        assert_eq!(eccentricity(&Matching::consecutive(5)), 4);
        assert_eq!(eccentricity(&Matching::consecutive(1)), 0);
        assert_eq!(diameter(5), 4);
        let base = Matching::consecutive(3);
        assert_eq!(bfs_eccentricity(&base, DEFAULT_BFS_CAP).unwrap(), 2);
        assert_eq!(bfs_diameter(3, DEFAULT_BFS_CAP).unwrap(), 2);
    }

    #[test]
    fn bfs_refuses_oversized_graphs() {
        let a = Matching::consecutive(8);
        let b = Matching::consecutive(8);
        assert!(matches!(
            bfs_distance(&a, &b),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn antipode_counts() {
        assert_eq!(antipode_count(2), BigUint::from(2u32));
        assert_eq!(antipode_count(3), BigUint::from(8u32));
        assert_eq!(antipode_count(5), BigUint::from(384u32));
        let base = Matching::consecutive(3);
        assert_eq!(antipodes(&base).count(), 8);
        assert_eq!(antipodes(&Matching::consecutive(2)).count(), 2);
    }

    #[test]
    fn antipodes_match_filter_oracle() {
        for m in 2..=4 {
            let base = Matching::consecutive(m);
            let mut direct: Vec<Matching> = antipodes(&base).collect();
            direct.sort();
            let filtered = antipodes_filtered_default(&base).unwrap();
            assert_eq!(direct, filtered);
            for a in &direct {
                assert_eq!(distance(&base, a).unwrap(), m - 1);
            }
        }
    }

    #[test]
    fn antipodes_of_random_bases_agree_with_oracle() {
        for rank in [7u64, 42, 99] {
            let base = matching_by_rank(4, rank).unwrap();
            let mut direct: Vec<Matching> = antipodes(&base).collect();
            direct.sort();
            direct.dedup();
            assert_eq!(direct.len(), 48);
            assert_eq!(direct, antipodes_filtered_default(&base).unwrap());
        }
    }

    #[test]
    fn first_insertion_always_decreases() {
        let all: Vec<Matching> = all_matchings(3).unwrap().collect();
        for a in &all {
            for b in &all {
                if a == b {
                    continue;
                }
                let d = distance(a, b).unwrap();
                for e in b.edges().filter(|&e| !a.contains(e)) {
                    let next = a.insert_edge(e).unwrap();
                    assert_eq!(distance(&next, b).unwrap(), d - 1);
                }
            }
        }
    }

    #[test]
    fn metric_axioms_hold_exhaustively() {
        for m in 2..=4usize {
            let all: Vec<Matching> = all_matchings(m).unwrap().collect();
            let n = all.len();
            let mut d = vec![vec![0usize; n]; n];
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = distance(&all[i], &all[j]).unwrap();
                }
            }
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(d[i][j], d[j][i]);
                    assert_eq!(d[i][j] == 0, i == j);
                    for k in 0..n {
                        assert!(d[i][j] <= d[i][k] + d[k][j]);
                    }
                }
            }
        }
    }
}
