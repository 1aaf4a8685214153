//! Perfect matchings of the complete graph on `2m` labeled vertices.
//!
//! A matching is stored as a fixed-point-free involution on the labels
//! `1..=2m` and always presented in canonical form: edges `a-b` with
//! `a < b`, listed by increasing `a`. Two matchings are *adjacent* when
//! their symmetric difference is a single cycle of length four; the
//! operations here (edge insertion, neighbor generation, union
//! decomposition) are the primitives everything else is built from.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// Default cap on how many matchings an exhaustive enumeration may yield.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// An unordered pair of distinct 1-based vertex labels, stored with the
/// smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: u32,
    b: u32,
}

impl Edge {
    /// Builds the edge `u-v`, normalizing the endpoint order.
    ///
    /// Panics if `u == v` or a label is zero; labels are 1-based.
    pub fn new(u: u32, v: u32) -> Self {
        assert!(u != v, "edge endpoints must be distinct");
        assert!(u != 0 && v != 0, "vertex labels are 1-based");
        if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    /// Smaller endpoint.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// Larger endpoint.
    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn touches(&self, v: u32) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// A perfect matching of the complete graph on `2m` labeled vertices.
///
/// Values are immutable; every operation returns a new matching. Equality,
/// hashing and ordering act on the canonical form, so collections of
/// matchings sort into a stable, reproducible order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    /// `partner[i]` is the 0-based partner of the 0-based vertex `i`.
    partner: Box<[u32]>,
}

impl Matching {
    /// Canonicalizes a list of `m` vertex pairs into a matching.
    ///
    /// Accepts the pairs in any order and orientation; fails if the list is
    /// not a fixed-point-free involution on `1..=2m`.
    pub fn from_pairs(pairs: &[(u32, u32)], m: usize) -> Result<Self, Error> {
        assert!(m >= 1, "a matching needs at least one edge");
        if pairs.len() != m {
            return Err(Error::WrongEdgeCount {
                expected: m,
                got: pairs.len(),
            });
        }
        let n = 2 * m as u32;
        let mut partner = vec![u32::MAX; 2 * m];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, max: n });
                }
            }
            if u == v {
                return Err(Error::DuplicateVertex(u));
            }
            if partner[(u - 1) as usize] != u32::MAX {
                return Err(Error::DuplicateVertex(u));
            }
            if partner[(v - 1) as usize] != u32::MAX {
                return Err(Error::DuplicateVertex(v));
            }
            partner[(u - 1) as usize] = v - 1;
            partner[(v - 1) as usize] = u - 1;
        }
        Ok(Matching {
            partner: partner.into_boxed_slice(),
        })
    }

    /// The matching `{1-2, 3-4, ..., (2m-1)-2m}` pairing consecutive labels.
    pub fn consecutive(m: usize) -> Self {
        assert!(m >= 1, "a matching needs at least one edge");
        let mut partner = vec![0u32; 2 * m];
        for i in 0..m {
            partner[2 * i] = (2 * i + 1) as u32;
            partner[2 * i + 1] = (2 * i) as u32;
        }
        Matching {
            partner: partner.into_boxed_slice(),
        }
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of vertices, `2m`.
    pub fn vertex_count(&self) -> usize {
        self.partner.len()
    }

    /// Partner of the 1-based vertex `v`. Panics if `v` is out of range.
    pub fn partner(&self, v: u32) -> u32 {
        self.partner[(v - 1) as usize] + 1
    }

    /// Whether the edge belongs to the matching. Out-of-range edges are
    /// simply not contained.
    pub fn contains(&self, e: Edge) -> bool {
        let (a, b) = e.endpoints();
        (b as usize) <= self.partner.len() && self.partner(a) == b
    }

    /// The edges in canonical order (increasing smaller endpoint).
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=self.partner.len() as u32)
            .filter(move |&v| self.partner(v) > v)
            .map(move |v| Edge::new(v, self.partner(v)))
    }

    fn check_same_m(&self, other: &Matching) -> Result<(), Error> {
        if self.m() != other.m() {
            return Err(Error::MixedSizes {
                left: self.m(),
                right: other.m(),
            });
        }
        Ok(())
    }

    fn check_edge_range(&self, e: Edge) -> Result<(), Error> {
        let n = self.partner.len() as u32;
        if e.b() > n {
            return Err(Error::VertexOutOfRange {
                vertex: e.b(),
                max: n,
            });
        }
        Ok(())
    }

    /// Forces the edge `e` into the matching.
    ///
    /// If `e` is already present the matching is returned unchanged.
    /// Otherwise the two edges covering the endpoints of `e` are removed and
    /// replaced by `e` together with the edge joining their displaced
    /// partners. The result is always a valid matching.
    pub fn insert_edge(&self, e: Edge) -> Result<Matching, Error> {
        self.check_edge_range(e)?;
        if self.contains(e) {
            return Ok(self.clone());
        }
        let (u, v) = e.endpoints();
        let pu = self.partner(u);
        let pv = self.partner(v);
        let mut partner = self.partner.clone();
        partner[(u - 1) as usize] = v - 1;
        partner[(v - 1) as usize] = u - 1;
        partner[(pu - 1) as usize] = pv - 1;
        partner[(pv - 1) as usize] = pu - 1;
        Ok(Matching { partner })
    }

    /// Left fold of [`Matching::insert_edge`] over a sequence of edges.
    pub fn insert_all<I>(&self, edges: I) -> Result<Matching, Error>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut cur = self.clone();
        for e in edges {
            cur = cur.insert_edge(e)?;
        }
        Ok(cur)
    }

    /// Edges belonging to exactly one of the two matchings, canonically
    /// sorted.
    pub fn symmetric_difference(&self, other: &Matching) -> Result<Vec<Edge>, Error> {
        self.check_same_m(other)?;
        let mut out: Vec<Edge> = self
            .edges()
            .filter(|&e| !other.contains(e))
            .chain(other.edges().filter(|&e| !self.contains(e)))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Whether the two matchings are adjacent, i.e. their symmetric
    /// difference is a single cycle of length four.
    pub fn is_adjacent(&self, other: &Matching) -> Result<bool, Error> {
        self.check_same_m(other)?;
        // Four edges in the symmetric difference of two perfect matchings
        // always close a single 4-cycle, so counting differing vertices
        // suffices.
        let differing = self
            .partner
            .iter()
            .zip(other.partner.iter())
            .filter(|(a, b)| a != b)
            .count();
        Ok(differing == 4)
    }

    /// All matchings adjacent to this one, deduplicated and canonically
    /// sorted. There are exactly `m * (m - 1)` of them.
    ///
    /// For each pair of distinct edges `a-b`, `c-d` the two neighbors
    /// replace them by `a-c, b-d` and `a-d, b-c`.
    pub fn neighbors(&self) -> Vec<Matching> {
        let edges: Vec<Edge> = self.edges().collect();
        let mut out = Vec::with_capacity(self.m() * (self.m() - 1));
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i].endpoints();
                let (c, d) = edges[j].endpoints();
                for (x, y) in [(c, d), (d, c)] {
                    let mut partner = self.partner.clone();
                    partner[(a - 1) as usize] = x - 1;
                    partner[(x - 1) as usize] = a - 1;
                    partner[(b - 1) as usize] = y - 1;
                    partner[(y - 1) as usize] = b - 1;
                    out.push(Matching { partner });
                }
            }
        }
        out.sort();
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
        out
    }

    /// Decomposes the union of the two matchings into alternating cycles.
    ///
    /// A common edge shows up as a cycle of length two. Cycles are listed by
    /// their smallest vertex; within a cycle the walk starts at that vertex
    /// and moves to its partner in `self` first.
    pub fn decompose_union(&self, other: &Matching) -> Result<CycleDecomposition, Error> {
        self.check_same_m(other)?;
        let n = self.partner.len();
        let mut cycle_of = vec![u32::MAX; n];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if cycle_of[(start - 1) as usize] != u32::MAX {
                continue;
            }
            let id = cycles.len() as u32;
            let mut vertices = vec![start];
            cycle_of[(start - 1) as usize] = id;
            let mut cur = self.partner(start);
            let mut from_self = true;
            while cur != start {
                cycle_of[(cur - 1) as usize] = id;
                vertices.push(cur);
                cur = if from_self {
                    other.partner(cur)
                } else {
                    self.partner(cur)
                };
                from_self = !from_self;
            }
            cycles.push(AlternatingCycle { vertices });
        }
        Ok(CycleDecomposition {
            cycles,
            cycle_of: cycle_of.into_boxed_slice(),
        })
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matching {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic on the partner table, which coincides with the
        // lexicographic order of canonical edge lists.
        self.partner
            .len()
            .cmp(&other.partner.len())
            .then_with(|| self.partner.cmp(&other.partner))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.edges() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

impl FromStr for Matching {
    type Err = Error;

    /// Parses the literal format `1-2,3-4,5-6`: comma-separated hyphen
    /// pairs, 1-based labels, any pair order. The size `m` is the number of
    /// pairs.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut pairs = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (x, y) = token
                .split_once('-')
                .ok_or_else(|| Error::BadLiteral(token.to_string()))?;
            let u: u32 = x
                .trim()
                .parse()
                .map_err(|_| Error::BadLiteral(token.to_string()))?;
            let v: u32 = y
                .trim()
                .parse()
                .map_err(|_| Error::BadLiteral(token.to_string()))?;
            pairs.push((u, v));
        }
        Matching::from_pairs(&pairs, pairs.len())
    }
}

/// One alternating cycle in the union of two matchings `M1`, `M2`.
///
/// Vertices appear in cycle order, starting at the smallest vertex with the
/// second vertex being its `M1`-partner. A common edge is a 2-vertex cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingCycle {
    vertices: Vec<u32>,
}

impl AlternatingCycle {
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Cycle length: number of vertices, equal to the number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// A cycle always has at least two vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the cycle is a single common edge of the two matchings.
    pub fn is_common_edge(&self) -> bool {
        self.vertices.len() == 2
    }
}

/// The partition of `M1 ∪ M2` into vertex-disjoint alternating cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<AlternatingCycle>,
    cycle_of: Box<[u32]>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[AlternatingCycle] {
        &self.cycles
    }

    /// Number of cycles, usually written `l`. Equals `m` exactly when the
    /// two matchings coincide.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Index into [`CycleDecomposition::cycles`] of the cycle containing the
    /// 1-based vertex `v`.
    pub fn cycle_of(&self, v: u32) -> usize {
        self.cycle_of[(v - 1) as usize] as usize
    }

    /// Per-cycle insertion counts `len(C)/2 - 1`; their sum is the distance
    /// between the two matchings.
    pub fn profile(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len() / 2 - 1).collect()
    }
}

/// Product `n * (n-2) * (n-4) * ...` down to 1 or 2; `0!! = (-1)!! = 1`.
pub fn double_factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Number of perfect matchings of the complete graph on `2m` vertices,
/// `(2m-1)!!`.
pub fn matching_count(m: usize) -> BigUint {
    double_factorial(2 * m as u64 - 1)
}

/// `(2m-1)!!` as a machine integer, or `None` on overflow.
pub(crate) fn matching_count_u64(m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    let mut k = 2 * m as u64 - 1;
    while k > 1 {
        acc = acc.checked_mul(k)?;
        k -= 2;
    }
    Some(acc)
}

/// Exhaustive enumeration of all perfect matchings on `2m` vertices.
///
/// Yields each matching exactly once, in increasing canonical order: the
/// smallest unmatched vertex is paired with each larger candidate in label
/// order, recursively. The total is `(2m-1)!!`.
#[derive(Debug)]
pub struct AllMatchings {
    m: usize,
    /// Mixed-radix counter; digit `i` ranges over `0..2*(m-i)-1`.
    digits: Vec<u32>,
    remaining: u64,
}

impl AllMatchings {
    /// Refuses to start if `(2m-1)!!` exceeds `cap`.
    pub fn new(m: usize, cap: u64) -> Result<Self, Error> {
        assert!(m >= 1, "a matching needs at least one edge");
        match matching_count_u64(m) {
            Some(total) if total <= cap => Ok(AllMatchings {
                m,
                digits: vec![0; m],
                remaining: total,
            }),
            _ => Err(Error::ResourceLimit {
                what: "matching enumeration",
                needed: matching_count(m),
                cap,
            }),
        }
    }

    fn advance(&mut self) {
        for i in (0..self.m).rev() {
            let radix = 2 * (self.m - i) as u32 - 1;
            if self.digits[i] + 1 < radix {
                self.digits[i] += 1;
                for d in self.digits[i + 1..].iter_mut() {
                    *d = 0;
                }
                return;
            }
        }
    }
}

impl Iterator for AllMatchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.remaining == 0 {
            return None;
        }
        let item = decode_digits(self.m, &self.digits);
        self.remaining -= 1;
        self.advance();
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for AllMatchings {}

fn decode_digits(m: usize, digits: &[u32]) -> Matching {
    let mut free: Vec<u32> = (1..=2 * m as u32).collect();
    let mut partner = vec![0u32; 2 * m];
    for &d in digits {
        let v = free[0];
        let w = free[1 + d as usize];
        partner[(v - 1) as usize] = w - 1;
        partner[(w - 1) as usize] = v - 1;
        free.remove(1 + d as usize);
        free.remove(0);
    }
    Matching {
        partner: partner.into_boxed_slice(),
    }
}

/// All matchings on `2m` vertices under the default cap.
pub fn all_matchings(m: usize) -> Result<AllMatchings, Error> {
    AllMatchings::new(m, DEFAULT_ENUM_CAP)
}

/// The `rank`-th matching (0-based) in enumeration order, or `None` when the
/// rank is out of range or `(2m-1)!!` overflows a machine integer.
pub fn matching_by_rank(m: usize, rank: u64) -> Option<Matching> {
    let total = matching_count_u64(m)?;
    if rank >= total {
        return None;
    }
    let mut digits = vec![0u32; m];
    let mut rest = rank;
    // Place value of digit i is (2*(m-i)-3)!! = product of later radices.
    let mut place = total / (2 * m as u64 - 1);
    for (i, digit) in digits.iter_mut().enumerate() {
        *digit = (rest / place) as u32;
        rest %= place;
        if i + 1 < m {
            place /= 2 * (m - i - 1) as u64 - 1;
        }
    }
    Some(decode_digits(m, &digits))
}
