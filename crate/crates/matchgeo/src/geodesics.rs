//! Counting and enumerating geodesics in the flip graph.
//!
//! The number of geodesics across a single alternating cycle with `k`
//! matched pairs is `k^(k-2)`; three further routes to the same number (a
//! halved splitting recurrence, a weighted reformulation and the classic
//! labeled-tree recurrence) are implemented independently so they can check
//! one another. For arbitrary pairs the count factors over the cycles of
//! the union as a multinomial times a product of per-cycle counts, and an
//! explicit enumerator yields each geodesic path exactly once.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::matching::{Edge, Matching};
use crate::metric::insertion_splits;

/// Default cap on the number of geodesic paths an enumeration may yield.
pub const DEFAULT_GEODESIC_CAP: u64 = 100_000;

/// Largest cycle length accepted by the factorization brute force; the
/// search space is `C(n,2)^(n-1)` transposition sequences.
const MAX_FACTORIZATION_N: usize = 8;

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn multinomial(parts: &[usize]) -> BigUint {
    let mut rem: usize = parts.iter().sum();
    let mut acc = BigUint::one();
    for &p in parts {
        acc *= binomial(rem, p);
        rem -= p;
    }
    acc
}

/// Geodesic count across one alternating `2k`-cycle via the splitting
/// recurrence: half of `k` times the convolution of smaller cycle counts,
/// which double-counts every geodesic by its first step.
///
/// The base case is 1 for `k = 1`. Panics if an intermediate sum times `k`
/// ever came out odd, which would falsify the recurrence itself.
pub fn cycle_geodesics_recurrence(k: usize) -> BigUint {
    assert!(k >= 1, "cycle needs at least one matched pair");
    let mut p: Vec<BigUint> = vec![BigUint::zero(), BigUint::one()];
    for kk in 2..=k {
        let mut sum = BigUint::zero();
        for i in 1..kk {
            sum += binomial(kk - 2, i - 1) * &p[i] * &p[kk - i];
        }
        let doubled = sum * BigUint::from(kk);
        assert!(
            !doubled.bit(0),
            "splitting recurrence produced an odd double count at k={kk}"
        );
        p.push(doubled >> 1);
    }
    p[k].clone()
}

/// Geodesic count across one alternating `2k`-cycle via the weighted
/// reformulation: the same convolution with an `i` weight instead of the
/// `k/2` prefactor.
pub fn cycle_geodesics_weighted(k: usize) -> BigUint {
    assert!(k >= 1, "cycle needs at least one matched pair");
    let mut p: Vec<BigUint> = vec![BigUint::zero(), BigUint::one()];
    for kk in 2..=k {
        let mut sum = BigUint::zero();
        for i in 1..kk {
            sum += binomial(kk - 2, i - 1) * BigUint::from(i) * &p[i] * &p[kk - i];
        }
        p.push(sum);
    }
    p[k].clone()
}

/// Closed form `k^(k-2)` for the geodesic count across one alternating
/// `2k`-cycle; defined as 1 for `k = 1`.
pub fn cycle_geodesics_closed(k: usize) -> BigUint {
    assert!(k >= 1, "cycle needs at least one matched pair");
    if k == 1 {
        return BigUint::one();
    }
    BigUint::from(k).pow(k as u32 - 2)
}

/// Number of labeled trees on `k` vertices by the convolution recurrence
/// with `T(1) = 1`; an independent route to `k^(k-2)`.
pub fn labeled_tree_count(k: usize) -> BigUint {
    assert!(k >= 1, "trees need at least one vertex");
    let mut t: Vec<BigUint> = vec![BigUint::zero(), BigUint::one()];
    for kk in 2..=k {
        let mut sum = BigUint::zero();
        for i in 1..kk {
            sum += binomial(kk - 2, i - 1) * BigUint::from(i) * &t[i] * &t[kk - i];
        }
        t.push(sum);
    }
    t[k].clone()
}

/// Geodesic count for a union with the given per-cycle insertion profile:
/// a multinomial interlacing factor times the per-cycle closed forms.
pub fn count_from_profile(profile: &[usize]) -> BigUint {
    let mut acc = multinomial(profile);
    for &n in profile {
        if n > 0 {
            acc *= cycle_geodesics_closed(n + 1);
        }
    }
    acc
}

/// Exact number of geodesic paths between two matchings.
///
/// Always at least 1; equals `m^(m-2)` when the union is a single cycle.
pub fn geodesic_count(a: &Matching, b: &Matching) -> Result<BigUint, Error> {
    let dec = a.decompose_union(b)?;
    Ok(count_from_profile(&dec.profile()))
}

/// The neighbors of `from` that are one step closer to `target`, in
/// canonical order.
///
/// Candidates are generated as splitting insertions inside each cycle of
/// the union and deduplicated: every such neighbor arises from exactly two
/// inserted edges, the two diagonals of the symmetric-difference 4-cycle.
pub fn decreasing_neighbors(from: &Matching, target: &Matching) -> Result<Vec<Matching>, Error> {
    let dec = from.decompose_union(target)?;
    let mut out = BTreeSet::new();
    for cycle in dec.cycles() {
        if cycle.len() < 4 {
            continue;
        }
        let vs = cycle.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let (u, v) = (vs[i], vs[j]);
                if from.partner(u) == v {
                    continue;
                }
                if insertion_splits(from, target, u, v) {
                    out.insert(
                        from.insert_edge(Edge::new(u, v))
                            .expect("cycle vertices are in range"),
                    );
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// A shortest path in the flip graph: `d + 1` matchings, each adjacent to
/// the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicPath {
    steps: Vec<Matching>,
}

impl GeodesicPath {
    pub fn steps(&self) -> &[Matching] {
        &self.steps
    }

    /// Number of edges traversed, equal to the endpoint distance.
    pub fn hops(&self) -> usize {
        self.steps.len() - 1
    }
}

impl fmt::Display for GeodesicPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.steps {
            if !first {
                write!(f, " -> ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Enumerates every geodesic between two matchings.
///
/// Consults the closed-form count first and refuses with the offending
/// count when it exceeds `cap`. Paths come out in lexicographic order of
/// their step sequences.
pub fn enumerate_geodesics(
    a: &Matching,
    b: &Matching,
    cap: u64,
) -> Result<GeodesicEnum, Error> {
    let count = geodesic_count(a, b)?;
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { count, cap });
    }
    Ok(GeodesicEnum {
        target: b.clone(),
        path: vec![a.clone()],
        stack: Vec::new(),
        started: false,
        done: false,
    })
}

#[derive(Debug)]
struct Frame {
    options: Vec<Matching>,
    next: usize,
}

/// Depth-first iterator over geodesic paths; at each step only the
/// distance-decreasing neighbors are expanded, so every leaf is a geodesic
/// and none is produced twice.
#[derive(Debug)]
pub struct GeodesicEnum {
    target: Matching,
    path: Vec<Matching>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl Iterator for GeodesicEnum {
    type Item = GeodesicPath;

    fn next(&mut self) -> Option<GeodesicPath> {
        if self.done {
            return None;
        }
        if self.started {
            // backtrack to the deepest frame with an untried option
            loop {
                match self.stack.last_mut() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(frame) if frame.next < frame.options.len() => {
                        self.path.pop();
                        self.path.push(frame.options[frame.next].clone());
                        frame.next += 1;
                        break;
                    }
                    Some(_) => {
                        self.stack.pop();
                        self.path.pop();
                    }
                }
            }
        }
        self.started = true;
        while self.path.last().unwrap() != &self.target {
            let options = decreasing_neighbors(self.path.last().unwrap(), &self.target)
                .expect("endpoints share m");
            debug_assert!(!options.is_empty(), "decreasing step always exists");
            self.path.push(options[0].clone());
            self.stack.push(Frame { options, next: 1 });
        }
        Some(GeodesicPath {
            steps: self.path.clone(),
        })
    }
}

/// Counts the sequences of `n-1` transpositions whose left-to-right product
/// is the full cycle sending each of `n` symbols to its successor.
///
/// Exhaustive search over transposition sequences, skipping prefixes that
/// provably cannot reach the target in the remaining steps (a permutation
/// needs at least `n - cycles` transpositions, with matching parity). The
/// result must equal `n^(n-2)`.
pub fn count_cycle_factorizations(n: usize) -> Result<BigUint, Error> {
    assert!(n >= 1, "the cycle needs at least one symbol");
    if n > MAX_FACTORIZATION_N {
        let pairs = n * (n - 1) / 2;
        return Err(Error::ResourceLimit {
            what: "transposition sequences",
            needed: BigUint::from(pairs).pow(n as u32 - 1),
            cap: 13_492_928_512, // C(8,2)^7
        });
    }
    if n == 1 {
        return Ok(BigUint::one());
    }
    let transpositions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    // remainder[x] = what the suffix still has to map x to; starts as the
    // full cycle and must shrink to the identity
    let mut remainder: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let mut count = 0u64;
    dfs_factorizations(&mut remainder, n - 1, &transpositions, &mut count);
    Ok(BigUint::from(count))
}

fn permutation_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    cycles
}

fn dfs_factorizations(
    remainder: &mut [usize],
    steps_left: usize,
    transpositions: &[(usize, usize)],
    count: &mut u64,
) {
    if steps_left == 0 {
        if remainder.iter().enumerate().all(|(i, &x)| i == x) {
            *count += 1;
        }
        return;
    }
    for &(a, b) in transpositions {
        // consuming transposition t from the left turns the remainder r
        // into r∘t: swap the images at positions a and b
        remainder.swap(a, b);
        let rest = steps_left - 1;
        let need = remainder.len() - permutation_cycles(remainder);
        if need <= rest && (rest - need).is_multiple_of(2) {
            dfs_factorizations(remainder, rest, transpositions, count);
        }
        remainder.swap(a, b);
    }
}
