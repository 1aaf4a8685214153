use num_bigint::BigUint;
use thiserror::Error;

use crate::matching::{Edge, Matching};

/// Errors reported by matching construction and the graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex label appears in more than one pair (or twice in one pair).
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u32),

    /// A vertex label is outside 1..=2m.
    #[error("vertex {vertex} out of range 1..={max}")]
    VertexOutOfRange { vertex: u32, max: u32 },

    /// The pair list does not contain exactly m pairs.
    #[error("expected {expected} pairs, got {got}")]
    WrongEdgeCount { expected: usize, got: usize },

    /// Two matchings of different sizes were combined.
    #[error("matchings have different sizes: m={left} vs m={right}")]
    MixedSizes { left: usize, right: usize },

    /// The edge is already part of the matching.
    #[error("edge {0} is already in the matching")]
    EdgeAlreadyPresent(Edge),

    /// Two edges share an endpoint where disjoint edges were required.
    #[error("edges share vertex {0}")]
    SharedVertex(u32),

    /// A matching with crossing chords was passed where a non-crossing one
    /// was required.
    #[error("matching {0} has crossing chords")]
    NotNonCrossing(Matching),

    /// A brute-force computation would exceed its configured limit.
    #[error("{what}: {needed} exceeds the limit {cap}")]
    ResourceLimit {
        what: &'static str,
        needed: BigUint,
        cap: u64,
    },

    /// Geodesic enumeration was refused because the closed-form count is
    /// over the cap.
    #[error("geodesic count {count} exceeds the cap {cap}")]
    CapExceeded { count: BigUint, cap: u64 },

    /// A matching literal could not be parsed.
    #[error("cannot parse matching literal: {0}")]
    BadLiteral(String),
}
