//! Exact metric and geodesic structure of the flip graph of perfect
//! matchings.
//!
//! The vertices are all `(2m-1)!!` perfect matchings of the complete graph
//! on `2m` labeled points; two matchings are adjacent when their symmetric
//! difference is a single 4-cycle. The crate computes, with exact integer
//! arithmetic throughout:
//!
//! - distances (`m - l` over the cycles of the union), eccentricities,
//!   the diameter and antipodes ([`metric`]);
//! - geodesic counts, both the closed forms (`k^(k-2)` across a single
//!   cycle, a multinomial product in general) and explicit enumeration
//!   ([`geodesics`]);
//! - the induced subgraph of non-crossing matchings, where exactly one
//!   antipodal pair attains the ambient maximum ([`noncrossing`]);
//! - brute-force oracles (breadth-first search, exhaustive filters, a
//!   transposition-factorization count) that re-derive each of those facts
//!   from scratch ([`verify`]).
//!
//! ```
//! use matchgeo::{distance, geodesic_count, Matching};
//!
//! let a: Matching = "1-2,3-4,5-6".parse()?;
//! let b: Matching = "2-3,4-5,1-6".parse()?;
//! assert_eq!(distance(&a, &b)?, 2);
//! assert_eq!(geodesic_count(&a, &b)?.to_string(), "3");
//! # Ok::<(), matchgeo::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability; the `matchgeo`
//! binary exposes the same operations as subcommands with JSON output.

pub mod cli;
pub mod error;
pub mod geodesics;
pub mod graph;
pub mod matching;
pub mod metric;
pub mod noncrossing;
pub mod verify;

pub use error::Error;
pub use geodesics::{
    count_cycle_factorizations, cycle_geodesics_closed, cycle_geodesics_recurrence,
    cycle_geodesics_weighted, enumerate_geodesics, geodesic_count, labeled_tree_count,
    GeodesicPath, DEFAULT_GEODESIC_CAP,
};
pub use graph::MatchingGraph;
pub use matching::{
    all_matchings, matching_by_rank, matching_count, AllMatchings, AlternatingCycle,
    CycleDecomposition, Edge, Matching, DEFAULT_ENUM_CAP,
};
pub use metric::{
    antipode_count, antipodes, bfs_distance, classify_insertion, diameter, distance,
    eccentricity, InsertionEffect,
};
pub use noncrossing::{
    boundary_pair, catalan, edges_cross, is_noncrossing, noncrossing_distance,
    noncrossing_geodesic_count, verify_unique_maximal_pair, UniqueMaximalReport,
};
pub use verify::{run_suite, Check, VerifyReport};
