//! Four independent routes to the geodesic count across a single
//! alternating cycle with k matched pairs: two convolution recurrences, the
//! labeled-tree recurrence and the closed form k^(k-2).
//!
//! ```bash
//! cargo run -p matchgeo --example counting_identities
//! ```

use matchgeo::{
    cycle_geodesics_closed, cycle_geodesics_recurrence, cycle_geodesics_weighted,
    labeled_tree_count,
};

fn main() {
    println!("{:>3} {:>16} {:>16} {:>16} {:>16}", "k", "recurrence", "weighted", "trees", "k^(k-2)");
    for k in 1..=12 {
        let a = cycle_geodesics_recurrence(k);
        let b = cycle_geodesics_weighted(k);
        let c = labeled_tree_count(k);
        let d = cycle_geodesics_closed(k);
        assert!(a == b && b == c && c == d, "the four routes must agree");
        println!("{k:>3} {a:>16} {b:>16} {c:>16} {d:>16}");
    }
}
