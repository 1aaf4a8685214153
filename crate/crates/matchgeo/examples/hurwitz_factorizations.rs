//! Counting factorizations of a full n-cycle into n-1 transpositions by
//! exhaustive search; the totals reproduce n^(n-2), the same numbers that
//! count geodesics between antipodal matchings.
//!
//! ```bash
//! cargo run -p matchgeo --example hurwitz_factorizations
//! ```

use matchgeo::{count_cycle_factorizations, cycle_geodesics_closed};

fn main() -> Result<(), matchgeo::Error> {
    println!("{:>3} {:>12} {:>12}", "n", "search", "n^(n-2)");
    for n in 2..=6 {
        let counted = count_cycle_factorizations(n)?;
        let closed = cycle_geodesics_closed(n);
        assert_eq!(counted, closed);
        println!("{n:>3} {counted:>12} {closed:>12}");
    }
    Ok(())
}
