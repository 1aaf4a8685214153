//! The induced subgraph of non-crossing matchings: Catalan counts, the
//! boundary pair, and the sweep showing it is the unique pair attaining
//! m^(m-2) geodesics inside the subgraph.
//!
//! ```bash
//! cargo run -p matchgeo --example noncrossing_tour
//! ```

use matchgeo::{
    all_matchings, boundary_pair, catalan, is_noncrossing, noncrossing_distance,
    noncrossing_geodesic_count, verify_unique_maximal_pair,
};

fn main() -> Result<(), matchgeo::Error> {
    for m in 2..=5 {
        let count = all_matchings(m)?.filter(is_noncrossing).count();
        println!("m={m}: {count} non-crossing matchings (Catalan number {})", catalan(m));
    }

    let m = 4;
    let (a, b) = boundary_pair(m);
    println!("\nboundary pair at m={m}: {a} and {b}");
    println!("subgraph distance: {}", noncrossing_distance(&a, &b)?);
    println!(
        "geodesics staying non-crossing: {}",
        noncrossing_geodesic_count(&a, &b, 100_000)?
    );

    let report = verify_unique_maximal_pair(m, 100_000)?;
    println!(
        "\nsweep over all pairs of the {} non-crossing matchings:",
        report.noncrossing_count
    );
    println!(
        "maximum subgraph geodesic count {} attained by {} pair(s); boundary pair unique: {}",
        report.max_count,
        report.maximal_pairs.len(),
        report.holds()
    );

    Ok(())
}
