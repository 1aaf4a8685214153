//! Distances in the flip graph: cycle decomposition, the `m - l` formula,
//! eccentricity and antipodes.
//!
//! ```bash
//! cargo run -p matchgeo --example metric_tour
//! ```

use matchgeo::{
    antipode_count, antipodes, bfs_distance, classify_insertion, distance, eccentricity, Edge,
    Matching,
};

fn main() -> Result<(), matchgeo::Error> {
    let a: Matching = "1-2,3-4,5-6".parse()?;
    let b: Matching = "2-3,4-5,1-6".parse()?;

    let dec = a.decompose_union(&b)?;
    println!("union of {a} and {b}:");
    for cycle in dec.cycles() {
        println!("  cycle through {:?}", cycle.vertices());
    }
    println!("distance = m - l = {} - {} = {}", a.m(), dec.cycle_count(), distance(&a, &b)?);
    println!("breadth-first search agrees: {}", bfs_distance(&a, &b)?);

    // inserting an edge moves the distance by -1, 0 or +1
    for e in [Edge::new(1, 4), Edge::new(1, 3)] {
        println!("inserting {e} into {a}: {:?}", classify_insertion(&a, &b, e)?);
    }

    // every matching sits at distance m-1 from exactly (2m-2)!! others
    println!("eccentricity of {a} = {}", eccentricity(&a));
    println!("antipode count = {}", antipode_count(a.m()));
    for (i, far) in antipodes(&a).enumerate().take(3) {
        println!("  antipode {}: {far}", i + 1);
    }

    Ok(())
}
