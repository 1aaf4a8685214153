//! Enumerating every shortest path between two matchings and checking the
//! multinomial counting formula against the explicit list.
//!
//! ```bash
//! cargo run -p matchgeo --example geodesic_enumeration
//! ```

use matchgeo::{enumerate_geodesics, geodesic_count, Matching};

fn main() -> Result<(), matchgeo::Error> {
    // an antipodal pair at m = 3: all 3^(3-2) = 3 geodesics
    let a: Matching = "1-2,3-4,5-6".parse()?;
    let b: Matching = "2-3,4-5,1-6".parse()?;
    println!("geodesics between {a} and {b}:");
    for path in enumerate_geodesics(&a, &b, 1000)? {
        println!("  {path}");
    }
    println!("closed form: {}", geodesic_count(&a, &b)?);

    // a pair whose union has two 4-cycles: multinomial(2;1,1) * 1 * 1 = 2
    let c: Matching = "1-2,3-4,5-6,7-8".parse()?;
    let d: Matching = "1-4,2-3,5-8,6-7".parse()?;
    let profile = c.decompose_union(&d)?.profile();
    println!("\ncycle profile of {c} vs {d}: {profile:?}");
    let paths: Vec<_> = enumerate_geodesics(&c, &d, 1000)?.collect();
    println!("enumeration found {} paths, formula says {}", paths.len(), geodesic_count(&c, &d)?);
    for path in &paths {
        println!("  {path}");
    }

    Ok(())
}
