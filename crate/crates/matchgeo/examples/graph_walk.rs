//! Materializing the whole flip graph at desk scale: order, regularity,
//! connectivity and the distance profile from one vertex.
//!
//! ```bash
//! cargo run -p matchgeo --example graph_walk
//! ```

use matchgeo::{matching_count, Matching, MatchingGraph};

fn main() -> Result<(), matchgeo::Error> {
    let m = 4;
    let graph = MatchingGraph::build(m, 1_000_000)?;
    println!(
        "m={m}: {} vertices (expected (2m-1)!! = {}), {} edges",
        graph.vertex_count(),
        matching_count(m),
        graph.edge_count()
    );
    println!("every vertex has degree {}", graph.degree(0));

    let base = Matching::consecutive(m);
    let src = graph.index_of(&base).expect("base is a vertex");
    let dist = graph.bfs_distances(src);
    let mut layers = vec![0usize; m];
    for &d in &dist {
        layers[d as usize] += 1;
    }
    println!("breadth-first layers from {base}:");
    for (d, size) in layers.iter().enumerate() {
        println!("  distance {d}: {size} matchings");
    }

    Ok(())
}
