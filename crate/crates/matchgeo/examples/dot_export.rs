//! Rendering the flip graph (or its non-crossing subgraph) as DOT for
//! graphviz. Pipe into `dot -Tsvg` to draw it.
//!
//! ```bash
//! cargo run -p matchgeo --example dot_export > p3.dot
//! ```

use matchgeo::{is_noncrossing, MatchingGraph};

fn main() -> Result<(), matchgeo::Error> {
    let graph = MatchingGraph::build(3, 1_000_000)?;
    let sub = graph.induced(is_noncrossing);
    eprintln!(
        "full graph: {} vertices / {} edges; non-crossing subgraph: {} / {}",
        graph.vertex_count(),
        graph.edge_count(),
        sub.vertex_count(),
        sub.edge_count()
    );
    print!("{}", sub.to_dot());
    Ok(())
}
