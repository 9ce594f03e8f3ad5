//! Generate the built-in graph families and show their basic structure.
//!
//! ```bash
//! cargo run -p baggy --example families
//! ```

use baggy::{io, Family};

fn main() {
    let families = [
        ("path P_7", Family::Path(7)),
        ("cycle C_5", Family::Cycle(5)),
        ("star K_{1,4}", Family::Star(5)),
        ("complete K_4", Family::Complete(4)),
        ("2x3 grid", Family::Grid(2, 3)),
        ("full binary tree of depth 3", Family::FullBary { arity: 2, depth: 3 }),
        ("full ternary tree of depth 3", Family::FullBary { arity: 3, depth: 3 }),
    ];
    for (name, family) in families {
        let g = family.generate().expect("family parameters are admissible");
        println!(
            "{name}: {} vertices, {} edges, pendants {}",
            g.vertex_count(),
            g.edge_count(),
            g.pendant_vertices()
        );
    }

    // degenerate parameters are rejected rather than silently accepted
    println!("\npath of 2 vertices: {:?}", Family::Path(2).generate().err());

    let p7 = Family::Path(7).generate().unwrap();
    println!("\nP_7 as JSON:\n{}", io::graph_to_json(&p7));
}
