//! Walk a compiled formula to sample parse trees (one monomial each), then
//! lift them back to baggy elimination trees by placing every pattern
//! vertex at the least common ancestor of the leaves mentioning it.
//!
//! For the depth-two path tree every sampled parse tree lifts back to the
//! same shape: root {2,4,6} over the four singleton leaves.
//!
//! ```bash
//! cargo run -p baggy --example lift_parse_tree
//! ```

use baggy::tree::path7_depth2_tree;
use baggy::verify::parse::{lift, sample_parse_tree, PtKind};
use baggy::{compile, io, lambda, Family};

fn main() {
    let g = Family::Path(7).generate().unwrap();
    let f = compile(&g, &path7_depth2_tree(), 3).unwrap();

    let pt = sample_parse_tree(&f, 1).unwrap();
    println!("sampled parse tree with {} nodes; monomial:", pt.len());
    for var in pt.monomial() {
        let (i, j) = g.edges()[var.edge_index];
        println!("  x[({i},{u}),({j},{v})]", u = var.u, v = var.v);
    }
    let branches = pt
        .nodes()
        .iter()
        .filter(|n| matches!(n.kind, PtKind::Branch))
        .count();
    println!("product gates kept in the contracted tree: {branches}");

    let lifted = lift(&pt, &g).unwrap();
    lifted.validate(&g).unwrap();
    let m = lifted.metrics(&g);
    println!(
        "\nlifted tree (cost {}, product depth {}):\n{}",
        m.cost,
        m.product_depth,
        io::tree_to_json(&lifted)
    );

    // across seeds: always valid, never deeper than the formula, never
    // cheaper than the proven minimum
    let ir_depth = f.measure().product_depth;
    let floor = lambda(&g, ir_depth).unwrap().value;
    let mut costs = Vec::new();
    for seed in 0..10 {
        let lifted = lift(&sample_parse_tree(&f, seed).unwrap(), &g).unwrap();
        let m = lifted.metrics(&g);
        assert!(m.product_depth <= ir_depth);
        assert!(m.cost >= floor);
        costs.push(m.cost);
    }
    println!("\ncosts over 10 seeds: {costs:?} (minimum possible: {floor})");
}
