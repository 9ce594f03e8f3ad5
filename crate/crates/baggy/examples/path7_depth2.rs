//! The running example: the depth-two baggy elimination tree for the path
//! on seven vertices, with root bag {2,4,6} over the singleton leaves
//! {1}, {3}, {5}, {7}. Its cost is 4, so the compiled formula grows as n^4
//! while keeping product depth two.
//!
//! ```bash
//! cargo run -p baggy --example path7_depth2
//! ```

use num_traits::ToPrimitive;

use baggy::tree::path7_depth2_tree;
use baggy::{compile, io, predicted_size, Family};

fn main() {
    let g = Family::Path(7).generate().unwrap();
    let t = path7_depth2_tree();
    t.validate(&g).unwrap();
    let m = t.metrics(&g);

    println!("tree:\n{}", io::tree_to_json(&t));
    println!("\ncost {}   product depth {}", m.cost, m.product_depth);
    println!(
        "core leaves (bags with a vertex of degree >= 2): {:?}",
        m.core_leaves.iter().map(|&id| t.bag(id)).collect::<Vec<_>>()
    );

    println!("\n{:>5} {:>12} {:>12} {:>8}", "n", "measured", "predicted", "depth");
    for n in [2usize, 4, 8] {
        let f = compile(&g, &t, n).unwrap();
        let measured = f.measure();
        println!(
            "{n:>5} {:>12} {:>12} {:>8}",
            measured.size,
            predicted_size(&g, &t, n),
            measured.product_depth
        );
    }

    // the size exponent approaches the tree cost as n doubles
    println!("\n{:>5} -> {:>5} {:>10}", "n", "2n", "log2 ratio");
    for n in [16usize, 32, 64] {
        let a = predicted_size(&g, &t, n).to_f64().unwrap();
        let b = predicted_size(&g, &t, 2 * n).to_f64().unwrap();
        println!("{n:>5} -> {:>5} {:>10.4}", 2 * n, (b / a).log2());
    }

    // converting to a classic elimination tree keeps the cost
    let elim = t.to_elimination_tree();
    println!(
        "\nas an elimination tree (singleton bags): {} nodes, cost {}",
        elim.len(),
        elim.metrics(&g).cost
    );
}
