//! Compile a pattern and tree into a monotone formula and inspect the gate
//! layout. The path on three vertices at host size 2 yields the smallest
//! interesting formula: 14 edges, product depth 1.
//!
//! ```bash
//! cargo run -p baggy --example compile_formula
//! ```

use baggy::{compile, io, BaggyEliminationTree, Family, VertexSubset};

fn main() {
    let g = Family::Path(3).generate().unwrap();
    let mut t = BaggyEliminationTree::with_root(VertexSubset::singleton(2));
    t.add_child(0, VertexSubset::singleton(1));
    t.add_child(0, VertexSubset::singleton(3));

    let f = compile(&g, &t, 2).unwrap();
    let m = f.measure();
    println!(
        "size {} edges, product depth {}, gates: {} sum / {} product / {} var",
        m.size, m.product_depth, m.gate_counts.sum, m.gate_counts.product, m.gate_counts.var
    );

    // Each line is one gate in preorder. The top sum ranges over the root
    // bag's assignments; each summand multiplies the two leaf sums, and each
    // leaf sum ranges over one pendant's assignments.
    println!("\ntext format:\n{}", io::formula_to_text(&f));

    println!("json format:\n{}", io::formula_to_json(&f));

    // variables are x_{{(i,u),(j,v)}}: edge_index into the sorted edge list,
    // u the host of the smaller endpoint, v the host of the larger
    println!("\nedges of P_3 in index order: {:?}", g.edges());
}
