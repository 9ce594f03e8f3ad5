//! Project a colored-isomorphism formula down to the homomorphism
//! polynomial: each variable becomes the host-edge variable of its pair of
//! values, and diagonal assignments vanish. Evaluating at all-ones then
//! counts homomorphisms into the n-clique.
//!
//! ```bash
//! cargo run -p baggy --example hom_projection
//! ```

use baggy::verify::pit_equiv_hom;
use baggy::{
    brute_hom, compile, eval_ir, hom_project, lambda, BaggyEliminationTree, Family,
    HomAssignment,
};

fn main() {
    // maps of P_3 into K_3 avoiding equal neighbors: 3 * 2 * 2 = 12
    let p3 = Family::Path(3).generate().unwrap();
    let w = lambda(&p3, 1).unwrap().witness;
    let h = hom_project(&compile(&p3, &w, 3).unwrap());
    println!(
        "homomorphisms P_3 -> K_3: {}",
        eval_ir(&h, &HomAssignment::all_ones(3))
    );

    // proper 3-colorings of a triangle: 6
    let k3 = Family::Complete(3).generate().unwrap();
    let single = BaggyEliminationTree::with_root([1, 2, 3].into_iter().collect());
    let h = hom_project(&compile(&k3, &single, 3).unwrap());
    println!(
        "homomorphisms K_3 -> K_3: {}",
        eval_ir(&h, &HomAssignment::all_ones(3))
    );

    // no triangle fits into a single edge
    let h2 = hom_project(&compile(&k3, &single, 2).unwrap());
    println!(
        "homomorphisms K_3 -> K_2: {}",
        eval_ir(&h2, &HomAssignment::all_ones(2))
    );

    // the projected formula and the brute-force homomorphism sum agree on
    // random assignments too, not just at all-ones
    let grid = Family::Grid(2, 3).generate().unwrap();
    let w = lambda(&grid, 2).unwrap().witness;
    let h = hom_project(&compile(&grid, &w, 5).unwrap());
    let report = pit_equiv_hom(
        5,
        |a| eval_ir(&h, a),
        |a| brute_hom(&grid, 5, a).unwrap(),
        20,
        42,
    );
    println!(
        "2x3 grid at n=5: identity test -> {}",
        if report.is_equal() { "equal" } else { "counterexample" }
    );
}
