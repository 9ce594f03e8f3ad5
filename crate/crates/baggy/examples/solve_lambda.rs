//! Exact minimum tree cost across product-depth budgets, with witness trees
//! and the brute-force cross-check on tiny patterns.
//!
//! ```bash
//! cargo run -p baggy --example solve_lambda
//! ```

use baggy::solver::BRUTE_VERTEX_CAP;
use baggy::{io, lambda, lambda_brute, treedepth, Family};

fn main() {
    let instances = [
        ("P_7", Family::Path(7)),
        ("K_3", Family::Complete(3)),
        ("F_{2,3}", Family::FullBary { arity: 2, depth: 3 }),
        ("F_{3,3}", Family::FullBary { arity: 3, depth: 3 }),
    ];
    for (name, family) in instances {
        let g = family.generate().unwrap();
        let td = treedepth(&g).unwrap();
        print!("{name}: treedepth {td}, lambda at depth 1..4 =");
        for delta in 1..=4 {
            let r = lambda(&g, delta).unwrap();
            print!(" {}", r.value);
            if g.vertex_count() <= BRUTE_VERTEX_CAP {
                assert_eq!(r.value, lambda_brute(&g, delta).unwrap().value);
            }
        }
        println!(
            "{}",
            if g.vertex_count() <= BRUTE_VERTEX_CAP {
                "  (each confirmed by exhaustive enumeration)"
            } else {
                ""
            }
        );
    }

    // the depth-1 witness for the full binary tree of depth 3: the root bag
    // must hold every internal vertex
    let f23 = Family::FullBary { arity: 2, depth: 3 }.generate().unwrap();
    let r = lambda(&f23, 1).unwrap();
    println!("\nF_{{2,3}} at depth budget 1: cost {}, witness:", r.value);
    println!("{}", io::tree_to_json(&r.witness));
    println!(
        "search stats: {} subproblems, {} memo entries",
        r.stats.subproblems, r.stats.memo_entries
    );

    // raising the budget to the treedepth always saturates
    let r3 = lambda(&f23, 3).unwrap();
    println!(
        "\nat budget 3 the cost saturates at the treedepth: {} = {}",
        r3.value,
        treedepth(&f23).unwrap()
    );
}
