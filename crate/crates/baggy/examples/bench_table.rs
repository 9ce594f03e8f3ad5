//! The size/depth trade-off table: minimum tree cost per depth budget next
//! to treedepth, with compiled-size columns and the fitted growth exponent.
//!
//! The full b-ary tree rows exhibit the depth hierarchy: at depth budget 1
//! the cost of F_{b,3} is b + 2, strictly above its treedepth 3, so
//! shallower formulas must pay with polynomially larger size.
//!
//! ```bash
//! cargo run -p baggy --example bench_table
//! ```

use num_traits::ToPrimitive;

use baggy::{lambda, predicted_size, treedepth, Family};

fn main() {
    let families = [
        ("path:7", Family::Path(7)),
        ("cycle:5", Family::Cycle(5)),
        ("complete:4", Family::Complete(4)),
        ("grid:2:3", Family::Grid(2, 3)),
        ("full_bary:2:3", Family::FullBary { arity: 2, depth: 3 }),
        ("full_bary:3:3", Family::FullBary { arity: 3, depth: 3 }),
    ];
    let ns = [16usize, 32, 64];

    println!("family,delta,lambda,treedepth,size_n16,size_n32,size_n64,fitted_exponent");
    for (label, family) in families {
        let g = family.generate().unwrap();
        let td = treedepth(&g).unwrap();
        for delta in 1..=3 {
            let r = lambda(&g, delta).unwrap();
            let sizes: Vec<_> = ns.iter().map(|&n| predicted_size(&g, &r.witness, n)).collect();
            let fitted = {
                let a = sizes[sizes.len() - 2].to_f64().unwrap();
                let b = sizes[sizes.len() - 1].to_f64().unwrap();
                (b / a).log2()
            };
            println!(
                "{label},{delta},{},{td},{},{},{},{fitted:.4}",
                r.value, sizes[0], sizes[1], sizes[2]
            );
        }
    }
}
