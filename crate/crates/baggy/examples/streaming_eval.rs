//! Evaluate the compiled polynomial at host sizes far beyond what could be
//! materialized, by recursing over the tree with memoization on the
//! relevant ancestor assignments instead of building gates.
//!
//! ```bash
//! cargo run -p baggy --example streaming_eval
//! ```

use std::time::Instant;

use baggy::tree::path7_depth2_tree;
use baggy::{
    compile, eval_ir, eval_streaming, predicted_size, ColIsoAssignment, Family, FieldElement,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = Family::Path(7).generate().unwrap();
    let t = path7_depth2_tree();

    // agreement with the materialized formula at a small host size
    let f = compile(&g, &t, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = ColIsoAssignment::random(&g, 4, &mut rng);
    assert_eq!(eval_streaming(&g, &t, 4, &a), eval_ir(&f, &a));
    println!("n=4: streaming equals materialized evaluation");

    // all-ones sums one per monomial: n^7 for the 7-vertex path
    let started = Instant::now();
    let ones = ColIsoAssignment::all_ones(&g, 50);
    let value = eval_streaming(&g, &t, 50, &ones);
    println!(
        "n=50: all-ones value {} = 50^7 ({}), streamed in {:.2?} vs {} formula edges",
        value,
        FieldElement::new(50).pow(7),
        started.elapsed(),
        predicted_size(&g, &t, 50)
    );

    // a host size past the default materialization cap of 10^8 edges
    let started = Instant::now();
    let ones = ColIsoAssignment::all_ones(&g, 100);
    let value = eval_streaming(&g, &t, 100, &ones);
    assert_eq!(value, FieldElement::new(100).pow(7));
    println!(
        "n=100: evaluated in {:.2?}; materializing would need {} edges",
        started.elapsed(),
        predicted_size(&g, &t, 100)
    );
}
