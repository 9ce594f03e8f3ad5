//! Check a compiled formula against the brute-force oracle, both exactly
//! (full monomial expansion) and by randomized identity testing, and watch
//! the test catch a deliberately broken formula.
//!
//! ```bash
//! cargo run -p baggy --example verify_equivalence
//! ```

use baggy::tree::path7_depth2_tree;
use baggy::verify::{coliso_monomial_map, pit_equiv_coliso, PitOutcome, DEFAULT_MONOMIAL_CAP};
use baggy::{brute_coliso, compile, eval_ir, expand, lambda, Family, FormulaIR};

fn main() {
    // exact: expanding the compiled formula reproduces the polynomial's
    // monomial map, one unit-coefficient monomial per vertex assignment
    let c5 = Family::Cycle(5).generate().unwrap();
    let witness = lambda(&c5, 2).unwrap().witness;
    let f = compile(&c5, &witness, 2).unwrap();
    let expanded = expand(&f, DEFAULT_MONOMIAL_CAP).unwrap();
    let oracle = coliso_monomial_map(&c5, 2).unwrap();
    println!(
        "C_5 at n=2: {} monomials, all coefficient 1: {}",
        expanded.len(),
        expanded == oracle
    );

    // randomized: twenty seeded evaluations over the 2^61-1 field
    let p7 = Family::Path(7).generate().unwrap();
    let f = compile(&p7, &path7_depth2_tree(), 8).unwrap();
    let report = pit_equiv_coliso(
        &p7,
        8,
        |a| eval_ir(&f, a),
        |a| brute_coliso(&p7, 8, a).unwrap(),
        20,
        1,
    );
    println!(
        "P_7 at n=8: identity test over {} trials -> {}",
        report.trial_seeds.len(),
        if report.is_equal() { "equal" } else { "counterexample" }
    );

    // break the formula by deleting one variable leaf; the very first trial
    // almost surely disagrees
    let mut mutant = f.clone();
    delete_first_var(&mut mutant);
    let report = pit_equiv_coliso(
        &p7,
        8,
        |a| eval_ir(&mutant, a),
        |a| brute_coliso(&p7, 8, a).unwrap(),
        20,
        1,
    );
    match report.outcome {
        PitOutcome::Counterexample { trial, trial_seed, .. } => println!(
            "mutant with one deleted leaf: caught at trial {trial} (seed {trial_seed})"
        ),
        PitOutcome::Equal => println!("mutant slipped through (probability < 2^-56 per trial)"),
    }
}

fn delete_first_var(f: &mut baggy::ColIsoFormula) -> bool {
    match f {
        FormulaIR::Sum(cs) | FormulaIR::Product(cs) => {
            for (i, c) in cs.iter_mut().enumerate() {
                if matches!(c, FormulaIR::Var(_)) {
                    cs.remove(i);
                    return true;
                }
                if delete_first_var(c) {
                    return true;
                }
            }
            false
        }
        _ => false,
    }
}
