//! Structural invariants checked exhaustively over every valid baggy
//! elimination tree of every small pattern, plus property tests for the
//! serialization formats and graph operations.

mod util;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use baggy::solver::for_each_valid_tree;
use baggy::verify::DEFAULT_MONOMIAL_CAP;
use baggy::{
    compile, eval_ir, expand, io, predicted_size, BaggyEliminationTree, ColIsoAssignment, Family,
    FieldElement, FormulaIR, PatternGraph, VariableId, VertexSubset,
};

use util::connected_patterns;

#[test]
fn tree_sweep_on_small_patterns() {
    for k in 3..=5 {
        for g in connected_patterns(k) {
            for_each_valid_tree(&g, |t, m| {
                assert!(m.product_depth <= m.cost, "depth above cost on {g:?}");

                let elim = t.to_elimination_tree();
                elim.validate(&g).expect("elimination tree validates");
                assert!(elim.nodes().iter().all(|n| n.bag.len() == 1));
                assert_eq!(elim.metrics(&g).cost, m.cost, "cost drifted on {g:?}");

                let norm = t.normalize_noncore(&g);
                norm.validate(&g).expect("normalized tree validates");
                let nm = norm.metrics(&g);
                assert!(nm.cost <= m.cost);
                assert!(nm.product_depth <= m.product_depth);
                assert!(norm.normalize_noncore(&g).same_structure(&norm));
            });
        }
    }
}

#[test]
fn elimination_cost_preserved_on_six_vertex_patterns() {
    for g in connected_patterns(6) {
        for_each_valid_tree(&g, |t, m| {
            let elim = t.to_elimination_tree();
            elim.validate(&g).expect("elimination tree validates");
            assert_eq!(elim.metrics(&g).cost, m.cost);
        });
    }
}

#[test]
fn compiled_depth_and_size_laws_on_all_four_vertex_trees() {
    for g in connected_patterns(4) {
        for_each_valid_tree(&g, |t, m| {
            let f = compile(&g, t, 2).unwrap();
            let measured = f.measure();
            assert!(
                measured.product_depth <= m.product_depth,
                "compiled depth {} above tree depth {} on {g:?}",
                measured.product_depth,
                m.product_depth
            );
            assert_eq!(
                num_bigint::BigUint::from(measured.size),
                predicted_size(&g, t, 2)
            );
        });
    }
}

#[test]
fn all_ones_evaluation_counts_monomials() {
    for (family, n) in [
        (Family::Path(5), 2usize),
        (Family::Path(5), 3),
        (Family::Cycle(4), 2),
        (Family::Complete(4), 2),
        (Family::Grid(2, 3), 2),
    ] {
        let g = family.generate().unwrap();
        let w = baggy::lambda(&g, 2).unwrap().witness;
        let f = compile(&g, &w, n).unwrap();
        let ones = ColIsoAssignment::all_ones(&g, n);
        assert_eq!(
            eval_ir(&f, &ones),
            FieldElement::new(n as u64).pow(g.vertex_count() as u64),
            "all-ones value on {g:?} at n {n}"
        );
        // the same count in exact arbitrary-precision arithmetic
        assert_eq!(
            baggy::eval_ir_exact(&f, &|_| num_bigint::BigUint::from(1u32)).unwrap(),
            num_bigint::BigUint::from(n).pow(g.vertex_count() as u32)
        );
    }
}

#[test]
fn expansion_of_witnesses_has_unit_coefficients() {
    let g = Family::Cycle(5).generate().unwrap();
    let w = baggy::lambda(&g, 2).unwrap().witness;
    let f = compile(&g, &w, 2).unwrap();
    let m = expand(&f, DEFAULT_MONOMIAL_CAP).unwrap();
    assert_eq!(m.len(), 32);
    assert!(m.iter().all(|(_, c)| c == 1));
}

/// Recursive random splitting produces a valid tree by construction: pick a
/// bag, recurse into the components of the rest.
fn random_valid_tree(g: &PatternGraph, seed: u64) -> BaggyEliminationTree {
    fn pick_subset(comp: VertexSubset, rng: &mut ChaCha8Rng) -> VertexSubset {
        loop {
            let picked: VertexSubset =
                comp.iter().filter(|_| rng.gen_bool(0.55)).collect();
            if !picked.is_empty() {
                return picked;
            }
        }
    }
    fn attach(
        g: &PatternGraph,
        tree: &mut BaggyEliminationTree,
        parent: usize,
        rest: VertexSubset,
        rng: &mut ChaCha8Rng,
    ) {
        for part in g.components(rest) {
            let bag = pick_subset(part, rng);
            let id = tree.add_child(parent, bag);
            attach(g, tree, id, part.difference(bag), rng);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = g.vertex_set();
    let root_bag = pick_subset(full, &mut rng);
    let mut tree = BaggyEliminationTree::with_root(root_bag);
    attach(g, &mut tree, 0, full.difference(root_bag), &mut rng);
    tree
}

fn arbitrary_formula() -> impl Strategy<Value = FormulaIR<VariableId>> {
    let leaf = prop_oneof![
        (0usize..6, 1usize..4, 1usize..4).prop_map(|(e, u, v)| {
            FormulaIR::Var(VariableId {
                edge_index: e,
                u,
                v,
            })
        }),
        (0u64..20, 1u64..5)
            .prop_map(|(num, den)| FormulaIR::Const(num_rational::Ratio::new(num, den))),
    ];
    leaf.prop_recursive(4, 64, 5, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..5).prop_map(FormulaIR::Sum),
            prop::collection::vec(inner, 1..5).prop_map(FormulaIR::Product),
        ]
    })
}

proptest! {
    #[test]
    fn components_partition_the_queried_subset(edge_bits in 0u32..(1 << 15), subset_bits in 0u32..(1 << 6)) {
        let pairs: Vec<(usize, usize)> = (1..=6)
            .flat_map(|i| (i + 1..=6usize).map(move |j| (i, j)))
            .collect();
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| edge_bits & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = PatternGraph::new(6, edges).unwrap();
        let within: VertexSubset = (1..=6).filter(|v| subset_bits & (1 << (v - 1)) != 0).collect();
        let comps = g.components(within);
        let mut union = VertexSubset::EMPTY;
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(union.is_disjoint(*c));
            union = union.union(*c);
        }
        prop_assert_eq!(union, within);
        // ascending minimum-vertex order
        let mins: Vec<_> = comps.iter().map(|c| c.min_vertex().unwrap()).collect();
        prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn relabel_round_trips_and_preserves_degrees(perm_seed in 0u64..500) {
        let g = Family::Grid(2, 3).generate().unwrap();
        let mut perm: Vec<usize> = (1..=6).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabel(&perm).unwrap();
        let mut inverse = vec![0usize; 6];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p - 1] = i + 1;
        }
        prop_assert_eq!(h.relabel(&inverse).unwrap(), g.clone());
        let mut dg: Vec<_> = (1..=6).map(|v| g.degree(v)).collect();
        let mut dh: Vec<_> = (1..=6).map(|v| h.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        prop_assert_eq!(dg, dh);
    }

    #[test]
    fn random_trees_validate_and_normalize_monotonically(graph_idx in 0usize..21, seed in 0u64..50) {
        let graphs = connected_patterns(5);
        let g = &graphs[graph_idx % graphs.len()];
        let t = random_valid_tree(g, seed);
        prop_assert!(t.validate(g).is_ok());
        let m = t.metrics(g);
        prop_assert!(m.product_depth <= m.cost);
        let norm = t.normalize_noncore(g);
        prop_assert!(norm.validate(g).is_ok());
        let nm = norm.metrics(g);
        prop_assert!(nm.cost <= m.cost);
        prop_assert!(nm.product_depth <= m.product_depth);
        let elim = t.to_elimination_tree();
        prop_assert!(elim.validate(g).is_ok());
        prop_assert_eq!(elim.metrics(g).cost, m.cost);
    }

    #[test]
    fn formula_text_and_json_round_trip(f in arbitrary_formula()) {
        let text = io::formula_to_text(&f);
        prop_assert_eq!(io::formula_from_text(&text).unwrap(), f.clone());
        let json = io::formula_to_json(&f);
        prop_assert_eq!(io::formula_from_json(&json).unwrap(), f);
    }

    #[test]
    fn tree_json_round_trips_random_trees(graph_idx in 0usize..21, seed in 0u64..50) {
        let graphs = connected_patterns(5);
        let g = &graphs[graph_idx % graphs.len()];
        let t = random_valid_tree(g, seed);
        let json = io::tree_to_json(&t);
        prop_assert!(io::tree_from_json(&json).unwrap().same_structure(&t));
    }
}
