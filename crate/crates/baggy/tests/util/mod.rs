//! Shared helpers for the integration suites: exhaustive enumeration of the
//! admissible pattern graphs on a few vertices, up to isomorphism.
#![allow(dead_code)] // each test binary uses its own subset of these helpers

use std::collections::HashSet;

use baggy::{FormulaIR, PatternGraph, VariableId};

/// All connected graphs with at least two edges on exactly `k` labeled
/// vertices, one representative per isomorphism class, in a deterministic
/// order (ascending lexicographic edge bitmask of the representative).
pub fn connected_patterns(k: usize) -> Vec<PatternGraph> {
    let pairs: Vec<(usize, usize)> = (1..=k)
        .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
        .collect();
    let pair_index = |a: usize, b: usize| -> usize {
        pairs
            .iter()
            .position(|&(i, j)| (i, j) == (a.min(b), a.max(b)))
            .unwrap()
    };
    let perms = permutations(k);
    let mut covered: HashSet<u32> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        if covered.contains(&mask) || mask.count_ones() < 2 {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask & (1 << idx) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = PatternGraph::new(k, edges.iter().copied()).unwrap();
        if g.validate().is_err() {
            continue;
        }
        for perm in &perms {
            let mut permuted = 0u32;
            for &(a, b) in &edges {
                permuted |= 1 << pair_index(perm[a - 1], perm[b - 1]);
            }
            covered.insert(permuted);
        }
        out.push(g);
    }
    out
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=k).collect();
    fn heap(n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            heap(n - 1, current, out);
            if n.is_multiple_of(2) {
                current.swap(i, n - 1);
            } else {
                current.swap(0, n - 1);
            }
        }
    }
    heap(k, &mut current, &mut out);
    out
}

/// Deletes the first variable leaf in preorder, yielding a formula that
/// computes a strictly smaller polynomial. Returns `false` when no variable
/// leaf exists.
pub fn delete_first_var_leaf(f: &mut FormulaIR<VariableId>) -> bool {
    match f {
        FormulaIR::Sum(cs) | FormulaIR::Product(cs) => {
            for (i, c) in cs.iter_mut().enumerate() {
                if matches!(c, FormulaIR::Var(_)) {
                    cs.remove(i);
                    return true;
                }
                if delete_first_var_leaf(c) {
                    return true;
                }
            }
            false
        }
        _ => false,
    }
}
