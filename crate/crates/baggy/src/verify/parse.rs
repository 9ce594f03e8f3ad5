//! Parse trees of monotone formulas and the lifting that turns a parse tree
//! back into a baggy elimination tree.
//!
//! A parse tree picks one child at every sum gate and keeps all children of
//! every product gate; it computes one monomial. Parse trees are stored in
//! plus-contracted form: sum gates are removed and their chosen child is
//! spliced into the parent, so the remaining branch nodes are exactly the
//! product gates of the walk.

use num_rational::Ratio;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VerifyError;
use crate::formula::{ColIsoFormula, FormulaIR, VariableId};
use crate::graph::{PatternGraph, VertexSubset};
use crate::tree::BaggyEliminationTree;

const MAX_RESAMPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PtKind {
    /// A product gate of the formula.
    Branch,
    Var(VariableId),
    /// A nonzero constant leaf.
    Constant(Ratio<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtNode {
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub kind: PtKind,
}

/// A plus-contracted parse tree; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseTree {
    nodes: Vec<PtNode>,
}

impl ParseTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, id: usize) -> &PtNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[PtNode] {
        &self.nodes
    }

    /// The computed monomial: the multiset of variable leaves, sorted.
    pub fn monomial(&self) -> Vec<VariableId> {
        let mut vars: Vec<VariableId> = self
            .nodes
            .iter()
            .filter_map(|n| match n.kind {
                PtKind::Var(v) => Some(v),
                _ => None,
            })
            .collect();
        vars.sort();
        vars
    }

    fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.nodes.len()];
        for (id, node) in self.nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                depth[id] = depth[p] + 1;
            }
        }
        depth
    }
}

/// Samples a parse tree by choosing uniformly at every sum gate, resampling
/// whenever the walk runs into a zero constant.
pub fn sample_parse_tree(f: &ColIsoFormula, seed: u64) -> Result<ParseTree, VerifyError> {
    if let FormulaIR::Const(_) = f {
        return Err(VerifyError::Degenerate(
            "the formula is a single constant".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RESAMPLES {
        let mut nodes = Vec::new();
        if walk(f, None, &mut nodes, &mut rng).is_some() {
            return Ok(ParseTree { nodes });
        }
    }
    Err(VerifyError::Degenerate(format!(
        "no parse tree avoided a zero constant in {MAX_RESAMPLES} attempts"
    )))
}

/// Descends through the formula; returns `None` when the walk hits a zero
/// constant, which aborts the attempt. Parents are created before children,
/// so node ids are in preorder and the first node is the root.
fn walk(
    gate: &ColIsoFormula,
    parent: Option<usize>,
    nodes: &mut Vec<PtNode>,
    rng: &mut ChaCha8Rng,
) -> Option<usize> {
    match gate {
        FormulaIR::Sum(cs) => {
            let pick = rng.gen_range(0..cs.len());
            walk(&cs[pick], parent, nodes, rng)
        }
        FormulaIR::Product(cs) => {
            let id = push(nodes, parent, PtKind::Branch);
            for c in cs {
                let child = walk(c, Some(id), nodes, rng)?;
                nodes[id].children.push(child);
            }
            Some(id)
        }
        FormulaIR::Var(v) => Some(push(nodes, parent, PtKind::Var(*v))),
        FormulaIR::Const(c) => {
            if c.is_zero() {
                None
            } else {
                Some(push(nodes, parent, PtKind::Constant(*c)))
            }
        }
    }
}

fn push(nodes: &mut Vec<PtNode>, parent: Option<usize>, kind: PtKind) -> usize {
    let id = nodes.len();
    nodes.push(PtNode {
        parent,
        children: Vec::new(),
        kind,
    });
    id
}

/// Lifts a parse tree back to a baggy elimination tree: every pattern vertex
/// goes into the bag at the least common ancestor of the leaves mentioning
/// it, empty non-root nodes are removed with their children reattached, and
/// an empty root with a single child is replaced by that child.
pub fn lift(pt: &ParseTree, g: &PatternGraph) -> Result<BaggyEliminationTree, VerifyError> {
    let k = g.vertex_count();
    let depth = pt.depths();

    // Host value and leaf set per color, with consistency checking.
    let mut host = vec![None::<usize>; k + 1];
    let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    for (id, node) in pt.nodes().iter().enumerate() {
        if let PtKind::Var(var) = node.kind {
            let (i, j) = g.edges()[var.edge_index];
            for (color, value) in [(i, var.u), (j, var.v)] {
                match host[color] {
                    None => host[color] = Some(value),
                    Some(prev) if prev == value => {}
                    Some(_) => return Err(VerifyError::InconsistentMonomial(color)),
                }
                leaves[color].push(id);
            }
        }
    }

    let mut bags = vec![VertexSubset::EMPTY; pt.len()];
    for (color, mentions) in leaves.iter().enumerate().skip(1) {
        if mentions.is_empty() {
            return Err(VerifyError::IncompleteMonomial(color));
        }
        let anchor = lca_of(mentions, &depth, pt);
        bags[anchor].insert(color);
    }

    // Keep only nodes with non-empty bags; link each to its nearest
    // non-empty proper ancestor.
    let keep: Vec<usize> = (0..pt.len()).filter(|&id| !bags[id].is_empty()).collect();
    let mut slot = vec![usize::MAX; pt.len()];
    for (fresh, &id) in keep.iter().enumerate() {
        slot[id] = fresh;
    }
    let mut parts = Vec::with_capacity(keep.len());
    let mut roots = 0usize;
    for &id in &keep {
        let mut up = pt.node(id).parent;
        while let Some(p) = up {
            if !bags[p].is_empty() {
                break;
            }
            up = pt.node(p).parent;
        }
        let parent = up.map(|p| slot[p]);
        if parent.is_none() {
            roots += 1;
        }
        parts.push((bags[id], parent));
    }
    if roots != 1 {
        return Err(VerifyError::MalformedParseTree(format!(
            "{roots} disjoint lifted roots"
        )));
    }
    BaggyEliminationTree::from_parts(parts)
        .map_err(|e| VerifyError::MalformedParseTree(e.to_string()))
}

fn lca_of(ids: &[usize], depth: &[usize], pt: &ParseTree) -> usize {
    let mut acc = ids[0];
    for &id in &ids[1..] {
        acc = lca_pair(acc, id, depth, pt);
    }
    acc
}

fn lca_pair(mut a: usize, mut b: usize, depth: &[usize], pt: &ParseTree) -> usize {
    while depth[a] > depth[b] {
        a = pt.node(a).parent.unwrap();
    }
    while depth[b] > depth[a] {
        b = pt.node(b).parent.unwrap();
    }
    while a != b {
        a = pt.node(a).parent.unwrap();
        b = pt.node(b).parent.unwrap();
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::compile;
    use crate::graph::Family;
    use crate::tree::path7_depth2_tree;
    use crate::verify::{coliso_monomial_map, DEFAULT_MONOMIAL_CAP};

    #[test]
    fn k3_at_n1_has_a_unique_parse_tree() {
        let g = Family::Complete(3).generate().unwrap();
        let t = BaggyEliminationTree::with_root([1, 2, 3].into_iter().collect());
        let f = compile(&g, &t, 1).unwrap();
        let pt = sample_parse_tree(&f, 0).unwrap();
        let monomial = pt.monomial();
        assert_eq!(monomial.len(), 3);
        assert!(monomial
            .iter()
            .enumerate()
            .all(|(idx, v)| v.edge_index == idx && v.u == 1 && v.v == 1));

        let lifted = lift(&pt, &g).unwrap();
        lifted.validate(&g).unwrap();
        assert_eq!(lifted.len(), 1);
        assert_eq!(lifted.bag(0).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn sampled_monomials_belong_to_the_polynomial() {
        let g = Family::Path(3).generate().unwrap();
        let mut t = BaggyEliminationTree::with_root(VertexSubset::singleton(2));
        t.add_child(0, VertexSubset::singleton(1));
        t.add_child(0, VertexSubset::singleton(3));
        let f = compile(&g, &t, 2).unwrap();
        let oracle = coliso_monomial_map(&g, 2).unwrap();
        for seed in 0..20 {
            let pt = sample_parse_tree(&f, seed).unwrap();
            assert_eq!(oracle.coefficient(&pt.monomial()), 1);
        }
    }

    #[test]
    fn p7_parse_trees_are_multilinear_per_edge() {
        let g = Family::Path(7).generate().unwrap();
        let f = compile(&g, &path7_depth2_tree(), 2).unwrap();
        for seed in 0..10 {
            let pt = sample_parse_tree(&f, seed).unwrap();
            let monomial = pt.monomial();
            assert_eq!(monomial.len(), 6);
            let mut edges: Vec<usize> = monomial.iter().map(|v| v.edge_index).collect();
            edges.dedup();
            assert_eq!(edges, vec![0, 1, 2, 3, 4, 5]);
        }
    }

    #[test]
    fn lifting_p7_recovers_the_depth_two_tree() {
        let g = Family::Path(7).generate().unwrap();
        let f = compile(&g, &path7_depth2_tree(), 3).unwrap();
        for seed in 0..25 {
            let pt = sample_parse_tree(&f, seed).unwrap();
            let lifted = lift(&pt, &g).unwrap();
            lifted.validate(&g).unwrap();
            assert_eq!(lifted.bag(lifted.root()).to_vec(), vec![2, 4, 6]);
            let m = lifted.metrics(&g);
            assert_eq!(m.product_depth, 2);
            assert_eq!(m.cost, 4);
        }
    }

    #[test]
    fn inconsistent_monomial_detected() {
        // Hand-build a branch whose two leaves give color 2 different hosts.
        let g = Family::Path(3).generate().unwrap();
        let nodes = vec![
            PtNode {
                parent: None,
                children: vec![1, 2],
                kind: PtKind::Branch,
            },
            PtNode {
                parent: Some(0),
                children: vec![],
                kind: PtKind::Var(VariableId {
                    edge_index: 0,
                    u: 1,
                    v: 1,
                }),
            },
            PtNode {
                parent: Some(0),
                children: vec![],
                kind: PtKind::Var(VariableId {
                    edge_index: 1,
                    u: 2,
                    v: 1,
                }),
            },
        ];
        let pt = ParseTree { nodes };
        assert_eq!(lift(&pt, &g), Err(VerifyError::InconsistentMonomial(2)));
    }

    #[test]
    fn single_constant_formula_is_degenerate() {
        let f: ColIsoFormula = FormulaIR::Const(Ratio::from_integer(1));
        assert!(matches!(
            sample_parse_tree(&f, 0),
            Err(VerifyError::Degenerate(_))
        ));
    }

    #[test]
    fn expansion_membership_of_sampled_trees() {
        let g = Family::Path(3).generate().unwrap();
        let mut t = BaggyEliminationTree::with_root(VertexSubset::singleton(2));
        t.add_child(0, VertexSubset::singleton(1));
        t.add_child(0, VertexSubset::singleton(3));
        let f = compile(&g, &t, 2).unwrap();
        let expanded = crate::verify::expand(&f, DEFAULT_MONOMIAL_CAP).unwrap();
        let pt = sample_parse_tree(&f, 11).unwrap();
        assert_eq!(expanded.coefficient(&pt.monomial()), 1);
    }
}
