//! Monotone arithmetic formulas as explicit gate trees, plus the compiler
//! that turns a pattern graph and a baggy elimination tree into a formula
//! for the colored isomorphism polynomial.
//!
//! Gate-emission rules (fixed so that compiled output is byte-stable and the
//! product-depth bound is provable):
//! * every tree node becomes a sum of exactly `n^|bag|` summands, one per
//!   assignment of the bag's vertices, enumerated in odometer order over the
//!   bag sorted ascending;
//! * each summand multiplies, in order: the variables for edges inside the
//!   bag (sorted), the variables for edges to ancestor bags (sorted), then
//!   the children's formulas in tree order;
//! * a summand with one factor emits that factor directly, a summand with
//!   none emits `1`, so no product gate ever has fewer than two children.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;
use thiserror::Error;

use crate::graph::PatternGraph;
use crate::tree::{BaggyEliminationTree, TreeError};

/// Default cap on materialized formula size (edges).
pub const DEFAULT_SIZE_CAP: u64 = 100_000_000;

/// A variable of the colored isomorphism polynomial: the edge of `H` with
/// index `edge_index` (lexicographic order, smaller endpoint first), with
/// host values `u` for the smaller-colored endpoint and `v` for the larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    pub edge_index: usize,
    pub u: usize,
    pub v: usize,
}

impl VariableId {
    /// Position in the dense variable universe of size `|E(H)| * n^2`.
    pub fn flat_index(&self, n: usize) -> usize {
        self.edge_index * n * n + (self.u - 1) * n + (self.v - 1)
    }
}

/// A variable of the homomorphism polynomial: an unordered host pair, with
/// `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HostEdgeId {
    pub u: usize,
    pub v: usize,
}

impl HostEdgeId {
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        HostEdgeId {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// Position in the dense universe of the `C(n,2)` host pairs.
    pub fn flat_index(&self, n: usize) -> usize {
        (self.u - 1) * (2 * n - self.u) / 2 + (self.v - self.u - 1)
    }
}

/// A rooted monotone formula over variables of type `V`. The tree itself is
/// the value; `size` is its edge count and product depth the maximum number
/// of product gates on a root-to-leaf path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaIR<V> {
    Sum(Vec<FormulaIR<V>>),
    Product(Vec<FormulaIR<V>>),
    Var(V),
    Const(Ratio<u64>),
}

pub type ColIsoFormula = FormulaIR<VariableId>;
pub type HomFormula = FormulaIR<HostEdgeId>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GateCounts {
    pub sum: u64,
    pub product: u64,
    pub var: u64,
    pub constant: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaMetrics {
    /// Number of edges of the gate tree.
    pub size: u64,
    /// Maximum number of product gates on any root-to-leaf path.
    pub product_depth: usize,
    pub gate_counts: GateCounts,
}

impl<V> FormulaIR<V> {
    /// Exact size, product depth and gate counts by traversal.
    pub fn measure(&self) -> FormulaMetrics {
        let mut counts = GateCounts::default();
        let mut size = 0u64;
        let mut product_depth = 0usize;
        // (gate, products seen above it)
        let mut stack: Vec<(&FormulaIR<V>, usize)> = vec![(self, 0)];
        while let Some((gate, above)) = stack.pop() {
            match gate {
                FormulaIR::Sum(children) => {
                    counts.sum += 1;
                    size += children.len() as u64;
                    stack.extend(children.iter().map(|c| (c, above)));
                }
                FormulaIR::Product(children) => {
                    counts.product += 1;
                    size += children.len() as u64;
                    stack.extend(children.iter().map(|c| (c, above + 1)));
                }
                FormulaIR::Var(_) => {
                    counts.var += 1;
                    product_depth = product_depth.max(above);
                }
                FormulaIR::Const(_) => {
                    counts.constant += 1;
                    product_depth = product_depth.max(above);
                }
            }
        }
        FormulaMetrics {
            size,
            product_depth,
            gate_counts: counts,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompileError {
    #[error("predicted formula size {predicted} exceeds the cap of {cap} edges")]
    SizeLimit { predicted: BigUint, cap: u64 },
    #[error("invalid tree: {0}")]
    InvalidTree(#[from] TreeError),
    #[error("host size n must be at least 1")]
    InvalidHostSize,
}

/// Compiles `(g, t, n)` into a formula for the colored isomorphism
/// polynomial, with the default materialization cap.
pub fn compile(
    g: &PatternGraph,
    t: &BaggyEliminationTree,
    n: usize,
) -> Result<ColIsoFormula, CompileError> {
    compile_with_cap(g, t, n, DEFAULT_SIZE_CAP)
}

pub fn compile_with_cap(
    g: &PatternGraph,
    t: &BaggyEliminationTree,
    n: usize,
    cap: u64,
) -> Result<ColIsoFormula, CompileError> {
    if n == 0 {
        return Err(CompileError::InvalidHostSize);
    }
    t.validate(g)?;
    let t = t.normalize_noncore(g);
    let predicted = predicted_size_normalized(g, &t, n);
    if predicted > BigUint::from(cap) {
        return Err(CompileError::SizeLimit { predicted, cap });
    }
    let mut host = vec![0usize; g.vertex_count() + 1];
    Ok(build(g, &t, t.root(), n, &mut host))
}

/// One summand's factor plan at a tree node: edges inside the bag, edges to
/// ancestor bags, then children. The plan is assignment-independent.
struct NodePlan {
    bag: Vec<usize>,
    inner_edges: Vec<(usize, usize, usize)>, // (edge_index, i, j)
    ancestor_edges: Vec<(usize, usize, usize)>,
}

fn node_plan(g: &PatternGraph, t: &BaggyEliminationTree, id: usize) -> NodePlan {
    let bag = t.bag(id);
    let above = t.ancestor_union(id);
    let mut inner_edges = Vec::new();
    let mut ancestor_edges = Vec::new();
    for (idx, &(i, j)) in g.edges().iter().enumerate() {
        if bag.contains(i) && bag.contains(j) {
            inner_edges.push((idx, i, j));
        } else if (bag.contains(i) && above.contains(j))
            || (bag.contains(j) && above.contains(i))
        {
            ancestor_edges.push((idx, i, j));
        }
    }
    NodePlan {
        bag: bag.to_vec(),
        inner_edges,
        ancestor_edges,
    }
}

fn build(
    g: &PatternGraph,
    t: &BaggyEliminationTree,
    id: usize,
    n: usize,
    host: &mut Vec<usize>,
) -> ColIsoFormula {
    let plan = node_plan(g, t, id);
    let bag_size = plan.bag.len();
    let mut summands = Vec::with_capacity(n.pow(bag_size as u32));
    let mut values = vec![1usize; bag_size];
    loop {
        for (slot, &v) in plan.bag.iter().enumerate() {
            host[v] = values[slot];
        }
        let mut factors: Vec<ColIsoFormula> = Vec::new();
        for &(idx, i, j) in plan.inner_edges.iter().chain(&plan.ancestor_edges) {
            factors.push(FormulaIR::Var(VariableId {
                edge_index: idx,
                u: host[i],
                v: host[j],
            }));
        }
        for &child in &t.node(id).children {
            factors.push(build(g, t, child, n, host));
        }
        summands.push(match factors.len() {
            0 => FormulaIR::Const(Ratio::one()),
            1 => factors.pop().unwrap(),
            _ => FormulaIR::Product(factors),
        });
        if !crate::util::advance_odometer(&mut values, n) {
            break;
        }
    }
    for &v in &plan.bag {
        host[v] = 0;
    }
    FormulaIR::Sum(summands)
}

/// Exact edge count of `compile(g, t, n)` computed arithmetically, honoring
/// the same normalization and gate-emission rules.
pub fn predicted_size(g: &PatternGraph, t: &BaggyEliminationTree, n: usize) -> BigUint {
    predicted_size_normalized(g, &t.normalize_noncore(g), n)
}

fn predicted_size_normalized(
    g: &PatternGraph,
    t: &BaggyEliminationTree,
    n: usize,
) -> BigUint {
    size_below(g, t, t.root(), n)
}

fn size_below(g: &PatternGraph, t: &BaggyEliminationTree, id: usize, n: usize) -> BigUint {
    let plan = node_plan(g, t, id);
    let children = &t.node(id).children;
    let factors = plan.inner_edges.len() + plan.ancestor_edges.len() + children.len();
    // per summand: the sum's edge to it, the product's fan-out when there
    // are two or more factors, and the children's own subtrees
    let mut per_summand = BigUint::one();
    if factors >= 2 {
        per_summand += BigUint::from(factors);
    }
    for &child in children {
        per_summand += size_below(g, t, child, n);
    }
    BigUint::from(n).pow(plan.bag.len() as u32) * per_summand
}

/// Substitutes each colored-isomorphism variable by the matching host-edge
/// variable, sending diagonal assignments (`u = v`) to zero. The result
/// computes the homomorphism polynomial.
pub fn hom_project(f: &ColIsoFormula) -> HomFormula {
    match f {
        FormulaIR::Sum(cs) => FormulaIR::Sum(cs.iter().map(hom_project).collect()),
        FormulaIR::Product(cs) => FormulaIR::Product(cs.iter().map(hom_project).collect()),
        FormulaIR::Var(var) => {
            if var.u == var.v {
                FormulaIR::Const(Ratio::from_integer(0))
            } else {
                FormulaIR::Var(HostEdgeId::new(var.u, var.v))
            }
        }
        FormulaIR::Const(c) => FormulaIR::Const(*c),
    }
}
