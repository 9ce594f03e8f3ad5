//! Exact computation of the minimum cost of a bounded product-depth baggy
//! elimination tree, written λ_Δ(H) in the crate's documentation.
//!
//! The main solver is a memoized recursion over (connected vertex set,
//! remaining depth budget):
//!
//! ```text
//! rec({v}, d) = 1                        if v is pendant in H (any d >= 0)
//! rec(C, 0)   = infeasible               otherwise
//! rec(C, d)   = min over non-empty S ⊆ C of
//!                 |S| + max(0, max_i rec(C_i, d - 1))
//! ```
//!
//! where the `C_i` are the connected components of `C ∖ S`. Restricting each
//! subtree to a single component never hurts: dropping the other components
//! from a subtree cannot increase any path cost, cannot turn a non-core leaf
//! core, and keeps every edge covered, since all cross-component edges go
//! through ancestors.
//!
//! `lambda_brute` is the independent oracle: it enumerates every partition
//! of the vertex set into bags and every rooted tree over the parts, keeping
//! whatever validates. It is deliberately unrelated to the recursion above.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{GraphError, PatternGraph, VertexSubset};
use crate::tree::{BaggyEliminationTree, TreeMetrics};

/// Vertex cap for the memoized solver (the subset work grows as ~3^k).
pub const DEFAULT_VERTEX_CAP: usize = 20;
/// Vertex cap for the exhaustive oracle (Bell numbers times tree shapes).
pub const BRUTE_VERTEX_CAP: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("pattern has {k} vertices, above the cap of {cap} for this solver")]
    TooLarge { k: usize, cap: usize },
    #[error("product depth budget must be at least 1")]
    InvalidDelta,
    #[error(transparent)]
    InvalidGraph(#[from] GraphError),
}

/// Search counters for a solver run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub memo_entries: usize,
    pub subproblems: usize,
}

/// An exact optimum with a witness tree achieving it.
#[derive(Debug, Clone)]
pub struct LambdaResult {
    pub value: usize,
    pub witness: BaggyEliminationTree,
    pub stats: SolveStats,
}

impl LambdaResult {
    /// Revalidates the witness against `g` and returns its metrics.
    pub fn check_witness(&self, g: &PatternGraph) -> Option<TreeMetrics> {
        self.witness.validate(g).ok()?;
        Some(self.witness.metrics(g))
    }
}

/// λ_Δ(H) with the default vertex cap.
pub fn lambda(g: &PatternGraph, delta: usize) -> Result<LambdaResult, SolveError> {
    lambda_with_cap(g, delta, DEFAULT_VERTEX_CAP)
}

pub fn lambda_with_cap(
    g: &PatternGraph,
    delta: usize,
    cap: usize,
) -> Result<LambdaResult, SolveError> {
    if delta == 0 {
        return Err(SolveError::InvalidDelta);
    }
    g.validate()?;
    let k = g.vertex_count();
    if k > cap {
        return Err(SolveError::TooLarge { k, cap });
    }
    let mut solver = LambdaSolver::new(g);
    let full = g.vertex_set();
    let value = solver
        .rec(full, delta)
        .expect("a single-bag tree is always feasible for delta >= 1");
    let witness = solver.build_witness(full, delta);
    Ok(LambdaResult {
        value,
        witness,
        stats: SolveStats {
            memo_entries: solver.memo.len(),
            subproblems: solver.expanded,
        },
    })
}

/// Classic treedepth: the singleton-bag specialization of the recursion with
/// an unbounded depth budget.
pub fn treedepth(g: &PatternGraph) -> Result<usize, SolveError> {
    treedepth_with_cap(g, DEFAULT_VERTEX_CAP)
}

pub fn treedepth_with_cap(g: &PatternGraph, cap: usize) -> Result<usize, SolveError> {
    g.validate()?;
    let k = g.vertex_count();
    if k > cap {
        return Err(SolveError::TooLarge { k, cap });
    }
    let mut memo = HashMap::new();
    Ok(treedepth_rec(g, g.vertex_set(), &mut memo))
}

fn treedepth_rec(
    g: &PatternGraph,
    comp: VertexSubset,
    memo: &mut HashMap<u128, usize>,
) -> usize {
    if comp.len() == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&comp.raw()) {
        return v;
    }
    let mut best = comp.len();
    for v in comp.iter() {
        let rest = comp.difference(VertexSubset::singleton(v));
        let mut worst = 0;
        for part in g.components(rest) {
            worst = worst.max(treedepth_rec(g, part, memo));
            if 1 + worst >= best {
                break;
            }
        }
        best = best.min(1 + worst);
    }
    memo.insert(comp.raw(), best);
    best
}

struct LambdaSolver<'a> {
    g: &'a PatternGraph,
    pendants: VertexSubset,
    memo: HashMap<(u128, usize), MemoEntry>,
    td_memo: HashMap<u128, usize>,
    expanded: usize,
}

#[derive(Clone, Copy)]
struct MemoEntry {
    value: Option<usize>,
    bag: VertexSubset,
}

impl<'a> LambdaSolver<'a> {
    fn new(g: &'a PatternGraph) -> Self {
        LambdaSolver {
            g,
            pendants: g.pendant_vertices(),
            memo: HashMap::new(),
            td_memo: HashMap::new(),
            expanded: 0,
        }
    }

    /// Minimum cost for the connected set `comp` with `budget` depth left,
    /// or `None` when infeasible. The chosen root bag is memoized alongside
    /// the value so the witness can be rebuilt afterwards.
    fn rec(&mut self, comp: VertexSubset, budget: usize) -> Option<usize> {
        // Depth beyond |comp| never helps: no path has more nodes than that.
        let budget = budget.min(comp.len());
        if comp.len() == 1 {
            let v = comp.min_vertex().unwrap();
            if self.pendants.contains(v) || budget >= 1 {
                return Some(1);
            }
            return None;
        }
        if budget == 0 {
            return None;
        }
        if let Some(entry) = self.memo.get(&(comp.raw(), budget)) {
            return entry.value;
        }
        self.expanded += 1;

        let floor = treedepth_rec(self.g, comp, &mut self.td_memo);
        let mut best: Option<usize> = None;
        let mut best_bag = VertexSubset::EMPTY;
        for bag in submasks_by_size(comp) {
            if let Some(b) = best {
                if bag.len() >= b {
                    break; // sorted by size: nothing later can improve
                }
            }
            let rest = comp.difference(bag);
            let mut worst = 0usize;
            let mut feasible = true;
            for part in self.g.components(rest) {
                // cost of any subtree is at least the treedepth of its part
                let part_floor = treedepth_rec(self.g, part, &mut self.td_memo);
                if best.is_some_and(|b| bag.len() + worst.max(part_floor) >= b) {
                    feasible = false;
                    break;
                }
                match self.rec(part, budget - 1) {
                    Some(c) => worst = worst.max(c),
                    None => {
                        feasible = false;
                        break;
                    }
                }
                if best.is_some_and(|b| bag.len() + worst >= b) {
                    feasible = false;
                    break;
                }
            }
            if !feasible {
                continue;
            }
            let value = bag.len() + worst;
            if best.is_none_or(|b| value < b) {
                best = Some(value);
                best_bag = bag;
                if value == floor {
                    break; // cannot beat the treedepth floor
                }
            }
        }
        self.memo.insert(
            (comp.raw(), budget),
            MemoEntry {
                value: best,
                bag: best_bag,
            },
        );
        best
    }

    fn build_witness(&mut self, full: VertexSubset, delta: usize) -> BaggyEliminationTree {
        let bag = self.chosen_bag(full, delta);
        let mut tree = BaggyEliminationTree::with_root(bag);
        self.attach_children(&mut tree, 0, full.difference(bag), delta - 1);
        tree
    }

    fn attach_children(
        &mut self,
        tree: &mut BaggyEliminationTree,
        parent: usize,
        rest: VertexSubset,
        budget: usize,
    ) {
        for part in self.g.components(rest) {
            let bag = self.chosen_bag(part, budget);
            let id = tree.add_child(parent, bag);
            if budget == 0 {
                debug_assert_eq!(bag, part);
                continue;
            }
            self.attach_children(tree, id, part.difference(bag), budget - 1);
        }
    }

    fn chosen_bag(&mut self, comp: VertexSubset, budget: usize) -> VertexSubset {
        let budget = budget.min(comp.len());
        if comp.len() == 1 {
            return comp;
        }
        self.rec(comp, budget);
        self.memo[&(comp.raw(), budget)].bag
    }
}

/// All non-empty submasks of `set`, sorted by size and then by the
/// lexicographic order of the ascending vertex sequence. This is the
/// tie-break order for witness bags.
fn submasks_by_size(set: VertexSubset) -> Vec<VertexSubset> {
    let mut out = Vec::with_capacity((1usize << set.len()) - 1);
    let full = set.raw();
    let mut sub = full;
    while sub != 0 {
        out.push(VertexSubset::from_raw(sub));
        sub = (sub - 1) & full;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b)));
    out
}

/// Exhaustive oracle: enumerates every partition of `V(H)` into bags and
/// every rooted tree over the parts, filtering with `validate` and
/// `metrics` only. Same contract as [`lambda`], limited to tiny patterns.
pub fn lambda_brute(g: &PatternGraph, delta: usize) -> Result<LambdaResult, SolveError> {
    if delta == 0 {
        return Err(SolveError::InvalidDelta);
    }
    g.validate()?;
    let k = g.vertex_count();
    if k > BRUTE_VERTEX_CAP {
        return Err(SolveError::TooLarge {
            k,
            cap: BRUTE_VERTEX_CAP,
        });
    }
    let mut best: Option<(usize, BaggyEliminationTree)> = None;
    let mut examined = 0usize;
    for_each_valid_tree(g, |tree, metrics| {
        examined += 1;
        if metrics.product_depth <= delta
            && best.as_ref().is_none_or(|(c, _)| metrics.cost < *c)
        {
            best = Some((metrics.cost, tree.clone()));
        }
    });
    let (value, witness) = best.expect("the single-bag tree is always valid");
    Ok(LambdaResult {
        value,
        witness,
        stats: SolveStats {
            memo_entries: 0,
            subproblems: examined,
        },
    })
}

/// Calls `f` for every valid baggy elimination tree of `g`, in a fixed
/// deterministic order. This is the enumeration behind [`lambda_brute`];
/// it is only usable on tiny patterns (the work grows with the Bell number
/// of `k` times the number of rooted tree shapes).
pub fn for_each_valid_tree(
    g: &PatternGraph,
    mut f: impl FnMut(&BaggyEliminationTree, &TreeMetrics),
) {
    let k = g.vertex_count();
    for parts in partitions(k) {
        let m = parts.len();
        if m == 1 {
            let tree = BaggyEliminationTree::with_root(parts[0]);
            if tree.validate(g).is_ok() {
                let metrics = tree.metrics(g);
                f(&tree, &metrics);
            }
            continue;
        }
        // Every rooted tree over the parts: choose a root, then a parent for
        // each remaining part by odometer.
        for root in 0..m {
            let slots: Vec<usize> = (0..m).filter(|&i| i != root).collect();
            let mut parent = vec![0usize; slots.len()];
            loop {
                if let Some(tree) = assemble(&parts, root, &slots, &parent) {
                    if tree.validate(g).is_ok() {
                        let metrics = tree.metrics(g);
                        f(&tree, &metrics);
                    }
                }
                // advance odometer
                let mut i = 0;
                loop {
                    if i == parent.len() {
                        break;
                    }
                    parent[i] += 1;
                    if parent[i] < m {
                        break;
                    }
                    parent[i] = 0;
                    i += 1;
                }
                if i == parent.len() {
                    break;
                }
            }
        }
    }
}

fn assemble(
    parts: &[VertexSubset],
    root: usize,
    slots: &[usize],
    parent: &[usize],
) -> Option<BaggyEliminationTree> {
    let m = parts.len();
    let mut links: Vec<Option<usize>> = vec![None; m];
    for (slot, &node) in slots.iter().enumerate() {
        if parent[slot] == node {
            return None; // self-parent is always a cycle
        }
        links[node] = Some(parent[slot]);
    }
    // Reject anything that is not a single tree rooted at `root`.
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (node, link) in links.iter().enumerate() {
        if let Some(p) = *link {
            children[p].push(node);
        }
    }
    let mut reached = 1usize;
    let mut stack = vec![root];
    let mut seen = vec![false; m];
    seen[root] = true;
    while let Some(id) = stack.pop() {
        for &c in &children[id] {
            if seen[c] {
                return None;
            }
            seen[c] = true;
            reached += 1;
            stack.push(c);
        }
    }
    if reached != m {
        return None;
    }
    BaggyEliminationTree::from_parts(
        (0..m).map(|i| (parts[i], links[i])).collect(),
    )
    .ok()
}

/// All partitions of `{1..k}` via restricted growth strings; parts are
/// indexed by first appearance, so the order is deterministic.
fn partitions(k: usize) -> Vec<Vec<VertexSubset>> {
    let mut out = Vec::new();
    let mut assignment = vec![0usize; k];
    fn go(
        v: usize,
        k: usize,
        max_used: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<Vec<VertexSubset>>,
    ) {
        if v == k {
            let parts_count = max_used + 1;
            let mut parts = vec![VertexSubset::EMPTY; parts_count];
            for (i, &p) in assignment.iter().enumerate() {
                parts[p].insert(i + 1);
            }
            out.push(parts);
            return;
        }
        for p in 0..=max_used + 1 {
            assignment[v] = p;
            go(v + 1, k, max_used.max(p), assignment, out);
        }
    }
    if k == 0 {
        return out;
    }
    assignment[0] = 0;
    go(1, k, 0, &mut assignment, &mut out);
    out
}
