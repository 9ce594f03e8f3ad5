//! Baggy elimination trees: rooted trees of disjoint non-empty bags that
//! together partition the pattern's vertices, with every pattern edge lying
//! inside one bag or across an ancestor-descendant pair of bags.
//!
//! The two metrics that matter are *cost* (maximum root-to-leaf sum of bag
//! sizes) and *product depth* (maximum root-to-leaf node count, where a leaf
//! whose bag holds only pendant vertices is not counted).

use thiserror::Error;

use crate::graph::{PatternGraph, VertexSubset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("node {0} has an empty bag")]
    EmptyBag(usize),
    #[error("bags do not partition the vertex set: {0}")]
    NotPartition(String),
    #[error("parent links do not form a single rooted tree: {0}")]
    NotTree(String),
    #[error("edge {{{0},{1}}} joins bags that are not in an ancestor-descendant relationship")]
    EdgeUncovered(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub bag: VertexSubset,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// A rooted tree of vertex bags. Node ids are indices into the node list;
/// the root always has id 0. Construction through [`with_root`] and
/// [`add_child`] cannot produce cycles; [`from_parts`] re-checks.
///
/// [`with_root`]: BaggyEliminationTree::with_root
/// [`add_child`]: BaggyEliminationTree::add_child
/// [`from_parts`]: BaggyEliminationTree::from_parts
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaggyEliminationTree {
    nodes: Vec<TreeNode>,
}

/// Cost and product-depth of a validated tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMetrics {
    /// Maximum over root-to-leaf paths of the summed bag sizes.
    pub cost: usize,
    /// Maximum root-to-leaf node count, not counting a non-core leaf endpoint.
    pub product_depth: usize,
    /// Leaves whose bag contains some non-pendant vertex, ascending by id.
    pub core_leaves: Vec<usize>,
}

impl BaggyEliminationTree {
    pub fn with_root(bag: VertexSubset) -> Self {
        BaggyEliminationTree {
            nodes: vec![TreeNode {
                bag,
                parent: None,
                children: Vec::new(),
            }],
        }
    }

    /// Appends a child bag under `parent` and returns the new node's id.
    pub fn add_child(&mut self, parent: usize, bag: VertexSubset) -> usize {
        assert!(parent < self.nodes.len(), "parent id out of range");
        let id = self.nodes.len();
        self.nodes.push(TreeNode {
            bag,
            parent: Some(parent),
            children: Vec::new(),
        });
        self.nodes[parent].children.push(id);
        id
    }

    /// Rebuilds a tree from `(bag, parent)` pairs, checking that the links
    /// form exactly one rooted tree.
    pub fn from_parts(parts: Vec<(VertexSubset, Option<usize>)>) -> Result<Self, TreeError> {
        if parts.is_empty() {
            return Err(TreeError::NotTree("no nodes".into()));
        }
        let mut nodes: Vec<TreeNode> = parts
            .iter()
            .map(|&(bag, parent)| TreeNode {
                bag,
                parent,
                children: Vec::new(),
            })
            .collect();
        let mut roots = Vec::new();
        for (id, node) in nodes.iter().enumerate() {
            match node.parent {
                None => roots.push(id),
                Some(p) if p < parts.len() => {}
                Some(p) => {
                    return Err(TreeError::NotTree(format!(
                        "node {id} points at missing parent {p}"
                    )))
                }
            }
        }
        let [root] = roots[..] else {
            return Err(TreeError::NotTree(format!("found {} roots", roots.len())));
        };
        for id in 0..nodes.len() {
            if let Some(p) = nodes[id].parent {
                let child_list = &mut nodes[p].children;
                child_list.push(id);
            }
        }
        // Reachability from the root doubles as the cycle check.
        let mut seen = vec![false; nodes.len()];
        let mut stack = vec![root];
        let mut count = 0;
        while let Some(id) = stack.pop() {
            if seen[id] {
                return Err(TreeError::NotTree("cycle in parent links".into()));
            }
            seen[id] = true;
            count += 1;
            stack.extend(nodes[id].children.iter().copied());
        }
        if count != nodes.len() {
            return Err(TreeError::NotTree("unreachable nodes".into()));
        }
        let tree = BaggyEliminationTree { nodes };
        Ok(tree.renumbered(root))
    }

    /// Renumbers nodes in preorder so that the root becomes id 0.
    fn renumbered(&self, root: usize) -> Self {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            order.push(id);
            for &c in self.nodes[id].children.iter().rev() {
                stack.push(c);
            }
        }
        let mut new_id = vec![0usize; self.nodes.len()];
        for (fresh, &old) in order.iter().enumerate() {
            new_id[old] = fresh;
        }
        let nodes = order
            .iter()
            .map(|&old| TreeNode {
                bag: self.nodes[old].bag,
                parent: self.nodes[old].parent.map(|p| new_id[p]),
                children: self.nodes[old].children.iter().map(|&c| new_id[c]).collect(),
            })
            .collect();
        BaggyEliminationTree { nodes }
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn bag(&self, id: usize) -> VertexSubset {
        self.nodes[id].bag
    }

    pub fn is_leaf(&self, id: usize) -> bool {
        self.nodes[id].children.is_empty()
    }

    /// Node ids in preorder (root first, children in stored order).
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root()];
        while let Some(id) = stack.pop() {
            order.push(id);
            for &c in self.nodes[id].children.iter().rev() {
                stack.push(c);
            }
        }
        order
    }

    /// Structural equality: same bags in the same child order, ignoring how
    /// node ids happen to be assigned.
    pub fn same_structure(&self, other: &BaggyEliminationTree) -> bool {
        fn eq(a: &BaggyEliminationTree, x: usize, b: &BaggyEliminationTree, y: usize) -> bool {
            a.bag(x) == b.bag(y)
                && a.node(x).children.len() == b.node(y).children.len()
                && a.node(x)
                    .children
                    .iter()
                    .zip(&b.node(y).children)
                    .all(|(&cx, &cy)| eq(a, cx, b, cy))
        }
        eq(self, self.root(), other, other.root())
    }

    /// Union of the bags of `id`'s proper ancestors.
    pub fn ancestor_union(&self, id: usize) -> VertexSubset {
        let mut acc = VertexSubset::EMPTY;
        let mut cur = self.nodes[id].parent;
        while let Some(p) = cur {
            acc = acc.union(self.nodes[p].bag);
            cur = self.nodes[p].parent;
        }
        acc
    }

    /// Union of the bags in the subtree rooted at `id` (inclusive).
    pub fn subtree_union(&self, id: usize) -> VertexSubset {
        let mut acc = VertexSubset::EMPTY;
        let mut stack = vec![id];
        while let Some(t) = stack.pop() {
            acc = acc.union(self.nodes[t].bag);
            stack.extend(self.nodes[t].children.iter().copied());
        }
        acc
    }

    /// Checks the structural invariants against `g`: non-empty bags, bags
    /// partition `V(H)`, and every edge of `H` lies within a bag or across
    /// an ancestor-descendant pair.
    pub fn validate(&self, g: &PatternGraph) -> Result<(), TreeError> {
        let full = g.vertex_set();
        let mut union = VertexSubset::EMPTY;
        for (id, node) in self.nodes.iter().enumerate() {
            if node.bag.is_empty() {
                return Err(TreeError::EmptyBag(id));
            }
            if !node.bag.is_subset_of(full) {
                return Err(TreeError::NotPartition(format!(
                    "bag {} contains vertices outside [k]",
                    node.bag
                )));
            }
            if !union.is_disjoint(node.bag) {
                return Err(TreeError::NotPartition(format!(
                    "vertex {} appears in two bags",
                    union.intersection(node.bag).min_vertex().unwrap()
                )));
            }
            union = union.union(node.bag);
        }
        if union != full {
            return Err(TreeError::NotPartition(format!(
                "vertices {} are missing from every bag",
                full.difference(union)
            )));
        }
        // Partition established: each vertex names a unique node.
        let mut home = vec![0usize; g.vertex_count() + 1];
        for (id, node) in self.nodes.iter().enumerate() {
            for v in node.bag.iter() {
                home[v] = id;
            }
        }
        let depth = self.depths();
        for &(u, v) in g.edges() {
            let (mut a, mut b) = (home[u], home[v]);
            if a == b {
                continue;
            }
            // Lift the deeper endpoint; covered iff one node is an ancestor
            // of the other.
            while depth[a] > depth[b] {
                a = self.nodes[a].parent.unwrap();
            }
            while depth[b] > depth[a] {
                b = self.nodes[b].parent.unwrap();
            }
            if a != b {
                return Err(TreeError::EdgeUncovered(u, v));
            }
        }
        Ok(())
    }

    fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.nodes.len()];
        for id in self.preorder() {
            if let Some(p) = self.nodes[id].parent {
                depth[id] = depth[p] + 1;
            }
        }
        depth
    }

    /// Computes cost, product depth and core leaves. Call only on trees that
    /// pass [`validate`](Self::validate).
    pub fn metrics(&self, g: &PatternGraph) -> TreeMetrics {
        let pendants = g.pendant_vertices();
        let mut cost = 0usize;
        let mut product_depth = 0usize;
        let mut core_leaves = Vec::new();
        // (id, bag-size sum, node count) along the path from the root.
        let mut stack = vec![(self.root(), 0usize, 0usize)];
        while let Some((id, sum, count)) = stack.pop() {
            let node = &self.nodes[id];
            let sum = sum + node.bag.len();
            let count = count + 1;
            if node.children.is_empty() {
                let core = !node.bag.is_subset_of(pendants);
                if core {
                    core_leaves.push(id);
                }
                cost = cost.max(sum);
                product_depth = product_depth.max(if core { count } else { count - 1 });
            } else {
                for &c in node.children.iter().rev() {
                    stack.push((c, sum, count));
                }
            }
        }
        core_leaves.sort_unstable();
        TreeMetrics {
            cost,
            product_depth,
            core_leaves,
        }
    }

    /// Splits every non-root leaf whose bag holds two or more pendant
    /// vertices into singleton sibling leaves. Cost and product depth never
    /// increase, and the result stays valid.
    pub fn normalize_noncore(&self, g: &PatternGraph) -> BaggyEliminationTree {
        let pendants = g.pendant_vertices();
        let mut out = BaggyEliminationTree::with_root(self.nodes[self.root()].bag);
        let mut stack: Vec<(usize, usize)> = self.nodes[self.root()]
            .children
            .iter()
            .rev()
            .map(|&c| (c, 0usize))
            .collect();
        while let Some((id, parent_out)) = stack.pop() {
            let node = &self.nodes[id];
            let split = node.children.is_empty()
                && node.bag.len() >= 2
                && node.bag.is_subset_of(pendants);
            if split {
                for v in node.bag.iter() {
                    out.add_child(parent_out, VertexSubset::singleton(v));
                }
            } else {
                let fresh = out.add_child(parent_out, node.bag);
                for &c in node.children.iter().rev() {
                    stack.push((c, fresh));
                }
            }
        }
        out
    }

    /// Replaces every bag of size `m >= 2` by a chain of `m` singleton
    /// nodes in ascending label order; children of the original node hang
    /// off the deepest chain node. Cost is preserved exactly.
    pub fn to_elimination_tree(&self) -> BaggyEliminationTree {
        let root_labels = self.nodes[self.root()].bag.to_vec();
        let mut out = BaggyEliminationTree::with_root(VertexSubset::singleton(root_labels[0]));
        let mut tail = 0usize;
        for &v in &root_labels[1..] {
            tail = out.add_child(tail, VertexSubset::singleton(v));
        }
        let mut stack: Vec<(usize, usize)> = self.nodes[self.root()]
            .children
            .iter()
            .rev()
            .map(|&c| (c, tail))
            .collect();
        while let Some((id, parent_out)) = stack.pop() {
            let labels = self.nodes[id].bag.to_vec();
            let mut cur = out.add_child(parent_out, VertexSubset::singleton(labels[0]));
            for &v in &labels[1..] {
                cur = out.add_child(cur, VertexSubset::singleton(v));
            }
            for &c in self.nodes[id].children.iter().rev() {
                stack.push((c, cur));
            }
        }
        out
    }
}

/// The depth-two tree for `P_7`: root bag `{2,4,6}` over the four singleton
/// leaves `{1}`, `{3}`, `{5}`, `{7}`. Used as a fixture throughout the
/// crate's tests and examples.
pub fn path7_depth2_tree() -> BaggyEliminationTree {
    let mut t = BaggyEliminationTree::with_root([2, 4, 6].into_iter().collect());
    for v in [1, 3, 5, 7] {
        t.add_child(0, VertexSubset::singleton(v));
    }
    t
}
