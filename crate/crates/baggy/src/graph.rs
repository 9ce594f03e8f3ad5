//! Pattern graphs and vertex subsets.
//!
//! A pattern graph is a small simple undirected graph with vertices labeled
//! `1..=k`. Throughout the crate a pattern must be connected and have at
//! least two edges; [`PatternGraph::validate`] checks both.

use std::fmt;

use thiserror::Error;

/// Hard cap on pattern size imposed by the dense bitset representation.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph must have at least two edges")]
    TooFewEdges,
    #[error("malformed graph: {0}")]
    Malformed(String),
}

/// A set of pattern vertices, stored as a bitmask over `[k]`.
///
/// Vertex `v` occupies bit `v - 1`; iteration is always in ascending label
/// order, which keeps every downstream output deterministic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSubset(u128);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSubset(1u128 << (v - 1))
    }

    /// The full set `{1, ..., k}`.
    pub fn full(k: usize) -> Self {
        debug_assert!(k <= MAX_VERTICES);
        if k == 0 {
            VertexSubset(0)
        } else {
            VertexSubset(u128::MAX >> (128 - k))
        }
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u128 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 |= 1u128 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 &= !(1u128 << (v - 1));
    }

    pub fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSubset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Vertices in ascending label order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending vertex sequences, used for
    /// deterministic tie-breaking ({1,3} sorts before {2}).
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    pub(crate) fn raw(self) -> u128 {
        self.0
    }

    pub(crate) fn from_raw(bits: u128) -> Self {
        VertexSubset(bits)
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSubset::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A simple undirected pattern graph on vertices `1..=k`.
///
/// Edges are stored normalized (`i < j`) and sorted lexicographically; the
/// position of an edge in this order is its *edge index*, which the formula
/// modules use to identify variables.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternGraph {
    k: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSubset>,
}

impl PatternGraph {
    /// Builds a graph, rejecting loops, duplicate edges, out-of-range labels
    /// and patterns larger than [`MAX_VERTICES`].
    pub fn new(
        k: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if k > MAX_VERTICES {
            return Err(GraphError::Malformed(format!(
                "{k} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Malformed(format!("self-loop at vertex {a}")));
            }
            if !(1..=k).contains(&a) || !(1..=k).contains(&b) {
                return Err(GraphError::Malformed(format!(
                    "edge {{{a},{b}}} out of range 1..={k}"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            let dup = normalized.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(GraphError::Malformed(format!(
                "duplicate edge {{{},{}}}",
                dup.0, dup.1
            )));
        }
        let mut adj = vec![VertexSubset::EMPTY; k + 1];
        for &(a, b) in &normalized {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(PatternGraph {
            k,
            edges: normalized,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of `{a,b}` in the lexicographic edge order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> VertexSubset {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSubset {
        VertexSubset::full(self.k)
    }

    /// Checks the standing assumptions: simple (by construction), connected,
    /// and more than one edge.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.edges.len() < 2 {
            return Err(GraphError::TooFewEdges);
        }
        if self.components(self.vertex_set()).len() != 1 {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> VertexSubset {
        (1..=self.k).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Connected components of the subgraph induced by `within`, in
    /// ascending order of their minimum vertex.
    pub fn components(&self, within: VertexSubset) -> Vec<VertexSubset> {
        let mut remaining = within.intersection(self.vertex_set());
        let mut out = Vec::new();
        while let Some(seed) = remaining.min_vertex() {
            let mut comp = VertexSubset::singleton(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSubset::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v].intersection(remaining));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Applies a relabeling: edge `{i,j}` becomes `{perm[i-1], perm[j-1]}`.
    pub fn relabel(&self, perm: &[usize]) -> Result<PatternGraph, GraphError> {
        if perm.len() != self.k {
            return Err(GraphError::Malformed(format!(
                "permutation has length {} but the graph has {} vertices",
                perm.len(),
                self.k
            )));
        }
        let mut seen = VertexSubset::EMPTY;
        for &p in perm {
            if !(1..=self.k).contains(&p) || seen.contains(p) {
                return Err(GraphError::Malformed(
                    "permutation is not a bijection on [k]".into(),
                ));
            }
            seen.insert(p);
        }
        PatternGraph::new(
            self.k,
            self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])),
        )
    }
}

impl fmt::Debug for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternGraph(k={}, edges={:?})", self.k, self.edges)
    }
}

/// The graph families used throughout the crate.
///
/// Canonical labelings:
/// * `Path(n)`: edges `{i, i+1}` for `i < n`.
/// * `Cycle(n)`: the path plus `{n, 1}`.
/// * `Star(n)`: center `1`, leaves `2..=n`.
/// * `Complete(n)`: all pairs.
/// * `Grid(r, c)`: row-major labels, vertex `(i-1)*c + j` for row `i`,
///   column `j`; horizontal and vertical edges.
/// * `FullBary { arity: b, depth }`: heap numbering, root `1`, the children
///   of vertex `v` are `b*(v-1)+2 ..= b*v+1`, so each level is labeled
///   consecutively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Grid(usize, usize),
    FullBary { arity: usize, depth: usize },
}

impl Family {
    /// Generates the family member; fails with the validation error when the
    /// parameters are degenerate (for example `Path(2)` or a depth-1 tree).
    pub fn generate(self) -> Result<PatternGraph, GraphError> {
        let (k, edges) = match self {
            Family::Path(n) => {
                check_param(n)?;
                (n, (1..n).map(|i| (i, i + 1)).collect::<Vec<_>>())
            }
            Family::Cycle(n) => {
                check_param(n)?;
                let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
                if n > 2 {
                    e.push((n, 1));
                }
                (n, e)
            }
            Family::Star(n) => {
                check_param(n)?;
                (n, (2..=n).map(|v| (1, v)).collect())
            }
            Family::Complete(n) => {
                check_param(n)?;
                let mut e = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        e.push((i, j));
                    }
                }
                (n, e)
            }
            Family::Grid(r, c) => {
                check_param(r)?;
                check_param(c)?;
                let at = |i: usize, j: usize| (i - 1) * c + j;
                let mut e = Vec::new();
                for i in 1..=r {
                    for j in 1..=c {
                        if j < c {
                            e.push((at(i, j), at(i, j + 1)));
                        }
                        if i < r {
                            e.push((at(i, j), at(i + 1, j)));
                        }
                    }
                }
                (r * c, e)
            }
            Family::FullBary { arity, depth } => {
                check_param(arity)?;
                check_param(depth)?;
                let mut k = 1usize;
                let mut level = 1usize;
                for _ in 1..depth {
                    level = level
                        .checked_mul(arity)
                        .ok_or_else(|| GraphError::Malformed("tree too large".into()))?;
                    k = k
                        .checked_add(level)
                        .ok_or_else(|| GraphError::Malformed("tree too large".into()))?;
                }
                let mut e = Vec::new();
                for v in 1..=k {
                    for c in 0..arity {
                        let child = arity * (v - 1) + 2 + c;
                        if child <= k {
                            e.push((v, child));
                        }
                    }
                }
                (k, e)
            }
        };
        let g = PatternGraph::new(k, edges)?;
        g.validate()?;
        Ok(g)
    }
}

fn check_param(p: usize) -> Result<(), GraphError> {
    if p >= 1 {
        Ok(())
    } else {
        Err(GraphError::Malformed("family parameters must be >= 1".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> PatternGraph {
        Family::Path(n).generate().unwrap()
    }

    #[test]
    fn validate_accepts_p3() {
        let g = PatternGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert!(g.validate().is_ok());
    }

    #[test]
    fn validate_rejects_single_edge() {
        let g = PatternGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(g.validate(), Err(GraphError::TooFewEdges));
    }

    #[test]
    fn validate_rejects_disconnected() {
        let g = PatternGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.validate(), Err(GraphError::Disconnected));
    }

    #[test]
    fn construction_rejects_malformed_inputs() {
        assert!(matches!(
            PatternGraph::new(3, [(1, 1)]),
            Err(GraphError::Malformed(_))
        ));
        assert!(matches!(
            PatternGraph::new(3, [(1, 2), (2, 1)]),
            Err(GraphError::Malformed(_))
        ));
        assert!(matches!(
            PatternGraph::new(3, [(1, 4)]),
            Err(GraphError::Malformed(_))
        ));
    }

    #[test]
    fn pendant_vertices_examples() {
        assert_eq!(path(7).pendant_vertices().to_vec(), vec![1, 7]);
        let k3 = Family::Complete(3).generate().unwrap();
        assert!(k3.pendant_vertices().is_empty());
        let star = Family::Star(4).generate().unwrap();
        assert_eq!(star.pendant_vertices().to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn components_examples() {
        let g = path(7);
        let mut within = g.vertex_set();
        within.remove(4);
        let comps = g.components(within);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![1, 2, 3]);
        assert_eq!(comps[1].to_vec(), vec![5, 6, 7]);

        assert_eq!(g.components(g.vertex_set()).len(), 1);
        assert_eq!(
            g.components(VertexSubset::singleton(2)),
            vec![VertexSubset::singleton(2)]
        );
    }

    #[test]
    fn generate_full_bary_counts() {
        let f23 = Family::FullBary { arity: 2, depth: 3 }.generate().unwrap();
        assert_eq!(f23.vertex_count(), 7);
        assert_eq!(f23.edge_count(), 6);
        let f33 = Family::FullBary { arity: 3, depth: 3 }.generate().unwrap();
        assert_eq!(f33.vertex_count(), 13);
        assert_eq!(f33.edge_count(), 12);
    }

    #[test]
    fn generate_path_edges() {
        let g = path(7);
        assert_eq!(
            g.edges(),
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
        );
    }

    #[test]
    fn generate_rejects_degenerate_parameters() {
        assert_eq!(Family::Path(2).generate(), Err(GraphError::TooFewEdges));
        assert_eq!(Family::Path(1).generate(), Err(GraphError::TooFewEdges));
        assert_eq!(
            Family::FullBary { arity: 2, depth: 1 }.generate(),
            Err(GraphError::TooFewEdges)
        );
        assert_eq!(Family::Grid(1, 2).generate(), Err(GraphError::TooFewEdges));
        assert_eq!(Family::Complete(2).generate(), Err(GraphError::TooFewEdges));
    }

    #[test]
    fn every_generated_family_validates_or_errors() {
        let mut families = Vec::new();
        for n in 1..=8 {
            families.extend([
                Family::Path(n),
                Family::Cycle(n),
                Family::Star(n),
                Family::Complete(n),
            ]);
        }
        for r in 1..=3 {
            for c in 1..=4 {
                families.push(Family::Grid(r, c));
            }
        }
        for b in 1..=3 {
            for d in 1..=3 {
                families.push(Family::FullBary { arity: b, depth: d });
            }
        }
        for family in families {
            if let Ok(g) = family.generate() {
                assert!(g.validate().is_ok(), "{family:?} generated an invalid graph");
            }
        }
    }

    #[test]
    fn grid_2x3_shape() {
        let g = Family::Grid(2, 3).generate().unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert!(g.validate().is_ok());
    }

    #[test]
    fn relabel_examples() {
        let g = PatternGraph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.relabel(&[1, 2, 3]).unwrap(), g);
        let swapped = g.relabel(&[3, 2, 1]).unwrap();
        assert_eq!(swapped.edges(), &[(1, 2), (2, 3)]);
        let k3 = Family::Complete(3).generate().unwrap();
        assert_eq!(k3.relabel(&[2, 3, 1]).unwrap(), k3);
        assert!(matches!(
            g.relabel(&[1, 1, 3]),
            Err(GraphError::Malformed(_))
        ));
    }

    #[test]
    fn subset_lex_order() {
        let a: VertexSubset = [1, 3].into_iter().collect();
        let b = VertexSubset::singleton(2);
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(
            VertexSubset::singleton(1).lex_cmp(a),
            std::cmp::Ordering::Less
        );
    }

    #[test]
    fn relabel_preserves_degree_multiset() {
        let g = Family::Grid(2, 3).generate().unwrap();
        let perm = [4, 2, 6, 1, 3, 5];
        let h = g.relabel(&perm).unwrap();
        let mut dg: Vec<_> = (1..=6).map(|v| g.degree(v)).collect();
        let mut dh: Vec<_> = (1..=6).map(|v| h.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        assert_eq!(dg, dh);
    }
}
