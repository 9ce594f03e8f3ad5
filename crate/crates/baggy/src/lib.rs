//! Baggy elimination trees and bounded product-depth monotone formulas for
//! graph homomorphism polynomials.
//!
//! A *baggy elimination tree* for a pattern graph `H` is a rooted tree of
//! disjoint non-empty vertex bags partitioning `V(H)` in which every edge of
//! `H` joins vertices of one bag or of two bags in an ancestor-descendant
//! relationship. Its *cost* is the maximum root-to-leaf sum of bag sizes;
//! its *product depth* counts nodes per root-to-leaf path, skipping a leaf
//! that holds only degree-one vertices. The minimum cost over trees of
//! product depth at most Δ governs how large a product-depth-Δ monotone
//! formula for the colored isomorphism polynomial of `H` must be: the
//! compiled size is Θ(n^cost).
//!
//! The crate provides:
//! * [`graph`] — pattern graphs, validation, and the standard families;
//! * [`tree`] — the decomposition, its metrics, normalization, and the
//!   conversion to classic (singleton-bag) elimination trees;
//! * [`solver`] — exact minimum cost at a depth budget, with a witness
//!   tree, a brute-force enumeration oracle, and treedepth;
//! * [`formula`] — the monotone formula IR, the compiler from trees to
//!   formulas, exact size prediction, and the homomorphism projection;
//! * [`verify`] — brute-force polynomial oracles, exact expansion,
//!   streaming evaluation, randomized identity testing, and the lifting
//!   from parse trees back to baggy elimination trees;
//! * [`cli`] — the `baggy` command-line front-end.
//!
//! # Examples
//!
//! Each capability has a runnable example; start with the path tree:
//!
//! ```bash
//! cargo run -p baggy --example path7_depth2      # the running example end to end
//! cargo run -p baggy --example families          # generating pattern graphs
//! cargo run -p baggy --example solve_lambda      # exact costs and witnesses
//! cargo run -p baggy --example compile_formula   # gate layout and file formats
//! cargo run -p baggy --example verify_equivalence # oracles and identity testing
//! cargo run -p baggy --example hom_projection    # counting homomorphisms
//! cargo run -p baggy --example lift_parse_tree   # parse trees back to bag trees
//! cargo run -p baggy --example streaming_eval    # evaluation past the size cap
//! cargo run -p baggy --example bench_table       # the size/depth trade-off table
//! ```

pub mod cli;
pub mod formula;
pub mod graph;
pub mod io;
pub mod solver;
pub mod tree;
mod util;
pub mod verify;

pub use formula::{
    compile, compile_with_cap, hom_project, predicted_size, ColIsoFormula, CompileError,
    FormulaIR, FormulaMetrics, HomFormula, HostEdgeId, VariableId,
};
pub use graph::{Family, GraphError, PatternGraph, VertexSubset};
pub use solver::{lambda, lambda_brute, treedepth, LambdaResult, SolveError, SolveStats};
pub use tree::{BaggyEliminationTree, TreeError, TreeMetrics};
pub use verify::{
    brute_coliso, brute_hom, eval_ir, eval_ir_exact, eval_streaming, expand, ColIsoAssignment,
    FieldElement, HomAssignment, MonomialMap, VerifyError,
};
