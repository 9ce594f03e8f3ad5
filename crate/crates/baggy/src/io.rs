//! File formats: graph JSON, nested tree JSON, and the formula text and
//! JSON formats.
//!
//! * Graph: `{"k": 7, "edges": [[1,2], [2,3], ...]}`; edges are written with
//!   the smaller endpoint first and accepted in either order.
//! * Tree: nested `{"bag": [2,4,6], "children": [...]}`.
//! * Formula text: one gate per line in preorder — `S <child-count>`,
//!   `P <child-count>`, `V e=<edge_index> u=<u> v=<v>`,
//!   `C <numerator>/<denominator>`.
//! * Formula JSON: `{"op": "sum"|"product", "children": [...]}`,
//!   `{"op": "var", "e": .., "u": .., "v": ..}`,
//!   `{"op": "const", "num": .., "den": ..}`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{ColIsoFormula, FormulaIR, VariableId};
use crate::graph::{GraphError, PatternGraph, VertexSubset, MAX_VERTICES};
use crate::tree::BaggyEliminationTree;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("malformed input: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub k: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &PatternGraph) -> Self {
        GraphJson {
            k: g.vertex_count(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn into_graph(self) -> Result<PatternGraph, GraphError> {
        PatternGraph::new(self.k, self.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

pub fn graph_to_json(g: &PatternGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<PatternGraph, IoError> {
    let parsed: GraphJson = serde_json::from_str(text)?;
    Ok(parsed.into_graph()?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeJson {
    pub bag: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TreeJson>,
}

impl TreeJson {
    pub fn from_tree(t: &BaggyEliminationTree) -> Self {
        fn build(t: &BaggyEliminationTree, id: usize) -> TreeJson {
            TreeJson {
                bag: t.bag(id).to_vec(),
                children: t
                    .node(id)
                    .children
                    .iter()
                    .map(|&c| build(t, c))
                    .collect(),
            }
        }
        build(t, t.root())
    }

    pub fn into_tree(self) -> Result<BaggyEliminationTree, IoError> {
        let root_bag = bag_from_labels(&self.bag)?;
        let mut tree = BaggyEliminationTree::with_root(root_bag);
        let mut stack: Vec<(TreeJson, usize)> = Vec::new();
        for child in self.children.into_iter().rev() {
            stack.push((child, 0));
        }
        while let Some((node, parent)) = stack.pop() {
            let bag = bag_from_labels(&node.bag)?;
            let id = tree.add_child(parent, bag);
            for child in node.children.into_iter().rev() {
                stack.push((child, id));
            }
        }
        Ok(tree)
    }
}

fn bag_from_labels(labels: &[usize]) -> Result<VertexSubset, IoError> {
    let mut bag = VertexSubset::EMPTY;
    for &v in labels {
        if !(1..=MAX_VERTICES).contains(&v) {
            return Err(IoError::Malformed(format!(
                "bag vertex {v} out of range 1..={MAX_VERTICES}"
            )));
        }
        bag.insert(v);
    }
    Ok(bag)
}

pub fn tree_to_json(t: &BaggyEliminationTree) -> String {
    serde_json::to_string_pretty(&TreeJson::from_tree(t)).expect("tree serializes")
}

pub fn tree_from_json(text: &str) -> Result<BaggyEliminationTree, IoError> {
    let parsed: TreeJson = serde_json::from_str(text)?;
    parsed.into_tree()
}

/// One gate per line, preorder.
pub fn formula_to_text(f: &ColIsoFormula) -> String {
    let mut out = String::new();
    fn emit(f: &ColIsoFormula, out: &mut String) {
        match f {
            FormulaIR::Sum(cs) => {
                out.push_str(&format!("S {}\n", cs.len()));
                cs.iter().for_each(|c| emit(c, out));
            }
            FormulaIR::Product(cs) => {
                out.push_str(&format!("P {}\n", cs.len()));
                cs.iter().for_each(|c| emit(c, out));
            }
            FormulaIR::Var(v) => {
                out.push_str(&format!("V e={} u={} v={}\n", v.edge_index, v.u, v.v));
            }
            FormulaIR::Const(c) => {
                out.push_str(&format!("C {}/{}\n", c.numer(), c.denom()));
            }
        }
    }
    emit(f, &mut out);
    out
}

pub fn formula_from_text(text: &str) -> Result<ColIsoFormula, IoError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let f = parse_gate(&mut lines)?;
    if let Some(extra) = lines.next() {
        return Err(IoError::Malformed(format!(
            "trailing content after the formula: {extra:?}"
        )));
    }
    Ok(f)
}

fn parse_gate<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
) -> Result<ColIsoFormula, IoError> {
    let line = lines
        .next()
        .ok_or_else(|| IoError::Malformed("unexpected end of formula".into()))?
        .trim();
    let (tag, rest) = line
        .split_once(' ')
        .ok_or_else(|| IoError::Malformed(format!("bad gate line: {line:?}")))?;
    match tag {
        "S" | "P" => {
            let count: usize = rest
                .trim()
                .parse()
                .map_err(|_| IoError::Malformed(format!("bad child count: {line:?}")))?;
            let children = (0..count)
                .map(|_| parse_gate(lines))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(if tag == "S" {
                FormulaIR::Sum(children)
            } else {
                FormulaIR::Product(children)
            })
        }
        "V" => {
            let mut e = None;
            let mut u = None;
            let mut v = None;
            for field in rest.split_whitespace() {
                let (key, value) = field
                    .split_once('=')
                    .ok_or_else(|| IoError::Malformed(format!("bad var field: {field:?}")))?;
                let value: usize = value
                    .parse()
                    .map_err(|_| IoError::Malformed(format!("bad var field: {field:?}")))?;
                match key {
                    "e" => e = Some(value),
                    "u" => u = Some(value),
                    "v" => v = Some(value),
                    _ => return Err(IoError::Malformed(format!("bad var field: {field:?}"))),
                }
            }
            match (e, u, v) {
                (Some(e), Some(u), Some(v)) => Ok(FormulaIR::Var(VariableId {
                    edge_index: e,
                    u,
                    v,
                })),
                _ => Err(IoError::Malformed(format!("incomplete var line: {line:?}"))),
            }
        }
        "C" => {
            let (num, den) = rest
                .trim()
                .split_once('/')
                .ok_or_else(|| IoError::Malformed(format!("bad constant: {line:?}")))?;
            let num: u64 = num
                .parse()
                .map_err(|_| IoError::Malformed(format!("bad constant: {line:?}")))?;
            let den: u64 = den
                .parse()
                .map_err(|_| IoError::Malformed(format!("bad constant: {line:?}")))?;
            if den == 0 {
                return Err(IoError::Malformed("constant denominator is zero".into()));
            }
            Ok(FormulaIR::Const(Ratio::new(num, den)))
        }
        _ => Err(IoError::Malformed(format!("unknown gate tag: {line:?}"))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum FormulaJson {
    Sum { children: Vec<FormulaJson> },
    Product { children: Vec<FormulaJson> },
    Var { e: usize, u: usize, v: usize },
    Const { num: u64, den: u64 },
}

impl FormulaJson {
    pub fn from_formula(f: &ColIsoFormula) -> Self {
        match f {
            FormulaIR::Sum(cs) => FormulaJson::Sum {
                children: cs.iter().map(Self::from_formula).collect(),
            },
            FormulaIR::Product(cs) => FormulaJson::Product {
                children: cs.iter().map(Self::from_formula).collect(),
            },
            FormulaIR::Var(v) => FormulaJson::Var {
                e: v.edge_index,
                u: v.u,
                v: v.v,
            },
            FormulaIR::Const(c) => FormulaJson::Const {
                num: *c.numer(),
                den: *c.denom(),
            },
        }
    }

    pub fn into_formula(self) -> Result<ColIsoFormula, IoError> {
        Ok(match self {
            FormulaJson::Sum { children } => FormulaIR::Sum(
                children
                    .into_iter()
                    .map(Self::into_formula)
                    .collect::<Result<_, _>>()?,
            ),
            FormulaJson::Product { children } => FormulaIR::Product(
                children
                    .into_iter()
                    .map(Self::into_formula)
                    .collect::<Result<_, _>>()?,
            ),
            FormulaJson::Var { e, u, v } => FormulaIR::Var(VariableId {
                edge_index: e,
                u,
                v,
            }),
            FormulaJson::Const { num, den } => {
                if den == 0 {
                    return Err(IoError::Malformed("constant denominator is zero".into()));
                }
                FormulaIR::Const(Ratio::new(num, den))
            }
        })
    }
}

pub fn formula_to_json(f: &ColIsoFormula) -> String {
    serde_json::to_string(&FormulaJson::from_formula(f)).expect("formula serializes")
}

pub fn formula_from_json(text: &str) -> Result<ColIsoFormula, IoError> {
    let parsed: FormulaJson = serde_json::from_str(text)?;
    parsed.into_formula()
}
