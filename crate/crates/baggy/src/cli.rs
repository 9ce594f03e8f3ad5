//! Batch front-end: graph generation, solving, compiling, verifying,
//! lifting, and the benchmark table.
//!
//! Exit codes: 0 success, 2 validation error, 3 resource cap exceeded,
//! 4 verification mismatch. Randomized commands take an explicit `--seed`;
//! nothing reads ambient entropy, so reruns are byte-identical.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::formula::{
    compile_with_cap, hom_project, predicted_size, FormulaMetrics, DEFAULT_SIZE_CAP,
};
use crate::graph::{Family, PatternGraph};
use crate::io::{self, TreeJson};
use crate::solver::{self, DEFAULT_VERTEX_CAP};
use crate::tree::BaggyEliminationTree;
use crate::verify::{
    self, brute_coliso, brute_hom, coliso_monomial_map, eval_ir, expand,
    parse::{lift, sample_parse_tree},
    PitOutcome,
};

#[derive(Debug, Parser)]
#[command(name = "baggy", version, about = "baggy elimination trees and bounded-depth monotone formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a pattern graph from a named family.
    Gen {
        /// Family name: path, cycle, star, complete, grid, full_bary.
        family: String,
        /// Family parameters (e.g. `7` for path, `2 3` for grid or full_bary).
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the minimum tree cost at a product-depth budget.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        delta: usize,
        /// Vertex cap for the exact solver.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a graph, and a tree against it when given.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// Compile a graph and tree into a monotone formula file.
    Compile {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        n: usize,
        /// Materialization cap in formula edges.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FormulaFormat::Text)]
        format: FormulaFormat,
    },
    /// Predict the exact compiled size arithmetically, without materializing.
    PredictSize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        /// Host sizes to evaluate (repeatable).
        #[arg(long, required = true)]
        n: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a compiled formula against the brute-force oracles.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VerifyMode::Pit)]
        mode: VerifyMode,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Seed for the randomized modes (required for pit and hom).
        #[arg(long)]
        seed: Option<u64>,
        /// Monomial cap for exact mode.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample parse trees from the compiled formula and lift them back to
    /// baggy elimination trees.
    Lift {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep families and depth budgets into a table of costs and sizes.
    Bench {
        /// Family specs such as `path:7` or `full_bary:2:3` (repeatable);
        /// a default sweep covering the depth-hierarchy instances runs when
        /// none are given.
        #[arg(long = "family")]
        families: Vec<String>,
        /// Product-depth budgets, comma separated.
        #[arg(long, default_value = "1,2,3")]
        deltas: String,
        /// Host sizes for the size columns, comma separated.
        #[arg(long, default_value = "16,32,64")]
        ns: String,
        /// Vertex cap for the solver; larger instances are marked, not fatal.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = BenchFormat::Csv)]
        format: BenchFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Exact,
    Pit,
    Hom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Csv,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    ResourceCap(String),
    Mismatch(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
            CliError::ResourceCap(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m)
            | CliError::ResourceCap(m)
            | CliError::Mismatch(m)
            | CliError::Io(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<crate::graph::GraphError> for CliError {
    fn from(e: crate::graph::GraphError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<crate::tree::TreeError> for CliError {
    fn from(e: crate::tree::TreeError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<io::IoError> for CliError {
    fn from(e: io::IoError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<solver::SolveError> for CliError {
    fn from(e: solver::SolveError) -> Self {
        match e {
            solver::SolveError::TooLarge { .. } => CliError::ResourceCap(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<crate::formula::CompileError> for CliError {
    fn from(e: crate::formula::CompileError) -> Self {
        match e {
            crate::formula::CompileError::SizeLimit { .. } => {
                CliError::ResourceCap(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<verify::VerifyError> for CliError {
    fn from(e: verify::VerifyError) -> Self {
        match e {
            verify::VerifyError::TooLarge { .. } => CliError::ResourceCap(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

/// Entry point for the binary: parses `std::env::args`, runs, reports.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut stdout = std::io::stdout();
    match execute(cli, &mut stdout) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn execute(cli: Cli, stdout: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => cmd_gen(&family, &params, out.as_deref(), stdout),
        Command::Solve {
            graph,
            delta,
            cap,
            out,
        } => cmd_solve(&graph, delta, cap, out.as_deref(), stdout),
        Command::Validate { graph, tree } => cmd_validate(&graph, tree.as_deref(), stdout),
        Command::Compile {
            graph,
            tree,
            n,
            cap,
            out,
            format,
        } => cmd_compile(&graph, &tree, n, cap, &out, format, stdout),
        Command::PredictSize {
            graph,
            tree,
            n,
            out,
        } => cmd_predict_size(&graph, &tree, &n, out.as_deref(), stdout),
        Command::Verify {
            graph,
            tree,
            n,
            mode,
            trials,
            seed,
            cap,
            out,
        } => cmd_verify(&graph, &tree, n, mode, trials, seed, cap, out.as_deref(), stdout),
        Command::Lift {
            graph,
            tree,
            n,
            seed,
            count,
            out,
        } => cmd_lift(&graph, &tree, n, seed, count, out.as_deref(), stdout),
        Command::Bench {
            families,
            deltas,
            ns,
            cap,
            format,
            out,
        } => cmd_bench(&families, &deltas, &ns, cap, format, out.as_deref(), stdout),
    }
}

fn parse_family(name: &str, params: &[usize]) -> Result<Family, CliError> {
    let fam = match (name, params) {
        ("path", [n]) => Family::Path(*n),
        ("cycle", [n]) => Family::Cycle(*n),
        ("star", [n]) => Family::Star(*n),
        ("complete", [n]) => Family::Complete(*n),
        ("grid", [r, c]) => Family::Grid(*r, *c),
        ("full_bary", [b, d]) => Family::FullBary {
            arity: *b,
            depth: *d,
        },
        _ => {
            return Err(CliError::Validation(format!(
                "unknown family {name:?} with {} parameter(s)",
                params.len()
            )))
        }
    };
    Ok(fam)
}

fn load_graph(path: &Path) -> Result<PatternGraph, CliError> {
    let text = fs::read_to_string(path)?;
    let g = io::graph_from_json(&text)?;
    g.validate()?;
    Ok(g)
}

fn load_tree(path: &Path) -> Result<BaggyEliminationTree, CliError> {
    let text = fs::read_to_string(path)?;
    Ok(io::tree_from_json(&text)?)
}

fn deliver(content: &str, out: Option<&Path>, stdout: &mut impl Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => stdout.write_all(content.as_bytes())?,
    }
    Ok(())
}

fn cmd_gen(
    family: &str,
    params: &[usize],
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = parse_family(family, params)?.generate()?;
    let mut text = io::graph_to_json(&g);
    text.push('\n');
    deliver(&text, out, stdout)
}

#[derive(Serialize)]
struct SolveOutput {
    lambda: usize,
    delta: usize,
    witness: TreeJson,
    treedepth: usize,
}

fn cmd_solve(
    graph: &Path,
    delta: usize,
    cap: Option<usize>,
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let cap = cap.unwrap_or(DEFAULT_VERTEX_CAP);
    let result = solver::lambda_with_cap(&g, delta, cap)?;
    let td = solver::treedepth_with_cap(&g, cap)?;
    let output = SolveOutput {
        lambda: result.value,
        delta,
        witness: TreeJson::from_tree(&result.witness),
        treedepth: td,
    };
    let mut text = serde_json::to_string_pretty(&output).expect("solve output serializes");
    text.push('\n');
    deliver(&text, out, stdout)
}

#[derive(Serialize)]
struct ValidateOutput {
    graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cost: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    product_depth: Option<usize>,
}

fn cmd_validate(
    graph: &Path,
    tree: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let mut output = ValidateOutput {
        graph: "ok".into(),
        tree: None,
        cost: None,
        product_depth: None,
    };
    if let Some(tree_path) = tree {
        let t = load_tree(tree_path)?;
        t.validate(&g)?;
        let m = t.metrics(&g);
        output.tree = Some("ok".into());
        output.cost = Some(m.cost);
        output.product_depth = Some(m.product_depth);
    }
    let mut text = serde_json::to_string_pretty(&output).expect("validate output serializes");
    text.push('\n');
    stdout.write_all(text.as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct CompileReport {
    out: String,
    size: u64,
    product_depth: usize,
    predicted_size: String,
}

fn cmd_compile(
    graph: &Path,
    tree: &Path,
    n: usize,
    cap: Option<u64>,
    out: &Path,
    format: FormulaFormat,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let t = load_tree(tree)?;
    let cap = cap.unwrap_or(DEFAULT_SIZE_CAP);
    let f = compile_with_cap(&g, &t, n, cap)?;
    let FormulaMetrics {
        size,
        product_depth,
        ..
    } = f.measure();
    let content = match format {
        FormulaFormat::Text => io::formula_to_text(&f),
        FormulaFormat::Json => {
            let mut s = io::formula_to_json(&f);
            s.push('\n');
            s
        }
    };
    fs::write(out, content)?;
    let report = CompileReport {
        out: out.display().to_string(),
        size,
        product_depth,
        predicted_size: predicted_size(&g, &t, n).to_string(),
    };
    let mut text = serde_json::to_string_pretty(&report).expect("compile report serializes");
    text.push('\n');
    stdout.write_all(text.as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct SizeEntry {
    n: usize,
    size: String,
}

#[derive(Serialize)]
struct PredictOutput {
    entries: Vec<SizeEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    log2_ratios: Vec<f64>,
}

fn cmd_predict_size(
    graph: &Path,
    tree: &Path,
    ns: &[usize],
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let t = load_tree(tree)?;
    t.validate(&g)?;
    let sizes: Vec<_> = ns.iter().map(|&n| predicted_size(&g, &t, n)).collect();
    let log2_ratios = sizes
        .windows(2)
        .map(|w| {
            let a = w[0].to_f64().unwrap_or(f64::INFINITY);
            let b = w[1].to_f64().unwrap_or(f64::INFINITY);
            (b / a).log2()
        })
        .collect();
    let output = PredictOutput {
        entries: ns
            .iter()
            .zip(&sizes)
            .map(|(&n, s)| SizeEntry {
                n,
                size: s.to_string(),
            })
            .collect(),
        log2_ratios,
    };
    let mut text = serde_json::to_string_pretty(&output).expect("predict output serializes");
    text.push('\n');
    deliver(&text, out, stdout)
}

#[derive(Serialize)]
struct VerifyOutput {
    mode: String,
    result: String,
    seeds: Vec<u64>,
    trials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample_trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample_seed: Option<u64>,
    /// The disagreeing assignment as a flat array in variable order.
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample_assignment: Option<Vec<u64>>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    graph: &Path,
    tree: &Path,
    n: usize,
    mode: VerifyMode,
    trials: usize,
    seed: Option<u64>,
    cap: Option<usize>,
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let t = load_tree(tree)?;
    let f = compile_with_cap(&g, &t, n, DEFAULT_SIZE_CAP)?;
    let output = match mode {
        VerifyMode::Exact => {
            let cap = cap.unwrap_or(verify::DEFAULT_MONOMIAL_CAP);
            let expanded = expand(&f, cap)?;
            let oracle = coliso_monomial_map(&g, n)?;
            let equal = expanded == oracle;
            VerifyOutput {
                mode: "exact".into(),
                result: if equal { "equal" } else { "mismatch" }.into(),
                seeds: Vec::new(),
                trials: 0,
                counterexample_trial: None,
                counterexample_seed: None,
                counterexample_assignment: None,
            }
        }
        VerifyMode::Pit => {
            let seed = require_seed(seed)?;
            let report = verify::pit_equiv_coliso(
                &g,
                n,
                |a| eval_ir(&f, a),
                |a| brute_coliso(&g, n, a).expect("enumeration under cap"),
                trials,
                seed,
            );
            let assignment = match &report.outcome {
                PitOutcome::Counterexample { assignment, .. } => {
                    Some(assignment.values().iter().map(|v| v.value()).collect())
                }
                PitOutcome::Equal => None,
            };
            pit_output("pit", report.trial_seeds, trials, &report.outcome, assignment)
        }
        VerifyMode::Hom => {
            let seed = require_seed(seed)?;
            let h = hom_project(&f);
            let report = verify::pit_equiv_hom(
                n,
                |a| eval_ir(&h, a),
                |a| brute_hom(&g, n, a).expect("enumeration under cap"),
                trials,
                seed,
            );
            let assignment = match &report.outcome {
                PitOutcome::Counterexample { assignment, .. } => {
                    Some(assignment.values().iter().map(|v| v.value()).collect())
                }
                PitOutcome::Equal => None,
            };
            pit_output("hom", report.trial_seeds, trials, &report.outcome, assignment)
        }
    };
    let failed = output.result != "equal";
    let result_label = output.result.clone();
    let mut text = serde_json::to_string_pretty(&output).expect("verify output serializes");
    text.push('\n');
    deliver(&text, out, stdout)?;
    if failed {
        return Err(CliError::Mismatch(format!(
            "verification failed: {result_label}"
        )));
    }
    Ok(())
}

fn require_seed(seed: Option<u64>) -> Result<u64, CliError> {
    seed.ok_or_else(|| CliError::Validation("--seed is required for randomized modes".into()))
}

fn pit_output<A>(
    mode: &str,
    seeds: Vec<u64>,
    trials: usize,
    outcome: &PitOutcome<A>,
    assignment: Option<Vec<u64>>,
) -> VerifyOutput {
    match outcome {
        PitOutcome::Equal => VerifyOutput {
            mode: mode.into(),
            result: "equal".into(),
            seeds,
            trials,
            counterexample_trial: None,
            counterexample_seed: None,
            counterexample_assignment: None,
        },
        PitOutcome::Counterexample {
            trial, trial_seed, ..
        } => VerifyOutput {
            mode: mode.into(),
            result: "counterexample".into(),
            seeds,
            trials,
            counterexample_trial: Some(*trial),
            counterexample_seed: Some(*trial_seed),
            counterexample_assignment: assignment,
        },
    }
}

#[derive(Serialize)]
struct LiftEntry {
    seed: u64,
    tree: TreeJson,
    cost: usize,
    product_depth: usize,
}

#[derive(Serialize)]
struct LiftOutput {
    formula_product_depth: usize,
    results: Vec<LiftEntry>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_lift(
    graph: &Path,
    tree: &Path,
    n: usize,
    seed: u64,
    count: usize,
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let g = load_graph(graph)?;
    let t = load_tree(tree)?;
    let f = compile_with_cap(&g, &t, n, DEFAULT_SIZE_CAP)?;
    let depth = f.measure().product_depth;
    let mut results = Vec::with_capacity(count);
    for i in 0..count {
        let s = seed.wrapping_add(i as u64);
        let pt = sample_parse_tree(&f, s)?;
        let lifted = lift(&pt, &g)?;
        lifted.validate(&g)?;
        let m = lifted.metrics(&g);
        results.push(LiftEntry {
            seed: s,
            tree: TreeJson::from_tree(&lifted),
            cost: m.cost,
            product_depth: m.product_depth,
        });
    }
    let output = LiftOutput {
        formula_product_depth: depth,
        results,
    };
    let mut text = serde_json::to_string_pretty(&output).expect("lift output serializes");
    text.push('\n');
    deliver(&text, out, stdout)
}

#[derive(Serialize)]
struct BenchRow {
    family: String,
    delta: usize,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    treedepth: Option<usize>,
    sizes: Vec<SizeEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fitted_exponent: Option<f64>,
}

fn parse_family_spec(spec: &str) -> Result<(String, Family), CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let params: Vec<usize> = parts[1..]
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CliError::Validation(format!("bad family spec {spec:?}")))
        })
        .collect::<Result<_, _>>()?;
    Ok((spec.to_string(), parse_family(parts[0], &params)?))
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Validation(format!("bad number list {text:?}")))
        })
        .collect()
}

/// The default sweep: the running path example plus the full b-ary trees
/// that witness the depth hierarchy (`F_{b,3}` for b = 2, 3).
const DEFAULT_BENCH_FAMILIES: &[&str] = &[
    "path:7",
    "cycle:5",
    "complete:4",
    "grid:2:3",
    "full_bary:2:3",
    "full_bary:3:3",
];

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    families: &[String],
    deltas: &str,
    ns: &str,
    cap: Option<usize>,
    format: BenchFormat,
    out: Option<&Path>,
    stdout: &mut impl Write,
) -> Result<(), CliError> {
    let specs: Vec<String> = if families.is_empty() {
        DEFAULT_BENCH_FAMILIES.iter().map(|s| s.to_string()).collect()
    } else {
        families.to_vec()
    };
    let deltas = parse_usize_list(deltas)?;
    let ns = parse_usize_list(ns)?;
    let cap = cap.unwrap_or(DEFAULT_VERTEX_CAP);

    let mut rows = Vec::new();
    for spec in &specs {
        let (label, family) = parse_family_spec(spec)?;
        let g = family.generate()?;
        for &delta in &deltas {
            rows.push(bench_row(&g, &label, delta, &ns, cap)?);
        }
    }

    let text = match format {
        BenchFormat::Csv => render_csv(&rows, &ns),
        BenchFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("bench rows serialize");
            s.push('\n');
            s
        }
    };
    deliver(&text, out, stdout)
}

fn bench_row(
    g: &PatternGraph,
    label: &str,
    delta: usize,
    ns: &[usize],
    cap: usize,
) -> Result<BenchRow, CliError> {
    match solver::lambda_with_cap(g, delta, cap) {
        Ok(result) => {
            let td = solver::treedepth_with_cap(g, cap)?;
            let sizes: Vec<_> = ns
                .iter()
                .map(|&n| predicted_size(g, &result.witness, n))
                .collect();
            let fitted = if sizes.len() >= 2 {
                let a = sizes[sizes.len() - 2].to_f64().unwrap_or(f64::INFINITY);
                let b = sizes[sizes.len() - 1].to_f64().unwrap_or(f64::INFINITY);
                Some((b / a).log2())
            } else {
                None
            };
            Ok(BenchRow {
                family: label.to_string(),
                delta,
                status: "ok".into(),
                lambda: Some(result.value),
                treedepth: Some(td),
                sizes: ns
                    .iter()
                    .zip(&sizes)
                    .map(|(&n, s)| SizeEntry {
                        n,
                        size: s.to_string(),
                    })
                    .collect(),
                fitted_exponent: fitted,
            })
        }
        Err(solver::SolveError::TooLarge { .. }) => Ok(BenchRow {
            family: label.to_string(),
            delta,
            status: "too_large".into(),
            lambda: None,
            treedepth: None,
            sizes: Vec::new(),
            fitted_exponent: None,
        }),
        Err(e) => Err(e.into()),
    }
}

fn render_csv(rows: &[BenchRow], ns: &[usize]) -> String {
    let mut text = String::from("family,delta,status,lambda,treedepth");
    for n in ns {
        let _ = write!(text, ",size_n{n}");
    }
    text.push_str(",fitted_exponent\n");
    for row in rows {
        let _ = write!(text, "{},{},{}", row.family, row.delta, row.status);
        let _ = match row.lambda {
            Some(l) => write!(text, ",{l}"),
            None => write!(text, ","),
        };
        let _ = match row.treedepth {
            Some(t) => write!(text, ",{t}"),
            None => write!(text, ","),
        };
        for i in 0..ns.len() {
            match row.sizes.get(i) {
                Some(entry) => {
                    let _ = write!(text, ",{}", entry.size);
                }
                None => text.push(','),
            }
        }
        match row.fitted_exponent {
            Some(e) => {
                let _ = writeln!(text, ",{e:.4}");
            }
            None => text.push_str(",\n"),
        }
    }
    text
}
