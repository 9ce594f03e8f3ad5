//! Independent oracles and equivalence tests for compiled formulas:
//! brute-force evaluation of the colored isomorphism and homomorphism
//! polynomials, exact monomial expansion, streaming evaluation that never
//! materializes the formula, and seeded randomized identity testing.

pub mod field;
pub mod parse;

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use field::{FieldElement, MODULUS};

use crate::formula::{FormulaIR, HostEdgeId, VariableId};
use crate::graph::PatternGraph;
use crate::tree::BaggyEliminationTree;

/// Default cap on brute-force enumeration work (assignments visited).
pub const DEFAULT_ENUM_CAP: u128 = 1_000_000_000;
/// Default cap on the number of monomials an expansion may produce.
pub const DEFAULT_MONOMIAL_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("enumeration needs {work} steps, above the cap of {cap}")]
    TooLarge { work: u128, cap: u128 },
    #[error("expansion supports non-negative integer constants only")]
    NonIntegralConstant,
    #[error("formula has no samplable parse tree: {0}")]
    Degenerate(String),
    #[error("monomial assigns two host values to color {0}")]
    InconsistentMonomial(usize),
    #[error("monomial mentions no variable for color {0}")]
    IncompleteMonomial(usize),
    #[error("parse tree does not lift to a rooted tree: {0}")]
    MalformedParseTree(String),
}

/// Looks up the field value of a variable in a total assignment.
pub trait Assignment<V> {
    fn value(&self, var: &V) -> FieldElement;
}

/// Total assignment to the `|E(H)| * n^2` colored-isomorphism variables,
/// stored densely in [`VariableId::flat_index`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColIsoAssignment {
    n: usize,
    values: Vec<FieldElement>,
}

impl ColIsoAssignment {
    pub fn filled(g: &PatternGraph, n: usize, value: FieldElement) -> Self {
        ColIsoAssignment {
            n,
            values: vec![value; g.edge_count() * n * n],
        }
    }

    pub fn all_ones(g: &PatternGraph, n: usize) -> Self {
        Self::filled(g, n, FieldElement::ONE)
    }

    pub fn random(g: &PatternGraph, n: usize, rng: &mut impl Rng) -> Self {
        ColIsoAssignment {
            n,
            values: (0..g.edge_count() * n * n)
                .map(|_| FieldElement::random(rng))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, var: VariableId, value: FieldElement) {
        let idx = var.flat_index(self.n);
        self.values[idx] = value;
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }
}

impl Assignment<VariableId> for ColIsoAssignment {
    fn value(&self, var: &VariableId) -> FieldElement {
        self.values[var.flat_index(self.n)]
    }
}

/// Total assignment to the `C(n,2)` host-edge variables of the
/// homomorphism polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAssignment {
    n: usize,
    values: Vec<FieldElement>,
}

impl HomAssignment {
    pub fn filled(n: usize, value: FieldElement) -> Self {
        HomAssignment {
            n,
            values: vec![value; n * (n - 1) / 2],
        }
    }

    pub fn all_ones(n: usize) -> Self {
        Self::filled(n, FieldElement::ONE)
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        HomAssignment {
            n,
            values: (0..n * (n - 1) / 2)
                .map(|_| FieldElement::random(rng))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, var: HostEdgeId, value: FieldElement) {
        let idx = var.flat_index(self.n);
        self.values[idx] = value;
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }
}

impl Assignment<HostEdgeId> for HomAssignment {
    fn value(&self, var: &HostEdgeId) -> FieldElement {
        self.values[var.flat_index(self.n)]
    }
}

fn enumeration_work(n: usize, k: usize, cap: u128) -> Result<(), VerifyError> {
    let mut work = 1u128;
    for _ in 0..k {
        work = work.saturating_mul(n as u128);
        if work > cap {
            return Err(VerifyError::TooLarge { work, cap });
        }
    }
    Ok(())
}

/// Sum over all maps `V(H) -> [n]` of the product of the edge variables,
/// straight from the polynomial's definition.
pub fn brute_coliso(
    g: &PatternGraph,
    n: usize,
    a: &ColIsoAssignment,
) -> Result<FieldElement, VerifyError> {
    enumeration_work(n, g.vertex_count(), DEFAULT_ENUM_CAP)?;
    if n == 0 {
        return Ok(FieldElement::ZERO); // no maps into an empty host set
    }
    let k = g.vertex_count();
    let mut host = vec![1usize; k];
    let mut total = FieldElement::ZERO;
    loop {
        let mut term = FieldElement::ONE;
        for (idx, &(i, j)) in g.edges().iter().enumerate() {
            term *= a.value(&VariableId {
                edge_index: idx,
                u: host[i - 1],
                v: host[j - 1],
            });
        }
        total += term;
        if !crate::util::advance_odometer(&mut host, n) {
            break;
        }
    }
    Ok(total)
}

/// Sum over all homomorphisms `H -> K_n` (maps sending adjacent pattern
/// vertices to distinct hosts) of the product of the host-edge variables.
pub fn brute_hom(
    g: &PatternGraph,
    n: usize,
    a: &HomAssignment,
) -> Result<FieldElement, VerifyError> {
    enumeration_work(n, g.vertex_count(), DEFAULT_ENUM_CAP)?;
    if n == 0 {
        return Ok(FieldElement::ZERO);
    }
    let k = g.vertex_count();
    let mut host = vec![1usize; k];
    let mut total = FieldElement::ZERO;
    loop {
        let mut term = Some(FieldElement::ONE);
        for &(i, j) in g.edges() {
            let (u, v) = (host[i - 1], host[j - 1]);
            if u == v {
                term = None;
                break;
            }
            term = term.map(|t| t * a.value(&HostEdgeId::new(u, v)));
        }
        if let Some(t) = term {
            total += t;
        }
        if !crate::util::advance_odometer(&mut host, n) {
            break;
        }
    }
    Ok(total)
}

/// Exact arbitrary-precision evaluation, for checks that must not depend on
/// modular arithmetic (the all-ones law in particular). Constants must be
/// non-negative integers.
pub fn eval_ir_exact<V>(
    f: &FormulaIR<V>,
    value_of: &impl Fn(&V) -> num_bigint::BigUint,
) -> Result<num_bigint::BigUint, VerifyError> {
    use num_traits::{One, Zero};
    match f {
        FormulaIR::Sum(cs) => {
            let mut acc = num_bigint::BigUint::zero();
            for c in cs {
                acc += eval_ir_exact(c, value_of)?;
            }
            Ok(acc)
        }
        FormulaIR::Product(cs) => {
            let mut acc = num_bigint::BigUint::one();
            for c in cs {
                acc *= eval_ir_exact(c, value_of)?;
            }
            Ok(acc)
        }
        FormulaIR::Var(v) => Ok(value_of(v)),
        FormulaIR::Const(c) => {
            if *c.denom() != 1 {
                return Err(VerifyError::NonIntegralConstant);
            }
            Ok(num_bigint::BigUint::from(*c.numer()))
        }
    }
}

/// Bottom-up evaluation of a formula under an assignment.
pub fn eval_ir<V>(f: &FormulaIR<V>, a: &impl Assignment<V>) -> FieldElement {
    match f {
        FormulaIR::Sum(cs) => {
            let mut acc = FieldElement::ZERO;
            for c in cs {
                acc += eval_ir(c, a);
            }
            acc
        }
        FormulaIR::Product(cs) => {
            let mut acc = FieldElement::ONE;
            for c in cs {
                acc *= eval_ir(c, a);
            }
            acc
        }
        FormulaIR::Var(v) => a.value(v),
        FormulaIR::Const(c) => {
            let num = FieldElement::new(*c.numer());
            let den = FieldElement::new(*c.denom());
            num * den.inverse().expect("constant denominator is nonzero mod p")
        }
    }
}

/// Evaluates the compiled formula for `(g, t, n)` without materializing it.
///
/// The recursion runs over (tree node, values of the ancestor colors that
/// have edges into the node's subtree); restricting the memo key to those
/// colors is what makes large `n` affordable.
pub fn eval_streaming(
    g: &PatternGraph,
    t: &BaggyEliminationTree,
    n: usize,
    a: &ColIsoAssignment,
) -> FieldElement {
    if n == 0 {
        return FieldElement::ZERO;
    }
    let t = t.normalize_noncore(g);
    let ids = t.preorder();
    let mut relevant: Vec<Vec<usize>> = vec![Vec::new(); t.len()];
    for &id in &ids {
        let below = t.subtree_union(id);
        relevant[id] = t
            .ancestor_union(id)
            .iter()
            .filter(|&c| !g.neighbors(c).intersection(below).is_empty())
            .collect();
    }
    let mut ctx = StreamCtx {
        g,
        t: &t,
        n,
        a,
        relevant,
        memo: HashMap::new(),
    };
    let mut host = vec![0usize; g.vertex_count() + 1];
    ctx.eval(0, &mut host)
}

struct StreamCtx<'a> {
    g: &'a PatternGraph,
    t: &'a BaggyEliminationTree,
    n: usize,
    a: &'a ColIsoAssignment,
    relevant: Vec<Vec<usize>>,
    memo: HashMap<(usize, Vec<usize>), FieldElement>,
}

impl StreamCtx<'_> {
    fn eval(&mut self, id: usize, host: &mut Vec<usize>) -> FieldElement {
        let key: Vec<usize> = self.relevant[id].iter().map(|&c| host[c]).collect();
        if let Some(&v) = self.memo.get(&(id, key.clone())) {
            return v;
        }
        let bag = self.t.bag(id);
        let above = self.t.ancestor_union(id);
        let mut inner = Vec::new();
        let mut link = Vec::new();
        for (idx, &(i, j)) in self.g.edges().iter().enumerate() {
            if bag.contains(i) && bag.contains(j) {
                inner.push((idx, i, j));
            } else if (bag.contains(i) && above.contains(j))
                || (bag.contains(j) && above.contains(i))
            {
                link.push((idx, i, j));
            }
        }
        let slots = bag.to_vec();
        let mut values = vec![1usize; slots.len()];
        let mut total = FieldElement::ZERO;
        loop {
            for (s, &v) in slots.iter().enumerate() {
                host[v] = values[s];
            }
            let mut term = FieldElement::ONE;
            for &(idx, i, j) in inner.iter().chain(&link) {
                term *= self.a.value(&VariableId {
                    edge_index: idx,
                    u: host[i],
                    v: host[j],
                });
            }
            for &child in &self.t.node(id).children {
                term *= self.eval(child, host);
            }
            total += term;
            if !crate::util::advance_odometer(&mut values, self.n) {
                break;
            }
        }
        for &v in &slots {
            host[v] = 0;
        }
        self.memo.insert((id, key), total);
        total
    }
}

/// A monotone polynomial in canonical form: sorted variable multiset to
/// non-negative coefficient, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap<V: Ord>(BTreeMap<Vec<V>, u128>);

impl<V: Ord + Clone> MonomialMap<V> {
    pub fn empty() -> Self {
        MonomialMap(BTreeMap::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, monomial: &[V]) -> u128 {
        self.0.get(monomial).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<V>, u128)> {
        self.0.iter().map(|(m, &c)| (m, c))
    }

    fn add(&mut self, monomial: Vec<V>, coeff: u128) {
        if coeff == 0 {
            return;
        }
        *self.0.entry(monomial).or_insert(0) += coeff;
    }
}

/// Expands a formula into its canonical monomial map by distributing
/// products over sums. Fails once more than `cap` monomials appear.
pub fn expand<V: Ord + Clone>(
    f: &FormulaIR<V>,
    cap: usize,
) -> Result<MonomialMap<V>, VerifyError> {
    match f {
        FormulaIR::Sum(cs) => {
            let mut acc = MonomialMap::empty();
            for c in cs {
                let part = expand(c, cap)?;
                for (m, coeff) in part.0 {
                    acc.add(m, coeff);
                }
                if acc.len() > cap {
                    return Err(VerifyError::TooLarge {
                        work: acc.len() as u128,
                        cap: cap as u128,
                    });
                }
            }
            Ok(acc)
        }
        FormulaIR::Product(cs) => {
            let mut acc = MonomialMap::empty();
            acc.add(Vec::new(), 1);
            for c in cs {
                let part = expand(c, cap)?;
                let mut next = MonomialMap::empty();
                for (ma, ca) in acc.0 {
                    for (mb, cb) in part.0.iter() {
                        let mut merged = ma.clone();
                        merged.extend(mb.iter().cloned());
                        merged.sort();
                        next.add(merged, ca * cb);
                    }
                }
                if next.len() > cap {
                    return Err(VerifyError::TooLarge {
                        work: next.len() as u128,
                        cap: cap as u128,
                    });
                }
                acc = next;
            }
            Ok(acc)
        }
        FormulaIR::Var(v) => {
            let mut m = MonomialMap::empty();
            m.add(vec![v.clone()], 1);
            Ok(m)
        }
        FormulaIR::Const(c) => {
            if *c.denom() != 1 {
                return Err(VerifyError::NonIntegralConstant);
            }
            let mut m = MonomialMap::empty();
            m.add(Vec::new(), u128::from(*c.numer()));
            Ok(m)
        }
    }
}

/// The exact monomial map of the colored isomorphism polynomial, built by
/// direct enumeration: one monomial per map `V(H) -> [n]`, coefficient 1.
pub fn coliso_monomial_map(
    g: &PatternGraph,
    n: usize,
) -> Result<MonomialMap<VariableId>, VerifyError> {
    enumeration_work(n, g.vertex_count(), DEFAULT_MONOMIAL_CAP as u128)?;
    let mut out = MonomialMap::empty();
    if n == 0 {
        return Ok(out);
    }
    let mut host = vec![1usize; g.vertex_count()];
    loop {
        let monomial: Vec<VariableId> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(idx, &(i, j))| VariableId {
                edge_index: idx,
                u: host[i - 1],
                v: host[j - 1],
            })
            .collect();
        out.add(monomial, 1);
        if !crate::util::advance_odometer(&mut host, n) {
            break;
        }
    }
    Ok(out)
}

/// Result of a randomized identity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PitOutcome<A> {
    Equal,
    Counterexample {
        trial: usize,
        trial_seed: u64,
        assignment: A,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PitReport<A> {
    pub outcome: PitOutcome<A>,
    /// Per-trial seeds derived from the master seed, recorded for replay.
    pub trial_seeds: Vec<u64>,
}

impl<A> PitReport<A> {
    pub fn is_equal(&self) -> bool {
        matches!(self.outcome, PitOutcome::Equal)
    }
}

fn pit_with<A>(
    sample: impl Fn(u64) -> A,
    lhs: impl Fn(&A) -> FieldElement,
    rhs: impl Fn(&A) -> FieldElement,
    trials: usize,
    seed: u64,
) -> PitReport<A> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let trial_seeds: Vec<u64> = (0..trials).map(|_| master.gen()).collect();
    for (trial, &trial_seed) in trial_seeds.iter().enumerate() {
        let assignment = sample(trial_seed);
        if lhs(&assignment) != rhs(&assignment) {
            return PitReport {
                outcome: PitOutcome::Counterexample {
                    trial,
                    trial_seed,
                    assignment,
                },
                trial_seeds,
            };
        }
    }
    PitReport {
        outcome: PitOutcome::Equal,
        trial_seeds,
    }
}

/// Identity test over the colored-isomorphism variable universe: draws
/// `trials` uniform assignments from the seeded generator and compares the
/// two evaluators, reporting the first disagreement.
pub fn pit_equiv_coliso(
    g: &PatternGraph,
    n: usize,
    lhs: impl Fn(&ColIsoAssignment) -> FieldElement,
    rhs: impl Fn(&ColIsoAssignment) -> FieldElement,
    trials: usize,
    seed: u64,
) -> PitReport<ColIsoAssignment> {
    pit_with(
        |s| ColIsoAssignment::random(g, n, &mut ChaCha8Rng::seed_from_u64(s)),
        lhs,
        rhs,
        trials,
        seed,
    )
}

/// Identity test over the host-edge variable universe.
pub fn pit_equiv_hom(
    n: usize,
    lhs: impl Fn(&HomAssignment) -> FieldElement,
    rhs: impl Fn(&HomAssignment) -> FieldElement,
    trials: usize,
    seed: u64,
) -> PitReport<HomAssignment> {
    pit_with(
        |s| HomAssignment::random(n, &mut ChaCha8Rng::seed_from_u64(s)),
        lhs,
        rhs,
        trials,
        seed,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{compile, hom_project};
    use crate::graph::Family;
    use crate::tree::{path7_depth2_tree, BaggyEliminationTree};
    use crate::graph::VertexSubset;

    fn p3() -> PatternGraph {
        Family::Path(3).generate().unwrap()
    }

    fn p3_tree() -> BaggyEliminationTree {
        let mut t = BaggyEliminationTree::with_root(VertexSubset::singleton(2));
        t.add_child(0, VertexSubset::singleton(1));
        t.add_child(0, VertexSubset::singleton(3));
        t
    }

    #[test]
    fn brute_coliso_counts_assignments_on_all_ones() {
        let g = p3();
        let a = ColIsoAssignment::all_ones(&g, 2);
        assert_eq!(brute_coliso(&g, 2, &a).unwrap(), FieldElement::new(8));

        let p7 = Family::Path(7).generate().unwrap();
        let a = ColIsoAssignment::all_ones(&p7, 3);
        assert_eq!(brute_coliso(&p7, 3, &a).unwrap(), FieldElement::new(2187));
    }

    #[test]
    fn brute_coliso_with_one_zeroed_variable() {
        let g = p3();
        let mut a = ColIsoAssignment::all_ones(&g, 2);
        // kill x_{(1,1),(2,1)}: the two assignments with u1 = u2 = 1 vanish
        a.set(
            VariableId {
                edge_index: 0,
                u: 1,
                v: 1,
            },
            FieldElement::ZERO,
        );
        assert_eq!(brute_coliso(&g, 2, &a).unwrap(), FieldElement::new(6));
    }

    #[test]
    fn brute_hom_examples() {
        let g = p3();
        let a = HomAssignment::all_ones(3);
        assert_eq!(brute_hom(&g, 3, &a).unwrap(), FieldElement::new(12));

        let k3 = Family::Complete(3).generate().unwrap();
        assert_eq!(
            brute_hom(&k3, 2, &HomAssignment::all_ones(2)).unwrap(),
            FieldElement::ZERO
        );
        assert_eq!(
            brute_hom(&k3, 3, &HomAssignment::all_ones(3)).unwrap(),
            FieldElement::new(6)
        );
    }

    #[test]
    fn eval_matches_brute_on_compiled_formula() {
        let g = p3();
        let f = compile(&g, &p3_tree(), 2).unwrap();
        let a = ColIsoAssignment::all_ones(&g, 2);
        assert_eq!(eval_ir(&f, &a), FieldElement::new(8));
        assert_eq!(eval_ir(&f, &a), brute_coliso(&g, 2, &a).unwrap());

        let p7 = Family::Path(7).generate().unwrap();
        let f = compile(&p7, &path7_depth2_tree(), 3).unwrap();
        let a = ColIsoAssignment::all_ones(&p7, 3);
        assert_eq!(eval_ir(&f, &a), FieldElement::new(2187));
    }

    #[test]
    fn eval_const_one() {
        let f: FormulaIR<VariableId> =
            FormulaIR::Const(num_rational::Ratio::from_integer(1));
        let g = p3();
        let a = ColIsoAssignment::all_ones(&g, 1);
        assert_eq!(eval_ir(&f, &a), FieldElement::ONE);
    }

    #[test]
    fn exact_evaluation_counts_monomials_without_reduction() {
        use num_bigint::BigUint;
        let p7 = Family::Path(7).generate().unwrap();
        let f = compile(&p7, &path7_depth2_tree(), 3).unwrap();
        let ones = |_: &VariableId| BigUint::from(1u32);
        assert_eq!(eval_ir_exact(&f, &ones).unwrap(), BigUint::from(2187u32));
        // doubling every variable scales each degree-6 monomial by 2^6
        let twos = |_: &VariableId| BigUint::from(2u32);
        assert_eq!(
            eval_ir_exact(&f, &twos).unwrap(),
            BigUint::from(2187u32 * 64)
        );
    }

    #[test]
    fn streaming_matches_materialized_eval() {
        let g = p3();
        let f = compile(&g, &p3_tree(), 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let a = ColIsoAssignment::random(&g, 2, &mut rng);
            assert_eq!(eval_streaming(&g, &p3_tree(), 2, &a), eval_ir(&f, &a));
        }
    }

    #[test]
    fn streaming_all_ones_closed_forms() {
        let p7 = Family::Path(7).generate().unwrap();
        let a = ColIsoAssignment::all_ones(&p7, 50);
        let expected = FieldElement::new(50).pow(7);
        assert_eq!(eval_streaming(&p7, &path7_depth2_tree(), 50, &a), expected);

        let k3 = Family::Complete(3).generate().unwrap();
        let t = BaggyEliminationTree::with_root([1, 2, 3].into_iter().collect());
        let a = ColIsoAssignment::all_ones(&k3, 4);
        assert_eq!(
            eval_streaming(&k3, &t, 4, &a),
            FieldElement::new(64)
        );
    }

    #[test]
    fn expand_compiled_p3_gives_eight_unit_monomials() {
        let g = p3();
        let f = compile(&g, &p3_tree(), 2).unwrap();
        let m = expand(&f, DEFAULT_MONOMIAL_CAP).unwrap();
        assert_eq!(m.len(), 8);
        assert!(m.iter().all(|(_, c)| c == 1));
        assert_eq!(m, coliso_monomial_map(&g, 2).unwrap());
    }

    #[test]
    fn expand_accumulates_and_annihilates() {
        let a = VariableId {
            edge_index: 0,
            u: 1,
            v: 1,
        };
        let double: FormulaIR<VariableId> =
            FormulaIR::Sum(vec![FormulaIR::Var(a), FormulaIR::Var(a)]);
        let m = expand(&double, 10).unwrap();
        assert_eq!(m.coefficient(&[a]), 2);

        let zeroed: FormulaIR<VariableId> = FormulaIR::Product(vec![
            FormulaIR::Var(a),
            FormulaIR::Const(num_rational::Ratio::from_integer(0)),
        ]);
        assert!(expand(&zeroed, 10).unwrap().is_empty());
    }

    #[test]
    fn pit_accepts_identical_and_rejects_mutated() {
        let g = Family::Path(7).generate().unwrap();
        let f = compile(&g, &path7_depth2_tree(), 8).unwrap();
        let report = pit_equiv_coliso(
            &g,
            8,
            |a| eval_ir(&f, a),
            |a| brute_coliso(&g, 8, a).unwrap(),
            20,
            1,
        );
        assert!(report.is_equal());
        assert_eq!(report.trial_seeds.len(), 20);

        // reflexivity
        let report = pit_equiv_coliso(&g, 8, |a| eval_ir(&f, a), |a| eval_ir(&f, a), 5, 2);
        assert!(report.is_equal());
    }

    #[test]
    fn hom_projection_vanishes_at_host_size_one() {
        let k3 = Family::Complete(3).generate().unwrap();
        let t = BaggyEliminationTree::with_root([1, 2, 3].into_iter().collect());
        let h = hom_project(&compile(&k3, &t, 1).unwrap());
        assert_eq!(eval_ir(&h, &HomAssignment::all_ones(1)), FieldElement::ZERO);
    }

    #[test]
    fn hom_projection_agrees_with_brute_hom() {
        let g = p3();
        let f = compile(&g, &p3_tree(), 3).unwrap();
        let h = hom_project(&f);
        assert_eq!(
            eval_ir(&h, &HomAssignment::all_ones(3)),
            FieldElement::new(12)
        );
        let report = pit_equiv_hom(
            3,
            |a| eval_ir(&h, a),
            |a| brute_hom(&g, 3, a).unwrap(),
            20,
            3,
        );
        assert!(report.is_equal());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let g = Family::Path(7).generate().unwrap();
        let a = ColIsoAssignment::all_ones(&g, 30);
        // 30^7 = 21.8e9 > 1e9
        assert!(matches!(
            brute_coliso(&g, 30, &a),
            Err(VerifyError::TooLarge { .. })
        ));
    }
}
