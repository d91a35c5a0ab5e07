//! Executable checks of the identities relating the neighborhood
//! polynomials to each other and to `I`, `D`, `S`.
//!
//! A check computes the left-hand side with the complex engine on the input
//! (or composite) graph, assembles the right-hand side from the closed
//! formula, and reports the exact residual `lhs - rhs`.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classic::{
    domination_polynomial, independence_polynomial, subgraph_polynomial, DominationMethod, IndependenceMethod,
    SubgraphMethod,
};
use crate::complex::{
    connected_neighborhood_polynomial, disconnected_neighborhood_polynomial, independent_neighborhood_polynomial,
    neighborhood_polynomial, resolve_method, Method,
};
use crate::error::ComputeError;
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    /// `N^(i)(T) = N(T)` for trees.
    TreeIndependent,
    /// `N^(i)(C_n) = N(C_n)` for `n > 3`.
    CycleIndependent,
    /// `N^(c)(K_n) = N(K_n) = (1+x)^n - x^n`; `N^(c) = 1 + nx` for trees
    /// (`n >= 2`) and cycles (`n > 3`).
    ClosedForms,
    UnionIndependent,
    UnionConnected,
    /// `N^(i)(G1 + G2) = I(G1) + I(G2) - 1`.
    JoinIndependent,
    /// `N^(i)(G1 + G2) = I(G1 + G2)`.
    JoinIndependentCorollary,
    /// The connected-join formula exactly as stated; its right-hand side
    /// lacks the empty set, so it misses by the constant 1.
    JoinConnectedAsPrinted,
    /// The connected-join formula plus the constant 1.
    JoinConnectedCorrected,
    CartesianIndependent,
    /// `N^(i)(exp(G, r)) = N^(i)(G, (1+x)^r - 1)`.
    ExpansionIndependent,
    /// `D(G) + N(complement(G)) = (1+x)^n`.
    DominationComplement,
    /// `N = N^(i) + N^(c) + N^(d) - 1 - (n - iso(G)) x`.
    Decomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Unary,
    WithParameter,
    Pair,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 13] = [
        IdentityKind::TreeIndependent,
        IdentityKind::CycleIndependent,
        IdentityKind::ClosedForms,
        IdentityKind::UnionIndependent,
        IdentityKind::UnionConnected,
        IdentityKind::JoinIndependent,
        IdentityKind::JoinIndependentCorollary,
        IdentityKind::JoinConnectedAsPrinted,
        IdentityKind::JoinConnectedCorrected,
        IdentityKind::CartesianIndependent,
        IdentityKind::ExpansionIndependent,
        IdentityKind::DominationComplement,
        IdentityKind::Decomposition,
    ];

    /// Every kind except the as-printed connected join, which is opt-in.
    pub fn default_suite() -> Vec<IdentityKind> {
        Self::ALL.into_iter().filter(|&k| k != IdentityKind::JoinConnectedAsPrinted).collect()
    }

    pub fn tag(self) -> &'static str {
        match self {
            IdentityKind::TreeIndependent => "tree_independent",
            IdentityKind::CycleIndependent => "cycle_independent",
            IdentityKind::ClosedForms => "closed_forms",
            IdentityKind::UnionIndependent => "union_independent",
            IdentityKind::UnionConnected => "union_connected",
            IdentityKind::JoinIndependent => "join_independent",
            IdentityKind::JoinIndependentCorollary => "join_independent_corollary",
            IdentityKind::JoinConnectedAsPrinted => "join_connected_as_printed",
            IdentityKind::JoinConnectedCorrected => "join_connected_corrected",
            IdentityKind::CartesianIndependent => "cartesian_independent",
            IdentityKind::ExpansionIndependent => "expansion_independent",
            IdentityKind::DominationComplement => "domination_complement",
            IdentityKind::Decomposition => "decomposition",
        }
    }

    pub fn from_tag(tag: &str) -> Option<IdentityKind> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }

    pub fn arity(self) -> Arity {
        match self {
            IdentityKind::TreeIndependent
            | IdentityKind::CycleIndependent
            | IdentityKind::ClosedForms
            | IdentityKind::DominationComplement
            | IdentityKind::Decomposition => Arity::Unary,
            IdentityKind::ExpansionIndependent => Arity::WithParameter,
            _ => Arity::Pair,
        }
    }

    /// Hypotheses an input must meet for the identity to apply.
    pub fn preconditions(self) -> &'static str {
        match self {
            IdentityKind::TreeIndependent => "input is a tree",
            IdentityKind::CycleIndependent => "input is a cycle of order > 3",
            IdentityKind::ClosedForms => "input is complete, a tree of order >= 2, or a cycle of order > 3",
            IdentityKind::CartesianIndependent => "neither factor has an isolated vertex",
            IdentityKind::ExpansionIndependent => "expansion factor r >= 1",
            IdentityKind::DominationComplement | IdentityKind::Decomposition => "order <= 24 (oracle-backed)",
            _ => "none",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone)]
pub enum IdentityInput {
    Graph(Graph),
    Expansion(Graph, usize),
    Pair(Graph, Graph),
}

impl IdentityInput {
    fn descriptors(&self) -> Vec<String> {
        match self {
            IdentityInput::Graph(g) => vec![write_graph6(g)],
            IdentityInput::Expansion(g, r) => vec![write_graph6(g), format!("r={r}")],
            IdentityInput::Pair(a, b) => vec![write_graph6(a), write_graph6(b)],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub inputs: Vec<String>,
    pub lhs: Option<Polynomial>,
    pub rhs: Option<Polynomial>,
    /// `lhs - rhs`; `Pass` exactly when this is zero.
    pub residual: Option<Polynomial>,
    pub verdict: Verdict,
    pub notes: String,
}

impl IdentityReport {
    fn compared(kind: IdentityKind, input: &IdentityInput, lhs: Polynomial, rhs: Polynomial, notes: String) -> Self {
        let residual = &lhs - &rhs;
        let verdict = if residual.is_zero() { Verdict::Pass } else { Verdict::Fail };
        IdentityReport {
            kind,
            inputs: input.descriptors(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            residual: Some(residual),
            verdict,
            notes,
        }
    }

    fn inapplicable(kind: IdentityKind, input: &IdentityInput, notes: impl Into<String>) -> Self {
        IdentityReport {
            kind,
            inputs: input.descriptors(),
            lhs: None,
            rhs: None,
            residual: None,
            verdict: Verdict::Inapplicable,
            notes: notes.into(),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} {} [{}]", self.verdict.as_str(), self.kind, self.inputs.join(" "))?;
        if let (Some(lhs), Some(rhs), Some(res)) = (&self.lhs, &self.rhs, &self.residual) {
            write!(f, " lhs = {lhs}; rhs = {rhs}; residual = {res}")?;
        }
        if !self.notes.is_empty() {
            write!(f, " ({})", self.notes)?;
        }
        Ok(())
    }
}

fn route(g: &Graph, method: Method) -> &'static str {
    resolve_method(g, method).name()
}

/// `I(G) - 1`, with `I` by recursion.
fn independence_minus_one(g: &Graph) -> Result<Polynomial, ComputeError> {
    Ok(independence_polynomial(g, IndependenceMethod::Recursive)? - Polynomial::one())
}

/// Checks one identity on one input.
///
/// Inputs outside an identity's hypotheses produce an `Inapplicable`
/// report. Composite graphs above the supported order, and oracle-backed
/// terms above the oracle limit, are errors.
pub fn verify_identity(
    kind: IdentityKind,
    input: &IdentityInput,
    method: Method,
) -> Result<IdentityReport, ComputeError> {
    use IdentityKind as K;

    let expected = kind.arity();
    let actual = match input {
        IdentityInput::Graph(_) => Arity::Unary,
        IdentityInput::Expansion(..) => Arity::WithParameter,
        IdentityInput::Pair(..) => Arity::Pair,
    };
    if expected != actual {
        return Ok(IdentityReport::inapplicable(kind, input, format!("expects {expected:?} input, got {actual:?}")));
    }
    let empty = match input {
        IdentityInput::Graph(g) | IdentityInput::Expansion(g, _) => g.order() == 0,
        IdentityInput::Pair(a, b) => a.order() == 0 || b.order() == 0,
    };
    if empty {
        return Ok(IdentityReport::inapplicable(kind, input, "graph with no vertices"));
    }

    let report = match (kind, input) {
        (K::TreeIndependent, IdentityInput::Graph(g)) => {
            if !g.is_tree() {
                return Ok(IdentityReport::inapplicable(kind, input, "not a tree"));
            }
            let lhs = independent_neighborhood_polynomial(g, method)?;
            let rhs = neighborhood_polynomial(g, method)?;
            IdentityReport::compared(kind, input, lhs, rhs, format!("N_i vs N via {}", route(g, method)))
        }
        (K::CycleIndependent, IdentityInput::Graph(g)) => {
            if !(g.is_cycle() && g.order() > 3) {
                return Ok(IdentityReport::inapplicable(kind, input, "not a cycle of order > 3"));
            }
            let lhs = independent_neighborhood_polynomial(g, method)?;
            let rhs = neighborhood_polynomial(g, method)?;
            IdentityReport::compared(kind, input, lhs, rhs, format!("N_i vs N via {}", route(g, method)))
        }
        (K::ClosedForms, IdentityInput::Graph(g)) => return closed_forms(kind, input, g, method),
        (K::UnionIndependent | K::UnionConnected, IdentityInput::Pair(a, b)) => {
            let poly = if kind == K::UnionIndependent {
                independent_neighborhood_polynomial
            } else {
                connected_neighborhood_polynomial
            };
            let union = a.disjoint_union(b)?;
            let lhs = poly(&union, method)?;
            let rhs = poly(a, method)? + poly(b, method)? - Polynomial::one();
            IdentityReport::compared(kind, input, lhs, rhs, format!("lhs via {}", route(&union, method)))
        }
        (K::JoinIndependent | K::JoinIndependentCorollary, IdentityInput::Pair(a, b)) => {
            let joined = a.join(b)?;
            let lhs = independent_neighborhood_polynomial(&joined, method)?;
            let rhs = if kind == K::JoinIndependent {
                independence_minus_one(a)? + independence_polynomial(b, IndependenceMethod::Recursive)?
            } else {
                independence_polynomial(&joined, IndependenceMethod::Recursive)?
            };
            IdentityReport::compared(
                kind,
                input,
                lhs,
                rhs,
                format!("lhs via {}; I by recursion", route(&joined, method)),
            )
        }
        (K::JoinConnectedAsPrinted | K::JoinConnectedCorrected, IdentityInput::Pair(a, b)) => {
            let joined = a.join(b)?;
            let lhs = connected_neighborhood_polynomial(&joined, method)?;
            let s1 = subgraph_polynomial(a, SubgraphMethod::Growth)?;
            let s2 = subgraph_polynomial(b, SubgraphMethod::Growth)?;
            let n1 = neighborhood_polynomial(a, method)? - Polynomial::one();
            let n2 = neighborhood_polynomial(b, method)? - Polynomial::one();
            let p1 = Polynomial::binomial_power(a.order()) - Polynomial::one();
            let p2 = Polynomial::binomial_power(b.order()) - Polynomial::one();
            let mut rhs = s1 + s2 + &n1 * &p2 + &n2 * &p1 - &n1 * &n2;
            let mut notes = format!("lhs via {}; S by growth, without the empty set", route(&joined, method));
            if kind == K::JoinConnectedCorrected {
                rhs = rhs + Polynomial::one();
                notes.push_str("; +1 for the empty set");
            }
            IdentityReport::compared(kind, input, lhs, rhs, notes)
        }
        (K::CartesianIndependent, IdentityInput::Pair(a, b)) => {
            if a.isolated_count() > 0 || b.isolated_count() > 0 {
                return Ok(IdentityReport::inapplicable(kind, input, "a factor has an isolated vertex"));
            }
            let product = a.cartesian_product(b)?;
            let lhs = independent_neighborhood_polynomial(&product, method)?;
            let (v1, v2) = (a.order(), b.order());
            let (e1, e2) = (a.edge_count(), b.edge_count());
            let local1 = (0..v1)
                .map(|u| independence_minus_one(&a.induced_subgraph(a.neighbors(u))))
                .collect::<Result<Vec<_>, _>>()?;
            let local2 = (0..v2)
                .map(|v| independence_minus_one(&b.induced_subgraph(b.neighbors(v))))
                .collect::<Result<Vec<_>, _>>()?;
            let mut cross = Polynomial::zero();
            for p in &local1 {
                for q in &local2 {
                    cross = cross + p * q;
                }
            }
            let ni1 = independent_neighborhood_polynomial(a, method)? - Polynomial::one();
            let ni2 = independent_neighborhood_polynomial(b, method)? - Polynomial::one();
            let rhs = Polynomial::one() + ni2.scale(&v1.into()) + ni1.scale(&v2.into()) + cross
                - Polynomial::monomial(v1 * v2, 1)
                - Polynomial::monomial(2 * e1 * e2, 2);
            IdentityReport::compared(kind, input, lhs, rhs, format!("lhs via {}", route(&product, method)))
        }
        (K::ExpansionIndependent, IdentityInput::Expansion(g, r)) => {
            if *r == 0 {
                return Ok(IdentityReport::inapplicable(kind, input, "expansion factor must be >= 1"));
            }
            let expanded = g.expansion(*r)?;
            let lhs = independent_neighborhood_polynomial(&expanded, method)?;
            let substitution = Polynomial::binomial_power(*r) - Polynomial::one();
            let rhs = independent_neighborhood_polynomial(g, method)?.compose(&substitution);
            IdentityReport::compared(kind, input, lhs, rhs, format!("lhs via {}", route(&expanded, method)))
        }
        (K::DominationComplement, IdentityInput::Graph(g)) => {
            let complement = g.complement();
            let lhs =
                domination_polynomial(g, DominationMethod::Oracle)? + neighborhood_polynomial(&complement, method)?;
            let rhs = Polynomial::binomial_power(g.order());
            let notes = format!("D by subset sweep; N of complement via {}", route(&complement, method));
            IdentityReport::compared(kind, input, lhs, rhs, notes)
        }
        (K::Decomposition, IdentityInput::Graph(g)) => {
            let lhs = neighborhood_polynomial(g, method)?;
            let nd = disconnected_neighborhood_polynomial(g, Method::Oracle)?;
            let correction = Polynomial::from_coeffs([1, (g.order() - g.isolated_count()) as i64]);
            let rhs =
                independent_neighborhood_polynomial(g, method)? + connected_neighborhood_polynomial(g, method)? + nd
                    - correction;
            let notes = format!("N, N_i, N_c via {}; N_d by direct sweep", route(g, method));
            IdentityReport::compared(kind, input, lhs, rhs, notes)
        }
        _ => unreachable!("arity checked above"),
    };
    Ok(report)
}

fn closed_forms(
    kind: IdentityKind,
    input: &IdentityInput,
    g: &Graph,
    method: Method,
) -> Result<IdentityReport, ComputeError> {
    let n = g.order();
    let nc = connected_neighborhood_polynomial(g, method)?;
    if g.is_complete() {
        let closed = Polynomial::binomial_power(n) - Polynomial::monomial(1, n);
        let nn = neighborhood_polynomial(g, method)?;
        let mut report = IdentityReport::compared(
            kind,
            input,
            nc,
            closed.clone(),
            format!("complete graph, N_c via {}", route(g, method)),
        );
        // both N_c and N must equal the closed form; surface whichever misses
        if report.verdict == Verdict::Pass && nn != closed {
            report = IdentityReport::compared(kind, input, nn, closed, "complete graph, N vs closed form".into());
        }
        return Ok(report);
    }
    let family = if n >= 2 && g.is_tree() {
        "tree"
    } else if n > 3 && g.is_cycle() {
        "cycle"
    } else {
        return Ok(IdentityReport::inapplicable(
            kind,
            input,
            "not complete, a tree of order >= 2, or a cycle of order > 3",
        ));
    };
    let closed = Polynomial::from_coeffs([1, n as i64]);
    Ok(IdentityReport::compared(kind, input, nc, closed, format!("{family}, N_c via {}", route(g, method))))
}

/// How a suite draws its inputs from a corpus.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub kinds: Vec<IdentityKind>,
    /// Number of ordered pairs drawn (with replacement) for binary identities.
    pub pairs: usize,
    pub seed: u64,
    /// Expansion factors applied to every corpus graph.
    pub expansion_factors: Vec<usize>,
    pub method: Method,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            kinds: IdentityKind::default_suite(),
            pairs: 200,
            seed: 0,
            expansion_factors: vec![1, 2, 3],
            method: Method::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TagCounts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub per_identity: BTreeMap<&'static str, TagCounts>,
}

impl SuiteSummary {
    pub fn total(&self) -> TagCounts {
        self.per_identity.values().fold(TagCounts::default(), |acc, c| TagCounts {
            pass: acc.pass + c.pass,
            fail: acc.fail + c.fail,
            inapplicable: acc.inapplicable + c.inapplicable,
        })
    }

    pub fn has_failures(&self) -> bool {
        self.total().fail > 0
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
    pub summary: SuiteSummary,
}

/// Draws `count` index pairs into a corpus of `len` graphs.
pub fn sample_pairs(len: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    if len == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (rng.gen_range(0..len), rng.gen_range(0..len))).collect()
}

/// Runs every requested identity over the corpus. Unary identities see each
/// graph; binary ones see the seeded pair sample; the expansion identity sees
/// each graph with each configured factor. Reports come out grouped by
/// identity in the order of `config.kinds`, then in corpus/sample order.
///
/// Inputs that the engine cannot evaluate (composite order above 64, or an
/// oracle-backed term above order 24) are reported as inapplicable with the
/// reason in the notes.
pub fn run_suite(corpus: &[Graph], config: &SuiteConfig) -> SuiteOutcome {
    let mut kinds = Vec::new();
    for &k in &config.kinds {
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    let pairs = sample_pairs(corpus.len(), config.pairs, config.seed);
    let mut jobs: Vec<(IdentityKind, IdentityInput)> = Vec::new();
    for &kind in &kinds {
        match kind.arity() {
            Arity::Unary => jobs.extend(corpus.iter().map(|g| (kind, IdentityInput::Graph(g.clone())))),
            Arity::WithParameter => {
                for g in corpus {
                    for &r in &config.expansion_factors {
                        jobs.push((kind, IdentityInput::Expansion(g.clone(), r)));
                    }
                }
            }
            Arity::Pair => jobs
                .extend(pairs.iter().map(|&(i, j)| (kind, IdentityInput::Pair(corpus[i].clone(), corpus[j].clone())))),
        }
    }
    let reports: Vec<IdentityReport> = jobs
        .par_iter()
        .map(|(kind, input)| match verify_identity(*kind, input, config.method) {
            Ok(report) => report,
            Err(e) => IdentityReport::inapplicable(*kind, input, format!("not evaluated: {e}")),
        })
        .collect();
    let mut summary = SuiteSummary::default();
    for &kind in &kinds {
        summary.per_identity.entry(kind.tag()).or_default();
    }
    for r in &reports {
        let counts = summary.per_identity.entry(r.kind.tag()).or_default();
        match r.verdict {
            Verdict::Pass => counts.pass += 1,
            Verdict::Fail => counts.fail += 1,
            Verdict::Inapplicable => counts.inapplicable += 1,
        }
    }
    SuiteOutcome { reports, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family, random_corpus};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    fn g(expr: &str) -> Graph {
        family(expr).unwrap()
    }

    fn pair(a: &str, b: &str) -> IdentityInput {
        IdentityInput::Pair(g(a), g(b))
    }

    fn check(kind: IdentityKind, input: IdentityInput) -> IdentityReport {
        verify_identity(kind, &input, Method::Auto).unwrap()
    }

    #[test]
    fn tags_round_trip() {
        for k in IdentityKind::ALL {
            assert_eq!(IdentityKind::from_tag(k.tag()), Some(k));
        }
        assert_eq!(IdentityKind::from_tag("nope"), None);
        assert_eq!(IdentityKind::default_suite().len(), 12);
    }

    #[test]
    fn join_independent_on_two_vertices() {
        let r = check(IdentityKind::JoinIndependent, pair("complete:1", "complete:1"));
        assert_eq!(r.lhs, Some(p(&[1, 2])));
        assert_eq!(r.rhs, Some(p(&[1, 2])));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn cartesian_on_square() {
        let r = check(IdentityKind::CartesianIndependent, pair("complete:2", "complete:2"));
        assert_eq!(r.lhs, Some(p(&[1, 4, 2])));
        assert_eq!(r.rhs, Some(p(&[1, 4, 2])));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn cartesian_requires_no_isolated_vertex() {
        let r = check(IdentityKind::CartesianIndependent, pair("complete:2", "edgeless:2"));
        assert_eq!(r.verdict, Verdict::Inapplicable);
        assert!(r.residual.is_none());
    }

    #[test]
    fn connected_join_as_printed_misses_the_empty_set() {
        let r = check(IdentityKind::JoinConnectedAsPrinted, pair("complete:1", "complete:1"));
        assert_eq!(r.lhs, Some(p(&[1, 2])));
        assert_eq!(r.rhs, Some(p(&[0, 2])));
        assert_eq!(r.residual, Some(p(&[1])));
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn connected_join_corrected() {
        let r = check(IdentityKind::JoinConnectedCorrected, pair("complete:1", "complete:2"));
        assert_eq!(r.lhs, Some(p(&[1, 3, 3])));
        assert_eq!(r.rhs, Some(p(&[1, 3, 3])));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn decomposition_on_path() {
        let r = check(IdentityKind::Decomposition, IdentityInput::Graph(g("path:3")));
        assert_eq!(r.lhs, Some(p(&[1, 3, 1])));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn expansion_of_an_edge() {
        let r = check(IdentityKind::ExpansionIndependent, IdentityInput::Expansion(g("complete:2"), 2));
        assert_eq!(r.rhs, Some(p(&[1, 4, 2])));
        assert_eq!(r.verdict, Verdict::Pass);
        let r = check(IdentityKind::ExpansionIndependent, IdentityInput::Expansion(g("complete:2"), 0));
        assert_eq!(r.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn domination_on_path() {
        let r = check(IdentityKind::DominationComplement, IdentityInput::Graph(g("path:3")));
        assert_eq!(r.rhs, Some(p(&[1, 3, 3, 1])));
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn closed_forms_classification() {
        let r = check(IdentityKind::ClosedForms, IdentityInput::Graph(g("complete:4")));
        assert_eq!(r.rhs, Some(p(&[1, 4, 6, 4])));
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(check(IdentityKind::ClosedForms, IdentityInput::Graph(g("complete:1"))).verdict, Verdict::Pass);
        assert_eq!(check(IdentityKind::ClosedForms, IdentityInput::Graph(g("star:6"))).rhs, Some(p(&[1, 6])));
        assert_eq!(check(IdentityKind::ClosedForms, IdentityInput::Graph(g("cycle:7"))).rhs, Some(p(&[1, 7])));
        assert_eq!(
            check(IdentityKind::ClosedForms, IdentityInput::Graph(g("complete_bipartite:2,3"))).verdict,
            Verdict::Inapplicable
        );
        assert_eq!(
            check(IdentityKind::CycleIndependent, IdentityInput::Graph(g("cycle:3"))).verdict,
            Verdict::Inapplicable
        );
        assert_eq!(
            check(IdentityKind::TreeIndependent, IdentityInput::Graph(g("cycle:5"))).verdict,
            Verdict::Inapplicable
        );
    }

    #[test]
    fn wrong_arity_and_empty_graphs_are_inapplicable() {
        let r = check(IdentityKind::Decomposition, pair("path:3", "path:3"));
        assert_eq!(r.verdict, Verdict::Inapplicable);
        let r = check(IdentityKind::Decomposition, IdentityInput::Graph(Graph::edgeless(0).unwrap()));
        assert_eq!(r.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn capacity_errors_surface() {
        let err =
            verify_identity(IdentityKind::UnionIndependent, &pair("path:40", "path:40"), Method::Auto).unwrap_err();
        assert!(err.is_capacity());
        let err = verify_identity(IdentityKind::Decomposition, &IdentityInput::Graph(g("path:30")), Method::Auto)
            .unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn suite_on_empty_kind_set() {
        let corpus = vec![g("path:3")];
        let config = SuiteConfig { kinds: vec![], ..SuiteConfig::default() };
        let out = run_suite(&corpus, &config);
        assert!(out.reports.is_empty());
        assert_eq!(out.summary.total(), TagCounts::default());
    }

    #[test]
    fn suite_on_single_complete_graph() {
        let out = run_suite(
            &[g("complete:4")],
            &SuiteConfig { kinds: vec![IdentityKind::ClosedForms], ..SuiteConfig::default() },
        );
        assert_eq!(out.reports.len(), 1);
        assert_eq!(out.reports[0].verdict, Verdict::Pass);
        assert_eq!(out.reports[0].lhs, Some(p(&[1, 4, 6, 4])));
    }

    #[test]
    fn suite_is_deterministic_and_marks_capacity() {
        let corpus = random_corpus(20, 8, &[0.3, 0.6], 4).unwrap();
        let config = SuiteConfig { pairs: 15, seed: 9, ..SuiteConfig::default() };
        let a = run_suite(&corpus, &config);
        let b = run_suite(&corpus, &config);
        let render = |o: &SuiteOutcome| o.reports.iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(render(&a), render(&b));
        assert!(!a.summary.has_failures(), "{:?}", a.summary);

        let wide = vec![g("path:20"), g("cycle:20")];
        let out = run_suite(
            &wide,
            &SuiteConfig { kinds: vec![IdentityKind::CartesianIndependent], pairs: 3, ..SuiteConfig::default() },
        );
        assert!(out.reports.iter().all(|r| r.verdict == Verdict::Inapplicable && r.notes.contains("not evaluated")));
    }
}
