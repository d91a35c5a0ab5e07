//! Counting polynomials of the neighborhood complex
//! `𝒩(G) = { A ⊆ V : A ⊆ N(v) for some v }`.
//!
//! Each polynomial has two routes:
//!
//! * an oracle that sweeps all `2^n` subsets and tests membership against
//!   every open neighborhood directly;
//! * a fast path using inclusion–exclusion over the maximal distinct
//!   neighborhoods `M`: for `k >= 1`,
//!   `n_k = Σ_{∅≠S⊆M} (-1)^{|S|+1} f_k(∩S)`, where `f_k` counts the
//!   qualifying `k`-subsets of the intersection (all of them, the
//!   independent ones, or the connected ones).
//!
//! The constant term is 1 for every graph with at least one vertex: the
//! empty set lies inside any open neighborhood.

use std::collections::HashMap;

use crate::classic::{binomial_row, connected_counts, counts_to_polynomial, for_each_subset, independence_counts};
use crate::error::{require_nonempty, require_oracle_order, ComputeError};
use crate::graph::Graph;
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;

/// Largest `|M|` for which [`Method::Auto`] takes the fast path.
pub const AUTO_THRESHOLD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Fast,
    /// Fast when `|M| <= AUTO_THRESHOLD` (or when the graph is too large for
    /// the oracle), otherwise oracle.
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Fast => "fast",
            Method::Auto => "auto",
        }
    }
}

/// A subset together with a vertex whose open neighborhood contains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexMembershipWitness {
    pub subset: VertexSet,
    pub witness: Option<usize>,
}

impl ComplexMembershipWitness {
    pub fn is_member(&self) -> bool {
        self.witness.is_some()
    }
}

/// Finds the lowest-labeled `v` with `subset ⊆ N(v)`.
pub fn membership_witness(g: &Graph, subset: VertexSet) -> ComplexMembershipWitness {
    let witness = (0..g.order()).find(|&v| subset.is_subset(g.neighbors(v)));
    ComplexMembershipWitness { subset, witness }
}

/// Which members of the complex a polynomial counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Restriction {
    None,
    Independent,
    Connected,
}

/// Resolves `Auto` to the route that would actually run on `g`.
pub fn resolve_method(g: &Graph, method: Method) -> Method {
    match method {
        Method::Auto => {
            let m = g.maximal_distinct_neighborhoods().len();
            if m <= AUTO_THRESHOLD || g.order() > crate::error::ORACLE_MAX_ORDER {
                Method::Fast
            } else {
                Method::Oracle
            }
        }
        other => other,
    }
}

fn run(g: &Graph, method: Method, restriction: Restriction) -> Result<Polynomial, ComputeError> {
    require_nonempty(g.order())?;
    match resolve_method(g, method) {
        Method::Oracle => oracle(g, restriction),
        _ => Ok(fast(g, restriction)),
    }
}

/// `N(G, x)`.
pub fn neighborhood_polynomial(g: &Graph, method: Method) -> Result<Polynomial, ComputeError> {
    run(g, method, Restriction::None)
}

/// `N^(i)(G, x)`: members of the complex that are independent sets.
pub fn independent_neighborhood_polynomial(g: &Graph, method: Method) -> Result<Polynomial, ComputeError> {
    run(g, method, Restriction::Independent)
}

/// `N^(c)(G, x)`: members of the complex inducing a connected subgraph,
/// the empty set included.
pub fn connected_neighborhood_polynomial(g: &Graph, method: Method) -> Result<Polynomial, ComputeError> {
    run(g, method, Restriction::Connected)
}

/// `N^(d)(G, x)`: members `X` with `1 < k(G[X]) < |X|`.
///
/// The oracle sweeps directly; the fast path rearranges the decomposition
/// `N = N^(i) + N^(c) + N^(d) - 1 - (n - iso(G)) x`.
pub fn disconnected_neighborhood_polynomial(g: &Graph, method: Method) -> Result<Polynomial, ComputeError> {
    require_nonempty(g.order())?;
    match resolve_method(g, method) {
        Method::Oracle => {
            require_oracle_order("neighborhood complex oracle", g.order())?;
            let neighborhoods = neighborhood_bits(g);
            let mut counts = vec![0u64; g.order() + 1];
            for_each_subset(g.order(), |mask| {
                let size = mask.count_ones() as usize;
                if size < 3 || !is_member(&neighborhoods, mask) {
                    return;
                }
                let k = g.component_count_bits(mask);
                if 1 < k && k < size {
                    counts[size] += 1;
                }
            });
            Ok(counts_to_polynomial(&counts))
        }
        _ => {
            let n = fast(g, Restriction::None);
            let ni = fast(g, Restriction::Independent);
            let nc = fast(g, Restriction::Connected);
            let correction = Polynomial::from_coeffs([1, (g.order() - g.isolated_count()) as i64]);
            Ok(n - ni - nc + correction)
        }
    }
}

fn neighborhood_bits(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbor_bits(v)).collect()
}

#[inline]
fn is_member(neighborhoods: &[u64], mask: u64) -> bool {
    neighborhoods.iter().any(|&nb| mask & !nb == 0)
}

fn oracle(g: &Graph, restriction: Restriction) -> Result<Polynomial, ComputeError> {
    require_oracle_order("neighborhood complex oracle", g.order())?;
    let neighborhoods = neighborhood_bits(g);
    let mut counts = vec![0u64; g.order() + 1];
    for_each_subset(g.order(), |mask| {
        if !is_member(&neighborhoods, mask) {
            return;
        }
        let keep = match restriction {
            Restriction::None => true,
            Restriction::Independent => g.independent_bits(mask),
            Restriction::Connected => g.component_count_bits(mask) <= 1,
        };
        if keep {
            counts[mask.count_ones() as usize] += 1;
        }
    });
    Ok(counts_to_polynomial(&counts))
}

/// Signed inclusion–exclusion weight of every distinct nonempty
/// intersection of maximal neighborhoods. Branches whose intersection is
/// empty are pruned: they only affect the constant term.
fn intersection_weights(g: &Graph) -> HashMap<u64, i128> {
    let maximal: Vec<u64> =
        g.maximal_distinct_neighborhoods().into_iter().map(VertexSet::bits).filter(|&b| b != 0).collect();
    let mut weights = HashMap::new();
    let mut stack: Vec<(usize, u64, bool)> = (0..maximal.len()).map(|i| (i, maximal[i], true)).collect();
    while let Some((last, inter, positive)) = stack.pop() {
        *weights.entry(inter).or_insert(0i128) += if positive { 1 } else { -1 };
        for (j, &next) in maximal.iter().enumerate().skip(last + 1) {
            let narrowed = inter & next;
            if narrowed != 0 {
                stack.push((j, narrowed, !positive));
            }
        }
    }
    weights.retain(|_, w| *w != 0);
    weights
}

fn fast(g: &Graph, restriction: Restriction) -> Polynomial {
    let n = g.order();
    let mut totals = vec![0i128; n + 1];
    let mut memo = HashMap::new();
    let mut weights: Vec<(u64, i128)> = intersection_weights(g).into_iter().collect();
    weights.sort_unstable();
    for (inter, weight) in weights {
        let counts = match restriction {
            Restriction::None => binomial_row(inter.count_ones() as usize),
            Restriction::Independent => independence_counts(g, inter, &mut memo),
            Restriction::Connected => connected_counts(g, inter),
        };
        for (k, &c) in counts.iter().enumerate().skip(1) {
            totals[k] += weight * c as i128;
        }
    }
    totals[0] = 1;
    Polynomial::from_coeffs(totals)
}
