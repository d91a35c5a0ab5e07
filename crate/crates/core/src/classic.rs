//! The independence polynomial `I`, domination polynomial `D`, subgraph
//! polynomial `S` and subgraph component polynomial `Q`.
//!
//! Every polynomial has an exhaustive-sweep oracle next to a structured
//! route; the structured routes also run on arbitrary vertex masks so the
//! neighborhood-complex engine can call them on intersections of
//! neighborhoods without materializing induced subgraphs.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::complex::{self, Method};
use crate::error::{require_nonempty, require_oracle_order, ComputeError};
use crate::graph::Graph;
use crate::polynomial::{BivariatePolynomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndependenceMethod {
    Oracle,
    /// `I(G) = I(G - v) + x I(G - N[v])` on a maximum-degree pivot.
    Recursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationMethod {
    Oracle,
    /// `(1 + x)^n - N(complement(G), x)`.
    ViaComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphMethod {
    Oracle,
    /// Rooted growth of connected sets from their minimum vertex.
    Growth,
}

pub(crate) fn counts_to_polynomial(counts: &[u64]) -> Polynomial {
    Polynomial::from_coeffs(counts.iter().map(|&c| BigInt::from(c)))
}

pub(crate) fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64; n + 1];
    for k in 1..n {
        row[k] = ((row[k - 1] as u128 * (n - k + 1) as u128) / k as u128) as u64;
    }
    row
}

/// Calls `f` with every subset of `0..n` as a bit mask.
pub(crate) fn for_each_subset(n: usize, mut f: impl FnMut(u64)) {
    debug_assert!(n < 64);
    for mask in 0..(1u64 << n) {
        f(mask);
    }
}

pub fn independence_polynomial(g: &Graph, method: IndependenceMethod) -> Result<Polynomial, ComputeError> {
    match method {
        IndependenceMethod::Oracle => {
            require_oracle_order("independence oracle", g.order())?;
            let mut counts = vec![0u64; g.order() + 1];
            for_each_subset(g.order(), |mask| {
                if g.independent_bits(mask) {
                    counts[mask.count_ones() as usize] += 1;
                }
            });
            Ok(counts_to_polynomial(&counts))
        }
        IndependenceMethod::Recursive => {
            let mut memo = HashMap::new();
            Ok(counts_to_polynomial(&independence_counts(g, g.vertices().bits(), &mut memo)))
        }
    }
}

/// Independent-set counts of `G[mask]` by size. Splits into connected
/// components first, then branches on a maximum-degree vertex (lowest label
/// on ties).
pub(crate) fn independence_counts(g: &Graph, mask: u64, memo: &mut HashMap<u64, Vec<u64>>) -> Vec<u64> {
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let mut pivot = None;
    let mut max_degree = 0;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (g.neighbor_bits(v) & mask).count_ones();
        if d > max_degree {
            max_degree = d;
            pivot = Some(v);
        }
    }
    let result = match pivot {
        None => binomial_row(mask.count_ones() as usize),
        Some(v) => {
            let first = g.flood(1 << v, mask);
            if first != mask {
                let a = independence_counts(g, first, memo);
                let b = independence_counts(g, mask & !first, memo);
                convolve(&a, &b)
            } else {
                let without = independence_counts(g, mask & !(1 << v), memo);
                let closed = g.neighbor_bits(v) | 1 << v;
                let with = independence_counts(g, mask & !closed, memo);
                let mut out = without;
                if out.len() < with.len() + 1 {
                    out.resize(with.len() + 1, 0);
                }
                for (k, c) in with.iter().enumerate() {
                    out[k + 1] += c;
                }
                out
            }
        }
    };
    memo.insert(mask, result.clone());
    result
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn domination_polynomial(g: &Graph, method: DominationMethod) -> Result<Polynomial, ComputeError> {
    require_nonempty(g.order())?;
    match method {
        DominationMethod::Oracle => {
            require_oracle_order("domination oracle", g.order())?;
            let n = g.order();
            let everything = g.vertices().bits();
            let mut counts = vec![0u64; n + 1];
            for_each_subset(n, |mask| {
                let mut covered = mask;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    covered |= g.neighbor_bits(v);
                }
                if covered == everything {
                    counts[mask.count_ones() as usize] += 1;
                }
            });
            Ok(counts_to_polynomial(&counts))
        }
        DominationMethod::ViaComplement => {
            let n_bar = complex::neighborhood_polynomial(&g.complement(), Method::Auto)?;
            Ok(Polynomial::binomial_power(g.order()) - n_bar)
        }
    }
}

/// `S(G, x)`: connected induced subgraphs by size. The empty set has zero
/// components and is not counted, so `s_0 = 0`.
pub fn subgraph_polynomial(g: &Graph, method: SubgraphMethod) -> Result<Polynomial, ComputeError> {
    require_nonempty(g.order())?;
    match method {
        SubgraphMethod::Oracle => {
            require_oracle_order("subgraph oracle", g.order())?;
            let mut counts = vec![0u64; g.order() + 1];
            for_each_subset(g.order(), |mask| {
                if g.component_count_bits(mask) == 1 {
                    counts[mask.count_ones() as usize] += 1;
                }
            });
            Ok(counts_to_polynomial(&counts))
        }
        SubgraphMethod::Growth => Ok(counts_to_polynomial(&connected_counts(g, g.vertices().bits()))),
    }
}

/// Counts of nonempty connected subsets of `G[mask]` by size.
pub(crate) fn connected_counts(g: &Graph, mask: u64) -> Vec<u64> {
    let mut counts = vec![0u64; mask.count_ones() as usize + 1];
    let mut roots = mask;
    while roots != 0 {
        let root = roots.trailing_zeros() as usize;
        roots &= roots - 1;
        // only vertices above the root may join, so each set is grown from its minimum
        let allowed = mask & !((2u64 << root).wrapping_sub(1));
        let candidates = g.neighbor_bits(root) & allowed;
        grow(g, 1 << root, 1, candidates, 0, allowed, &mut counts);
    }
    counts
}

/// Decides the lowest candidate: first excluded for good, then included.
/// A set is counted once its whole boundary inside `allowed` is excluded.
fn grow(g: &Graph, set: u64, size: usize, candidates: u64, excluded: u64, allowed: u64, counts: &mut [u64]) {
    if candidates == 0 {
        counts[size] += 1;
        return;
    }
    let w = candidates & candidates.wrapping_neg();
    grow(g, set, size, candidates & !w, excluded | w, allowed, counts);
    let grown = set | w;
    let next = (candidates | g.neighbor_bits(w.trailing_zeros() as usize)) & allowed & !grown & !excluded;
    grow(g, grown, size + 1, next, excluded, allowed, counts);
}

/// `Q(G; x, y)` by exhaustive sweep; `q_00 = 1` for the empty set.
pub fn subgraph_component_polynomial(g: &Graph) -> Result<BivariatePolynomial, ComputeError> {
    let n = g.order();
    require_oracle_order("subgraph component polynomial", n)?;
    let mut table = vec![vec![0u64; n + 1]; n + 1];
    for_each_subset(n, |mask| {
        table[mask.count_ones() as usize][g.component_count_bits(mask)] += 1;
    });
    let mut q = BivariatePolynomial::zero();
    for (i, row) in table.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            q.add_term(i, j, c);
        }
    }
    Ok(q)
}
