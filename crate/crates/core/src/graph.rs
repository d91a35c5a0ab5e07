//! Simple undirected graphs on vertices `0..n` with bit-vector adjacency.
//!
//! Vertex labels produced by the graph operations are fixed:
//!
//! * disjoint union and join: vertices of the second graph are shifted by the
//!   order of the first;
//! * Cartesian product: the pair `(u, v)` becomes `u * n2 + v`;
//! * r-expansion: copy `i` of vertex `v` becomes `v * r + i`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {order} exceeds the supported maximum of {MAX_ORDER}")]
    Capacity { order: usize },
    #[error("edge {{{u},{v}}} has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("edge {{{v},{v}}} is a self-loop")]
    SelfLoop { v: usize },
    #[error("vertex {v} is outside 0..{order}")]
    VertexOutOfRange { v: usize, order: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A simple, finite, undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edges: usize,
}

fn check_order(order: usize) -> Result<(), GraphError> {
    if order > MAX_ORDER {
        Err(GraphError::Capacity { order })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph of the given order.
    pub fn edgeless(order: usize) -> Result<Graph, GraphError> {
        check_order(order)?;
        Ok(Graph { adjacency: vec![VertexSet::empty(order); order], edges: 0 })
    }

    /// Builds a graph from unordered pairs. Duplicate pairs (in either
    /// orientation) are collapsed.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if !self.adjacency[u].contains(v) {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
            self.edges += 1;
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// The full vertex set `V`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Neighbors of `v`; panics when `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    #[inline]
    pub(crate) fn neighbor_bits(&self, v: usize) -> u64 {
        self.adjacency[v].bits()
    }

    /// The open neighborhood `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.adjacency.get(v).copied().ok_or(GraphError::VertexOutOfRange { v, order: self.order() })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.order() {
            for v in self.adjacency[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_universe(&self, set: VertexSet) {
        assert_eq!(set.universe(), self.order(), "vertex set universe does not match graph order");
    }

    /// `N[W]`: `W` together with every neighbor of a member of `W`.
    pub fn closed_neighborhood_of_set(&self, set: VertexSet) -> VertexSet {
        self.check_universe(set);
        set.iter().fold(set, |acc, w| acc.union(self.adjacency[w]))
    }

    /// `G[X]`, relabeled by increasing original label.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        self.check_universe(set);
        let kept: Vec<usize> = set.iter().collect();
        let mut position = [usize::MAX; MAX_ORDER];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph { adjacency: vec![VertexSet::empty(kept.len()); kept.len()], edges: 0 };
        for (i, &v) in kept.iter().enumerate() {
            for w in self.adjacency[v].intersection(set).iter().filter(|&w| w > v) {
                g.add_edge(i, position[w]);
            }
        }
        g
    }

    /// True iff no edge joins two members of `set`.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        self.check_universe(set);
        self.independent_bits(set.bits())
    }

    #[inline]
    pub(crate) fn independent_bits(&self, bits: u64) -> bool {
        let mut rest = bits;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adjacency[v].bits() & bits != 0 {
                return false;
            }
        }
        true
    }

    /// Number of connected components of `G[X]`; zero for the empty set.
    pub fn component_count(&self, set: VertexSet) -> usize {
        self.check_universe(set);
        self.component_count_bits(set.bits())
    }

    #[inline]
    pub(crate) fn component_count_bits(&self, bits: u64) -> usize {
        let mut rest = bits;
        let mut count = 0;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let component = self.flood(seed, rest);
            rest &= !component;
            count += 1;
        }
        count
    }

    /// Vertices of `within` reachable from `seed` inside `G[within]`.
    #[inline]
    pub(crate) fn flood(&self, seed: u64, within: u64) -> u64 {
        let mut reached = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adjacency[v].bits() & within & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached
    }

    /// True iff `G[X]` is connected. The empty set counts as connected.
    pub fn is_connected_subset(&self, set: VertexSet) -> bool {
        self.component_count(set) <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(self.vertices())
    }

    pub fn isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|n| n.is_empty()).count()
    }

    pub fn is_complete(&self) -> bool {
        2 * self.edges == self.order() * self.order().saturating_sub(1)
    }

    /// Connected with `n - 1` edges. The single vertex counts as a tree.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edges + 1 == self.order() && self.is_connected()
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.adjacency.iter().all(|n| n.len() == 2) && self.is_connected()
    }

    /// The complement graph on the same vertex labels.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let full = VertexSet::full(n);
        let adjacency: Vec<VertexSet> = (0..n)
            .map(|v| {
                let mut s = self.adjacency[v].union(VertexSet::singleton(n, v)).complement();
                s = s.intersection(full);
                s
            })
            .collect();
        let edges = n * n.saturating_sub(1) / 2 - self.edges;
        Graph { adjacency, edges }
    }

    fn shifted_pair(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n1 = self.order();
        let n = n1 + other.order();
        check_order(n)?;
        let mut g = Graph::edgeless(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n1, v + n1);
        }
        Ok(g)
    }

    /// `G1 ∪ G2`; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.shifted_pair(other)
    }

    /// `G1 + G2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.shifted_pair(other)?;
        let n1 = self.order();
        for u in 0..n1 {
            for v in 0..other.order() {
                g.add_edge(u, n1 + v);
            }
        }
        Ok(g)
    }

    /// `G1 □ G2` with `(u, v)` labeled `u * n2 + v`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let (n1, n2) = (self.order(), other.order());
        check_order(n1 * n2)?;
        let mut g = Graph::edgeless(n1 * n2)?;
        for u in 0..n1 {
            for (a, b) in other.edges() {
                g.add_edge(u * n2 + a, u * n2 + b);
            }
        }
        for (a, b) in self.edges() {
            for v in 0..n2 {
                g.add_edge(a * n2 + v, b * n2 + v);
            }
        }
        Ok(g)
    }

    /// `exp(G, r)`: each vertex becomes an independent `r`-set, each edge a
    /// complete bipartite `K_{r,r}`. Copy `i` of `v` is labeled `v * r + i`.
    pub fn expansion(&self, r: usize) -> Result<Graph, GraphError> {
        if r == 0 {
            return Err(GraphError::InvalidArgument("expansion factor r must be at least 1".into()));
        }
        check_order(self.order() * r)?;
        let mut g = Graph::edgeless(self.order() * r)?;
        for (u, v) in self.edges() {
            for i in 0..r {
                for j in 0..r {
                    g.add_edge(u * r + i, v * r + j);
                }
            }
        }
        Ok(g)
    }

    /// Distinct open neighborhoods not strictly contained in another one,
    /// ascending by bit-vector value.
    pub fn maximal_distinct_neighborhoods(&self) -> Vec<VertexSet> {
        let distinct: BTreeSet<u64> = self.adjacency.iter().map(|n| n.bits()).collect();
        let distinct: Vec<u64> = distinct.into_iter().collect();
        distinct
            .iter()
            .filter(|&&a| !distinct.iter().any(|&b| b != a && a & !b == 0))
            .map(|&bits| VertexSet::from_bits(self.order(), bits))
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
