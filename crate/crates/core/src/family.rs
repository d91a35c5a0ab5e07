//! Named graph families and seeded random corpora.
//!
//! Family expressions have the form `name:arg[:arg...]`, for example
//! `cycle:4`, `complete_bipartite:2:3` or `random:10:0.5:7`. Commas are
//! accepted between arguments as well.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n-1}` on `n` vertices, center 0.
    Star(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
    /// `G(n, p)`: each pair `u < v` in lexicographic order is an edge with
    /// probability `p`, drawn from a ChaCha8 stream seeded by `seed`.
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Random labeled tree: vertex `i > 0` attaches to a uniform earlier vertex.
    Tree {
        n: usize,
        seed: u64,
    },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidArgument(msg.into())
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Path(n) => {
                if n < 1 {
                    return Err(invalid("path requires n >= 1"));
                }
                Graph::from_edge_list(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(invalid("cycle requires n >= 3"));
                }
                Graph::from_edge_list(n, &(0..n).map(|v| (v, (v + 1) % n)).collect::<Vec<_>>())
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(invalid("complete requires n >= 1"));
                }
                Graph::edgeless(n).map(|g| g.complement())
            }
            Family::Star(n) => {
                if n < 2 {
                    return Err(invalid("star requires n >= 2"));
                }
                Graph::from_edge_list(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
            }
            Family::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(invalid("complete_bipartite requires a >= 1 and b >= 1"));
                }
                Graph::edgeless(a)?.join(&Graph::edgeless(b)?)
            }
            Family::Edgeless(n) => Graph::edgeless(n),
            Family::Random { n, p, seed } => {
                if n < 1 {
                    return Err(invalid("random requires n >= 1"));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(invalid("random requires 0 <= p <= 1"));
                }
                Graph::edgeless(n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edge_list(n, &edges)
            }
            Family::Tree { n, seed } => {
                if n < 1 {
                    return Err(invalid("tree requires n >= 1"));
                }
                Graph::edgeless(n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
                Graph::from_edge_list(n, &edges)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            Family::Edgeless(n) => write!(f, "edgeless:{n}"),
            Family::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
            Family::Tree { n, seed } => write!(f, "tree:{n}:{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Family, GraphError> {
        let (name, args) =
            s.split_once(':').ok_or_else(|| invalid(format!("family expression `{s}` lacks `name:args`")))?;
        let args: Vec<&str> =
            if args.is_empty() { Vec::new() } else { args.split([':', ',']).map(str::trim).collect() };
        let arity = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("family `{name}` takes {k} argument(s), got {}", args.len())))
            }
        };
        let count = |i: usize| {
            args[i].parse::<usize>().map_err(|_| invalid(format!("argument `{}` of `{name}` is not a count", args[i])))
        };
        match name {
            "path" => arity(1).and_then(|_| Ok(Family::Path(count(0)?))),
            "cycle" => arity(1).and_then(|_| Ok(Family::Cycle(count(0)?))),
            "complete" => arity(1).and_then(|_| Ok(Family::Complete(count(0)?))),
            "star" => arity(1).and_then(|_| Ok(Family::Star(count(0)?))),
            "edgeless" => arity(1).and_then(|_| Ok(Family::Edgeless(count(0)?))),
            "complete_bipartite" => arity(2).and_then(|_| Ok(Family::CompleteBipartite(count(0)?, count(1)?))),
            "tree" => arity(2).and_then(|_| {
                let seed = args[1].parse().map_err(|_| invalid(format!("bad seed `{}`", args[1])))?;
                Ok(Family::Tree { n: count(0)?, seed })
            }),
            "random" => arity(3).and_then(|_| {
                let p = args[1].parse().map_err(|_| invalid(format!("bad probability `{}`", args[1])))?;
                let seed = args[2].parse().map_err(|_| invalid(format!("bad seed `{}`", args[2])))?;
                Ok(Family::Random { n: count(0)?, p, seed })
            }),
            other => Err(invalid(format!("unknown family `{other}`"))),
        }
    }
}

/// Parses and builds a family expression in one step.
pub fn family(expr: &str) -> Result<Graph, GraphError> {
    expr.parse::<Family>()?.build()
}

/// `count` random graphs with orders uniform in `1..=max_order`; graph `i`
/// uses edge probability `probabilities[i % len]`. Fully determined by `seed`.
pub fn random_corpus(
    count: usize,
    max_order: usize,
    probabilities: &[f64],
    seed: u64,
) -> Result<Vec<Graph>, GraphError> {
    if max_order < 1 || probabilities.is_empty() {
        return Err(invalid("random corpus requires max_order >= 1 and at least one probability"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_order);
            let p = probabilities[i % probabilities.len()];
            Family::Random { n, p, seed: rng.gen() }.build()
        })
        .collect()
}

/// `count` random graphs of exactly `order` vertices with edge probability `p`.
pub fn fixed_order_corpus(count: usize, order: usize, p: f64, seed: u64) -> Result<Vec<Graph>, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| Family::Random { n: order, p, seed: rng.gen() }.build()).collect()
}

/// `count` random labeled trees with orders uniform in `min_order..=max_order`.
pub fn tree_corpus(count: usize, min_order: usize, max_order: usize, seed: u64) -> Result<Vec<Graph>, GraphError> {
    if min_order < 1 || min_order > max_order {
        return Err(invalid("tree corpus requires 1 <= min_order <= max_order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_order..=max_order);
            Family::Tree { n, seed: rng.gen() }.build()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        assert_eq!(family("path:3").unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(family("cycle:4").unwrap().edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let k4 = family("complete:4").unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(family("star:4").unwrap().edges(), vec![(0, 1), (0, 2), (0, 3)]);
        let k23 = family("complete_bipartite:2,3").unwrap();
        assert_eq!((k23.order(), k23.edge_count()), (5, 6));
        assert_eq!(family("edgeless:5").unwrap().edge_count(), 0);
    }

    #[test]
    fn parameter_errors_name_the_constraint() {
        let err = family("cycle:2").unwrap_err().to_string();
        assert!(err.contains("n >= 3"), "{err}");
        assert!(family("path:0").is_err());
        assert!(family("star:1").is_err());
        assert!(family("complete_bipartite:0,2").is_err());
        assert!(family("random:4,1.5,1").unwrap_err().to_string().contains("p <= 1"));
        assert!(family("wheel:5").unwrap_err().to_string().contains("unknown family"));
        assert!(family("cycle").is_err());
        assert!(family("cycle:4,5").is_err());
        assert!(family("cycle:x").is_err());
        assert!(family("complete:65").is_err());
    }

    #[test]
    fn random_families_are_deterministic() {
        let a = family("random:12,0.5,99").unwrap();
        assert_eq!(a, family("random:12,0.5,99").unwrap());
        assert_eq!(family("random:12,0,1").unwrap().edge_count(), 0);
        assert_eq!(family("random:12,1,1").unwrap().edge_count(), 66);
        assert_eq!(a, family("random:12:0.5:99").unwrap());
        let t = family("tree:20,3").unwrap();
        assert!(t.is_tree());
        assert_eq!(t, family("tree:20,3").unwrap());
    }

    #[test]
    fn display_round_trips() {
        for f in [
            Family::Path(3),
            Family::CompleteBipartite(2, 5),
            Family::Random { n: 9, p: 0.25, seed: 11 },
            Family::Tree { n: 7, seed: 2 },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn corpora() {
        let c = random_corpus(50, 14, &[0.2, 0.5, 0.8], 1).unwrap();
        assert_eq!(c.len(), 50);
        assert!(c.iter().all(|g| (1..=14).contains(&g.order())));
        assert_eq!(c, random_corpus(50, 14, &[0.2, 0.5, 0.8], 1).unwrap());
        let trees = tree_corpus(30, 2, 16, 5).unwrap();
        assert!(trees.iter().all(|t| t.is_tree() && t.order() >= 2));
        assert!(fixed_order_corpus(5, 10, 0.5, 7).unwrap().iter().all(|g| g.order() == 10));
    }
}
