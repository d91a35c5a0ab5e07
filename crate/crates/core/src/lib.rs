//! Graph polynomials built on the neighborhood complex: the neighborhood
//! polynomial `N(G, x)`, its independent, connected and disconnected
//! restrictions, the classical independence, domination, subgraph and
//! subgraph component polynomials, and executable checks of the identities
//! that tie them together.
//!
//! ```
//! use nbpoly::{family, complex, Method};
//!
//! let c4 = family::family("cycle:4").unwrap();
//! let n = complex::neighborhood_polynomial(&c4, Method::Auto).unwrap();
//! assert_eq!(n.to_string(), "1 + 4x + 2x^2");
//! ```

pub mod classic;
pub mod cli;
pub mod complex;
pub mod error;
pub mod family;
pub mod graph;
pub mod identities;
pub mod io;
pub mod polynomial;
pub mod vertex_set;

pub use complex::Method;
pub use error::ComputeError;
pub use graph::{Graph, GraphError};
pub use polynomial::{BivariatePolynomial, Polynomial};
pub use vertex_set::VertexSet;
