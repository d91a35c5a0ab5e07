use thiserror::Error;

use crate::graph::GraphError;

/// Largest order accepted by the exhaustive `2^n` sweeps.
pub const ORACLE_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComputeError {
    #[error("polynomials are undefined for the graph with no vertices")]
    EmptyGraph,
    #[error("{what} supports graphs of order at most {limit}, got {order}")]
    Capacity { what: &'static str, order: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ComputeError {
    pub fn is_capacity(&self) -> bool {
        matches!(self, ComputeError::Capacity { .. } | ComputeError::Graph(GraphError::Capacity { .. }))
    }
}

pub(crate) fn require_oracle_order(what: &'static str, order: usize) -> Result<(), ComputeError> {
    if order > ORACLE_MAX_ORDER {
        Err(ComputeError::Capacity { what, order, limit: ORACLE_MAX_ORDER })
    } else {
        Ok(())
    }
}

pub(crate) fn require_nonempty(order: usize) -> Result<(), ComputeError> {
    if order == 0 {
        Err(ComputeError::EmptyGraph)
    } else {
        Ok(())
    }
}
