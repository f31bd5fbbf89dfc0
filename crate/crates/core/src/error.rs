use thiserror::Error;

use crate::nef::Rejection;

/// Errors produced by the geometry kernel and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("points live in different lattices (M vs N)")]
    SpaceMismatch,
    #[error("the origin is not in the interior of the polytope")]
    ZeroNotInterior,
    #[error("polytope has dimension {dim} in ambient dimension {ambient}")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("the inequality system does not describe a bounded set")]
    Unbounded,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("polytope is not a lattice polytope")]
    NotLattice,
    #[error("piecewise-linear function is not convex (vertex {vertex}, cone {cone})")]
    NotConvex { vertex: usize, cone: usize },
    #[error("expected {expected} vertex values, found {found}")]
    ValueCountMismatch { expected: usize, found: usize },
    #[error("vertex values admit no linear extension on cone {cone}")]
    NotPiecewiseLinear { cone: usize },
    #[error("index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("piecewise-linear functions live on different fans")]
    FanMismatch,
    #[error("partition rejected: {0}")]
    Rejected(Rejection),
    #[error("internal invariant violated ({check}): {witness}")]
    InvariantViolated {
        check: &'static str,
        witness: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
