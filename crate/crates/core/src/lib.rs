//! Exact lattice polytopes and the nef-partition duality.
//!
//! The crate computes with convex polytopes in exact rational arithmetic
//! (hulls, polar duals, Minkowski sums, lattice points), builds face fans and
//! convex piecewise-linear functions on them, validates and enumerates
//! nef-partitions of reflexive polytopes, and constructs the dual datum
//! `(nabla; E'_1, ..., E'_r)` while re-checking every identity of the
//! construction.
//!
//! Runnable walkthroughs live in `examples/`; the `nefdual` binary exposes
//! the same operations on polytope files.

pub mod cli;
pub mod corpus;
mod dd;
pub mod duality;
pub mod error;
pub mod fan;
pub mod io;
pub mod linalg;
pub mod nef;
pub mod point;
pub mod polytope;
pub mod rational;
pub mod report;

pub use duality::{run_full_duality, CheckResult, Checks, DualityResult};
pub use error::{Error, Result};
pub use fan::{face_fan, FaceFan, PlFunction};
pub use linalg::{solve_linear, SolveOutcome};
pub use nef::{enumerate_nef_partitions, NefPartition, Rejection};
pub use point::{Point, Space};
pub use polytope::{Facet, Polytope};
pub use rational::Rational;
