//! Exact 2-density Turán computations on small graphs.
//!
//! The crate computes independence numbers, local independence numbers,
//! 2-densities and their extremal values over graphs with bounded
//! independence number, and checks a collection of finite graph-theoretic
//! statements about them exhaustively.

pub mod bits;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod density;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod rational;
pub mod sampler;
pub mod subgraph;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
