//! Exact combinatorics of Eulerian digraphs: the spanning-tree polynomial
//! `P_D(t)`, its determinant and volume-expansion identities, and the
//! Kauffman/Crowell state models of positive special alternating links.
//!
//! Everything here is exact integer arithmetic; there is no floating point
//! anywhere in the crate. The major identities are implemented as independent
//! pipelines that cross-check each other:
//!
//! * `trees` counts k-spanning trees directly and through the
//!   contraction/inclusion-exclusion formula,
//! * `alexander` evaluates the polynomial as `det(L̄ + t·L̄ᵀ)`,
//! * `rootpolytope` evaluates the `Σ Vol·(t−1)^…` expansion,
//! * `links` + `bijection` build the two link state models and the
//!   weight-preserving tree↔arborescence bijection between them,
//! * `scanner` sweeps random and exhaustive instances hunting for
//!   log-concavity counterexamples.

pub mod alexander;
pub mod bijection;
pub mod files;
pub mod graphs;
pub mod links;
pub mod matrix;
pub mod poly;
pub mod rootpolytope;
pub mod scanner;
pub mod trees;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad file, bad graph data, violated precondition.
    #[error("input error: {0}")]
    Input(String),
    /// A rotation system or derived embedding is not valid.
    #[error("embedding error: {0}")]
    Embedding(String),
    /// Two pipelines that must agree did not. Never silently ignored.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    /// A property the theory guarantees was violated on concrete data.
    #[error("property violation: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn embedding(msg: impl Into<String>) -> Self {
        Error::Embedding(msg.into())
    }
    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
    pub fn violation(msg: impl Into<String>) -> Self {
        Error::Violation(msg.into())
    }
}
