//! Exact combinatorics of Bruhat graphs of permutations.
//!
//! The crate provides four layers:
//!
//! - [`perm`]: permutations in one-line notation, length statistics, cycle
//!   structure, and pattern containment.
//! - [`order`] and [`graph`]: Bruhat order comparison, lower-interval
//!   enumeration, and Bruhat graph construction with structural recognition
//!   (hypercubes, pattern-induced subgraphs).
//! - [`planarity`]: an exact left-right planarity test for simple undirected
//!   graphs, cross-checkable against an exhaustive Kuratowski-subdivision
//!   oracle.
//! - [`verify`]: executable verification suites for the structural theorems
//!   this crate is built around, plus minimal avoidance-basis computation.
//!
//! All values are immutable; every operation is a pure function, so the types
//! are freely sendable between threads.
//!
//! ```
//! use bruhat::{BruhatGraph, Permutation};
//! use bruhat::planarity::is_planar;
//!
//! let sigma = Permutation::parse("3412")?;
//! assert_eq!(sigma.coxeter_length(), 4);
//! assert_eq!(sigma.absolute_length(), 2);
//!
//! let graph = BruhatGraph::build(&sigma);
//! assert!(!is_planar(&graph.underlying_undirected()));
//! # Ok::<(), bruhat::Error>(())
//! ```

pub mod graph;
pub mod order;
pub mod perm;
pub mod planarity;
pub mod verify;

pub use graph::{BruhatEdge, BruhatGraph, UndirectedGraph};
pub use perm::{Embedding, Permutation, Transposition};
pub use planarity::{KuratowskiWitness, ObstructionKind, PlanarityVerdict};
pub use verify::{BasisReport, VerificationReport};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation text: {0:?}")]
    MalformedText(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("permutation size {size} exceeds supported maximum {max}")]
    SizeUnsupported { size: usize, max: usize },
    #[error("invalid transposition ({a} {b}): need 1 <= a < b")]
    InvalidTransposition { a: usize, b: usize },
    #[error("transposition ({a} {b}) out of range for size {size}")]
    TranspositionOutOfRange { a: usize, b: usize, size: usize },
    #[error("pattern of size {pattern} larger than target of size {target}")]
    PatternTooLarge { pattern: usize, target: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("interval exceeds cap of {cap} vertices")]
    IntervalCapExceeded { cap: usize },
    #[error("subdivision search budget exhausted after {steps} steps")]
    OracleBudgetExceeded { steps: u64 },
    #[error("graph with {vertices} vertices exceeds the oracle limit of 64")]
    OracleTooLarge { vertices: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
