//! Threshold graphs, the Betti sequences of their coedge-ideal quotients,
//! and anti-lecture hall compositions — three families in explicit bijection
//! — together with exact expected values of the sequences when the graph is
//! drawn at random.
//!
//! A threshold graph on vertices {0, ..., n} is determined by the set
//! sigma ⊆ {1, ..., n} of vertices that entered the build sequence isolated
//! (the rest enter dominating). The complement's edges carry two labelings,
//! and reading them off gives, per graph:
//!
//! * its Betti sequence (β_1, ..., β_n) — the minimal free resolution data
//!   of the quotient by the ideal generated by x_u x_v over non-edges uv;
//! * its anti-lecture hall composition (λ_1, ..., λ_n), a sequence with
//!   1 ≥ λ_1/1 ≥ λ_2/2 ≥ ... ≥ λ_n/n ≥ 0.
//!
//! Both maps are bijections onto their images and all four directions are
//! implemented ([`correspondence`]), along with a brute-force subset oracle
//! that recomputes Betti numbers from induced-subgraph component counts.
//! The [`random`] module treats sigma as random — each element present
//! independently with probability p — and computes expected Betti numbers,
//! expected composition entries and expected projective dimension exactly,
//! by closed form, by recurrence, and by exhaustive enumeration, plus a
//! seeded Monte Carlo estimator.
//!
//! ```
//! use tricorr::ThresholdGraph;
//! use tricorr::correspondence::{alhc_of, betti_of, graph_from_betti};
//!
//! let t = ThresholdGraph::new(5, [1, 2, 4]).unwrap();
//! assert_eq!(betti_of(&t).to_u64s().unwrap(), [7, 11, 6, 1, 0]);
//! assert_eq!(alhc_of(&t).entries(), [1, 2, 3, 1, 0]);
//! assert_eq!(graph_from_betti(&betti_of(&t)).unwrap(), t);
//! ```
//!
//! Everything is exact (arbitrary-precision integers and rationals); floats
//! appear only in Monte Carlo estimates.

// Adjacency code writes both halves of a symmetric matrix in place; index
// loops read better than split_at_mut gymnastics there.
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod correspondence;
pub mod graph;
pub mod random;
pub mod table;

pub use arith::Rational;
pub use correspondence::{Alhc, BettiSequence};
pub use graph::{Adjacency, LabelInterval, NonEdge, Shift, ThresholdGraph};
pub use num_bigint::BigInt;
pub use random::{ExactMethod, ExactReport, McPoint, McReport, Statistic};

/// Everything that can go wrong across the crate. The display strings are
/// stable: the command-line layer and tests match on them.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("n must be at least 1")]
    NTooSmall,
    #[error("sigma out of range: {0}")]
    SigmaOutOfRange(usize),
    #[error("vertex out of range: {0}")]
    VertexOutOfRange(usize),
    #[error("vertices must be distinct: {0}")]
    IdenticalVertices(usize),
    #[error("not a non-edge: {u}-{v}")]
    NotANonEdge { u: usize, v: usize },
    #[error("not a simple graph")]
    NotSimpleGraph,
    #[error("not a threshold graph")]
    NotThreshold,
    #[error("ratio condition violated")]
    RatioViolation,
    #[error("not a 2-linear Betti sequence")]
    NotBettiSequence,
    #[error("bound must be 1, got {0}")]
    BoundNotOne(u64),
    #[error("empty sequence")]
    EmptySequence,
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("n too large for enumeration: {0}")]
    EnumerationBudget(usize),
    #[error("probability out of range: {0}")]
    ProbabilityOutOfRange(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("oracle mismatch at n={n}, sigma={sigma:?}")]
    OracleMismatch { n: usize, sigma: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, Error>;
