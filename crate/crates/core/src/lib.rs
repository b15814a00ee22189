//! Exact constructions of MDS code pairs with a prescribed intersection
//! dimension over small finite fields, together with the parameters of the
//! asymmetric entanglement-assisted quantum codes they induce.
//!
//! Every construction routine re-verifies its own output: intersection
//! dimensions are computed by two independent rank methods and MDS-ness is
//! certified structurally, so nothing is trusted on faith.

// Divisibility tests read better as `n % d == 0` throughout this crate.
#![allow(clippy::manual_is_multiple_of)]

pub mod code;
pub mod construct;
pub mod export;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod quantum;

pub use code::{GrsSpec, LinearCode, WeightDistribution};
pub use construct::{FeasibilityVerdict, IntersectionPair, PairRequest, Route};
pub use field::{Field, FieldElement};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use quantum::AeaqeccParams;

/// Message-enumeration cap for exact distance and weight computations.
pub const DEFAULT_ENUM_BOUND: u128 = 1 << 20;

/// Column-subset cap for the structural MDS certificate; larger instances
/// fall back to the exhaustive distance computation.
pub const DEFAULT_MDS_SUBSET_LIMIT: u128 = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {q} exceeds the configured bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid GRS specification: {0}")]
    InvalidGrsSpec(String),
    #[error("matrix is not of full row rank")]
    RankDeficient,
    #[error("enumeration of {needed} messages exceeds the bound {bound}")]
    EnumerationBound { needed: u128, bound: u128 },
    #[error("no monic irreducible of degree {degree} satisfies the root/exclusion constraints")]
    IrreducibleExhausted { degree: usize },
    #[error("the code has no codeword of full weight")]
    NoFullWeightCodeword,
    #[error("the set difference is empty: the first code is contained in the second")]
    EmptyDifference,
    #[error("distance {which} is undefined: {detail}")]
    DegenerateDistance { which: &'static str, detail: String },
    #[error("no pair exists: {0}")]
    Infeasible(String),
    #[error("outside the supported parameter range: {0}")]
    OutOfScope(String),
    #[error("degenerate request: {0}")]
    Degenerate(String),
    #[error("construction self-check failed: {0}")]
    VerificationFailed(String),
    #[error("the zero code has no nonzero codeword")]
    EmptyCode,
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
