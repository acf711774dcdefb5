use thiserror::Error;

/// Errors raised by constructions, bounds and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field with {p}^{m} elements exceeds the supported size")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("element {0} is not in the field")]
    NotAnElement(u32),
    #[error("basis elements are linearly dependent over the prime field")]
    DependentBasis,
    #[error("generator of a multiplicative subgroup must be nonzero")]
    ZeroGenerator,
    #[error("ground set is not a union of cosets of the subgroup")]
    NotCosetAligned,
    #[error("partition does not carry a coset-constant polynomial")]
    NonCosetPartition,
    #[error("partitions are over different ground sets")]
    GroundMismatch,
    #[error("partitions are not orthogonal")]
    NotOrthogonal,
    #[error("locality {r} outside [1, {block}] for this partition")]
    BadLocality { r: usize, block: usize },
    #[error("polynomial space is empty")]
    EmptyBasis,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("message has length {got}, expected {expected}")]
    MessageLength { expected: usize, got: usize },
    #[error("matrix is rank deficient: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("alphas are not linearly independent over GF(q)")]
    DependentAlphas,
    #[error("recovering graph is invalid: {0}")]
    InvalidGraph(String),
    #[error("recovering sets are inconsistent with the code")]
    GraphMismatch,
    #[error("budget of {budget} exceeded (needs {needed})")]
    BudgetExceeded { budget: u64, needed: u64 },
    #[error("no recovering-set assignment found for coordinate {0}")]
    NoRecoveringSets(usize),
    #[error("malformed code file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
