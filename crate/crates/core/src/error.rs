use thiserror::Error;

/// Errors raised by the semigroup, invariant and criteria layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not numerical: generators {gens:?} have gcd {gcd}")]
    NotNumerical { gens: Vec<u64>, gcd: u64 },
    #[error("modulus {0} not in semigroup")]
    ModulusNotInSemigroup(u64),
    #[error("invalid multiplicity {m}: {reason}")]
    InvalidMultiplicity { m: u64, reason: String },
    #[error("not a semigroup: shifted Apéry set {0:?} is not closed under addition")]
    NotASemigroup(Vec<u64>),
    #[error("already smooth: cannot blow up the semigroup of non-negative integers")]
    AlreadySmooth,
    #[error("not a plane-branch semigroup: {0}")]
    NotPlaneBranch(String),
    #[error("inadmissible multiplicity sequence {seq}: {reason}")]
    InadmissibleMultSeq { seq: String, reason: String },
    #[error("invalid Newton pairs: {0}")]
    InvalidNewtonPairs(String),
    #[error("invalid degree {0}")]
    InvalidDegree(u64),
    #[error("Spin^c index {a} out of range for d = {d}")]
    SpincOutOfRange { a: u64, d: u64 },
    #[error("not a candidate: 2*delta = {two_delta} but (d-1)(d-2) = {expected} for d = {d}")]
    NotCandidate {
        d: u64,
        two_delta: u64,
        expected: u64,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("invalid catalog parameters: {0}")]
    CatalogParams(String),
    #[error("rectangle too large: {points} lattice points exceed the cap of {cap}")]
    RectangleTooLarge { points: usize, cap: usize },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
