use thiserror::Error;

/// Errors raised by the engine.
///
/// Most variants signal a violated precondition. A few (`NotDivisible`,
/// `NotDivisibleByVandermonde`, `InverseNotPolynomial`, `SingularGram`,
/// `PolynomialityViolation`) can only fire when an identity the engine relies
/// on is broken, so they indicate a bug rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative power of a parameter specialized to zero")]
    PoleAtZero,
    #[error("partition {partition} has more than {k} parts")]
    LengthExceedsK { partition: String, k: usize },
    #[error("partition {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("alphabet coefficient has a pole at power {power}")]
    PoleInCoefficient { power: usize },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("degree {degree} exceeds alphabet size {vars}")]
    DegreeExceedsAlphabet { degree: usize, vars: usize },
    #[error("antisymmetric numerator is not divisible by the Vandermonde determinant")]
    NotDivisibleByVandermonde,
    #[error("alphabet of {vars} variables is too small for degree {degree}")]
    AlphabetTooSmall { degree: usize, vars: usize },
    #[error("triangular inverse is not polynomial")]
    InverseNotPolynomial,
    #[error("input degree {degree} exceeds operator cap {cap}")]
    CapExceeded { degree: usize, cap: usize },
    #[error("coefficient at (lambda={lambda}, mu={mu}) is not in Z[q,t]: {coeff}")]
    PolynomialityViolation { lambda: String, mu: String, coeff: String },
    #[error("Gram matrix is singular")]
    SingularGram,
    #[error("coefficient is not integral: {0}")]
    NonIntegral(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse { pos: e.column(), msg: e.to_string() }
    }
}
