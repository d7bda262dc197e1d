use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("generators are not coprime (gcd = {gcd})")]
    NotCoprime { gcd: usize },
    #[error("the semigroup is all of N (Frobenius number -1)")]
    TrivialSemigroup,
    #[error("{n} does not belong to the semigroup")]
    NotMember { n: usize },
    #[error("{x} is not a minimal generator")]
    NotMinimalGenerator { x: usize },
    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),
    #[error("invalid Kunz-coordinates vector: {0}")]
    InvalidKunz(String),
    #[error("invalid Apery set: {0}")]
    CorruptAperySet(String),
    #[error("Frobenius numbers differ ({left} vs {right})")]
    FrobeniusMismatch { left: usize, right: usize },
    #[error("vectors belong to different congruence classes")]
    NotSameClass,
    #[error("semigroup is not irreducible")]
    NotIrreducible,
    #[error("semigroup is not homogeneous")]
    NotHomogeneous,
    #[error("{d} is not in the difference set")]
    NotInDSet { d: usize },
    #[error("binary system is infeasible")]
    Infeasible,
    #[error("member limit of {limit} exceeded")]
    LimitExceeded { limit: usize },
    #[error("Frobenius number {frobenius} exceeds the oracle ceiling {ceiling}")]
    TooLarge { frobenius: usize, ceiling: usize },
    #[error("Frobenius number must be positive")]
    ZeroFrobenius,
}

pub type Result<T> = std::result::Result<T, Error>;
