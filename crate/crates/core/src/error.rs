use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {m} does not divide the ring parameter {l}")]
    LabelNotInRing { m: u32, l: u32 },

    #[error("inverse of zero")]
    DivisionByZero,

    #[error("invalid Coxeter graph: {0}")]
    InvalidGraph(String),

    #[error("unknown or non-finite Coxeter type `{0}`")]
    UnknownType(String),

    #[error("root generation exceeded the cap of {cap} positive roots")]
    FinitenessExceeded { cap: usize },

    #[error("{roots} positive roots do not fit in a {max}-bit root subset")]
    TooManyRoots { roots: usize, max: usize },

    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("element is not a reflection")]
    NotAReflection,

    #[error("subset oracle over {roots} roots exceeds the cap of {cap} roots")]
    OracleTooLarge { roots: usize, cap: usize },

    #[error("no upper bound exists")]
    NoUpperBound,

    #[error("the minimal upper bound is not unique")]
    NonUniqueMinimal,

    #[error("operation requires a group of type {0}")]
    WrongType(&'static str),

    #[error("transposition ({a} {b}) is not in the transitive closure")]
    NotInClosure { a: usize, b: usize },

    #[error("path does not end at a reflection")]
    NotEndingAtReflection,

    #[error("linking property violated at selected transposition {step}")]
    LinkingViolation { step: usize },

    #[error("path does not increase length at step {step}")]
    LengthNotIncreasing { step: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
