use thiserror::Error;

use crate::ooc::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("modulus {modulus:?} is reducible, divisible by {factor:?}")]
    ReducibleModulus { modulus: Vec<u32>, factor: Vec<u32> },

    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u64),

    #[error("element with encoding {0} does not generate the multiplicative group")]
    NotPrimitive(u32),

    #[error("zero has no discrete logarithm")]
    ZeroLog,

    #[error("element is not in the subfield of order {order}")]
    NotInSubfield { order: u64 },

    #[error("no subfield of order {order} in a field of order {field_order}")]
    NoSuchSubfield { order: u64, field_order: u64 },

    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,

    #[error("subspaces have different dimensions ({0} and {1})")]
    DimensionMismatch(usize, usize),

    #[error("subspaces {0} and {1} are equal")]
    DuplicateSubspace(usize, usize),

    #[error("representatives {0} and {1} generate the same orbit")]
    OrbitsOverlap(usize, usize),

    #[error("minimum distance undefined: the code holds a single subspace")]
    SingleSubspaceCode,

    #[error("constructed subspace has dimension {got}, expected {expected}")]
    DegenerateSubspace { got: usize, expected: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no Sidon space found: {0}")]
    NoSidonSpace(String),

    #[error("no b makes x^2 + b x + w irreducible")]
    NoIrreducibleQuadratic,

    #[error("index {index} out of range for length {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("lambda = {lambda} must satisfy 0 < lambda < w = {w}")]
    LambdaNotBelowWeight { lambda: u64, w: u64 },

    #[error("weight {w} exceeds length {n}")]
    WeightExceedsLength { w: u64, n: u64 },

    #[error("Johnson bound is zero; ratio undefined")]
    ZeroJohnsonBound,

    #[error("members {0} and {1} differ in size or length")]
    SizeMismatch(usize, usize),

    #[error("members {0} and {1} are equal")]
    DuplicateMember(usize, usize),

    #[error("empty family")]
    EmptyFamily,

    #[error("set {0} contains zero")]
    ZeroInSet(usize),

    #[error("verification failed: max_auto = {}, max_cross = {}", .0.max_auto, .0.max_cross)]
    VerificationFailed(Box<VerificationReport>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
