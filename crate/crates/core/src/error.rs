use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown or unsupported Cartan type `{0}`")]
    UnknownCartanType(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gcd of pairings is {0}, no weight pairs to 1")]
    GcdNotOne(i64),
    #[error("not a root of the datum")]
    NotARoot,
    #[error("invalid simple index {0}")]
    InvalidIndex(usize),
    #[error("word is not reduced for the given element")]
    NotReduced,
    #[error("affine form is identically zero")]
    ZeroForm,
    #[error("division by a fraction that is not a monomial in root forms")]
    NotInvertible,
    #[error("malformed graded module slice: {0}")]
    MalformedSlice(String),
    #[error("no solution with degree bound {0}")]
    NoSolution(usize),
    #[error("element is not a finite Weyl group element")]
    NotFinite,
    #[error("product left the theta-basis span: coefficient at {0} is not polynomial")]
    NotAMember(String),
}
