//! Error types shared across the crate.

use thiserror::Error;

use crate::text::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension list must not be empty")]
    EmptyDims,

    #[error("site {site} has dimension 0; every site dimension must be at least 1")]
    ZeroDimension { site: usize },

    #[error("profile arithmetic overflowed; dimensions are too large")]
    ProfileTooLarge,

    #[error("site index {index} out of range for {sites} sites")]
    SiteIndexOutOfRange { index: usize, sites: usize },

    #[error("elements belong to different dimension profiles")]
    ProfileMismatch,

    #[error("closure exceeded the element cap of {cap}")]
    ElementCapExceeded { cap: usize },

    #[error("matrix dimension {dim} exceeds the dense cap of {cap}")]
    MatrixCapExceeded { dim: u64, cap: u64 },

    #[error("monomial matrices have mismatched size or phase modulus")]
    MatrixShapeMismatch,

    #[error("dimension {dim} does not divide the profile lcm {lcm}")]
    IncompatibleDimension { dim: u32, lcm: u64 },

    #[error("the dimension formula applies only to nontrivial stabilizers")]
    TrivialStabilizer,

    #[error("generating-set search exceeded its budget of {budget} closures")]
    SearchBudgetExceeded { budget: usize },

    #[error("max_generators was {max}; supported values are 0 through 3")]
    MaxGeneratorsOutOfRange { max: usize },

    #[error("projector trace {re}{im:+}i is not within tolerance of an integer")]
    NonIntegerTrace { re: f64, im: f64 },

    #[error(transparent)]
    Parse(#[from] ParseError),
}
