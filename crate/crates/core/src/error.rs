use thiserror::Error;

use crate::braid::BraidError;
use crate::coeff::CoeffError;
use crate::hecke::HeckeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("operation needs at least one singular crossing")]
    DegreeZero,
    #[error("functional index {k} out of range for degree {degree}")]
    IndexOutOfRange { k: usize, degree: usize },
    #[error("pairing matrix of degree {degree} is singular")]
    SingularPairingMatrix { degree: usize },
    #[error("degree {degree} exceeds the limit {max}")]
    DegreeCapExceeded { degree: usize, max: usize },
    #[error("{strands} strands exceed the limit {max}")]
    StrandCapExceeded { strands: usize, max: usize },
    #[error("class is not homogeneous of positive degree")]
    NonHomogeneous,
    #[error("invalid limits: {0}")]
    InvalidLimits(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
