use thiserror::Error;

use crate::nodes::NodeError;
use crate::omega::OmegaError;
use crate::parse::ParseError;
use crate::poly::PolyError;
use crate::set::SetError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Omega(#[from] OmegaError),
    #[error(transparent)]
    Node(#[from] NodeError),
    #[error("type has {omega} digits but {nodes} nodes were given")]
    LengthMismatch { omega: usize, nodes: usize },
    #[error("{n} nodes requested but the set has only {available} points")]
    TooManyNodes { n: usize, available: usize },
    #[error("the set is finite")]
    FiniteSet,
    #[error("variant {0} needs an even degree")]
    BadVariantParity(&'static str),
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooLow { target: usize, degree: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("polynomial is not positive on (-1, 1); its Lorentz degree is infinite")]
    NotAdmissible,
    #[error("no nonnegative representation up to degree {0}")]
    CapExceeded(usize),
    #[error("enumeration exceeds {0} patterns")]
    TooLarge(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("oracle disagreement: {0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
