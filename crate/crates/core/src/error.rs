use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree m={0} is outside the supported range 1..=16")]
    DegreeOutOfRange(u32),

    #[error("polynomial {poly:#x} has degree {found}, expected {expected}")]
    PolynomialDegree {
        poly: u32,
        expected: u32,
        found: u32,
    },

    #[error("polynomial {poly:#x} is reducible: divisible by {factor:#x}")]
    Reducible { poly: u32, factor: u32 },

    #[error("division by zero in F_2^{0}")]
    DivisionByZero(u32),

    #[error("Gray map is defined on R only; symbol has coefficient {0:#x} outside {{0,1}}")]
    NotInBaseRing(u32),

    #[error("{0} is not a valid omega: it must be a root of X^2+X+1")]
    InvalidOmega(u32),

    #[error("positions must be a permutation of the unit group")]
    InvalidPositions,

    #[error(
        "exhaustive enumeration at m={m} exceeds the limit m<={limit}; pass force to override"
    )]
    ResourceGuard { m: u32, limit: u32 },

    #[error("{0}")]
    Domain(String),

    #[error("malformed generator matrix dump: {0}")]
    MalformedDump(String),
}
