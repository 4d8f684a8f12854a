use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("incompatible algebras")]
    IncompatibleAlgebras,
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("unit has no cyclic class")]
    UnitHasNoCyclicClass,
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("degree mismatch for {pair}: expected {expected}, found {found}")]
    Degree {
        pair: String,
        expected: i64,
        found: i64,
    },
    #[error("antisymmetry inconsistency for {0}")]
    Antisymmetry(String),
    #[error("colour violation: {0}")]
    Colour(String),
    #[error("duplicate entry for {0}")]
    DuplicateEntry(String),
    #[error("not a linear bracket")]
    NotLinear,
    #[error("not a quadratic bracket")]
    NotQuadratic,
    #[error("base algebra is nontrivial")]
    NontrivialBase,
    #[error("base algebra is not free: {0}")]
    NonFreeBase(String),
    #[error("input is not double Poisson")]
    NotDoublePoisson,
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unresolved name '{0}'")]
    Unresolved(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
