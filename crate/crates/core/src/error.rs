use thiserror::Error;

/// Errors produced by the library's fallible operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A `Sector` whose fields violate the sector invariants.
    #[error("invalid sector: {0}")]
    InvalidSector(String),

    /// An operation on a quasi-polynomial would leave the closed family
    /// (negative leading power with a non-vanishing coefficient).
    #[error("closure violation: {0}")]
    ClosureViolation(String),

    /// A sample or grid node fell within the exclusion margin of an
    /// angular coordinate singularity.
    #[error("singular sample: {0}")]
    SingularSample(String),

    /// A radial grid violating the discretization invariants.
    #[error("invalid grid: {0}")]
    Grid(String),

    /// Invalid model parameters.
    #[error("invalid parameters: {0}")]
    Params(String),
}

pub type Result<T> = std::result::Result<T, Error>;
