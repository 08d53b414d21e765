use thiserror::Error;

/// Errors raised by the algebraic, classification and numeric routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("gamma quotient is not rational: {0}")]
    IrreducibleGammaQuotient(String),

    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("K-type {key} lies beyond the truncation {truncation}")]
    TruncationTooSmall { key: i64, truncation: i64 },

    #[error("weight {weight} is not a weight of the K-type {ktype}")]
    WeightNotInKType { weight: i64, ktype: i64 },

    #[error("(sigma={sigma}, lambda={lambda}) is not a reducibility point")]
    NotReduciblePoint { sigma: i64, lambda: String },

    #[error("source K-type {src} differs from target K-type {dst}")]
    SrcDstMismatch { src: u32, dst: u32 },

    #[error("map does not lie in the algebra: {0}")]
    NotInAlgebra(String),

    #[error("defect did not divide by p_m at m={m}; this is a bug")]
    InternalNonDivisibility { m: u32 },

    #[error("evaluation point {0} is too close to a pole")]
    PoleProximity(String),

    #[error("quadrature did not converge: coarse={coarse}, fine={fine}")]
    ConvergenceNotReached { coarse: String, fine: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
