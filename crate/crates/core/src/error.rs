use thiserror::Error;

use crate::rational::Rational;

/// Errors produced by region validation, witness construction, and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("interval ({lo}, {hi}) has non-positive length")]
    EmptyInterval { lo: Rational, hi: Rational },

    #[error("intervals ({0}, {1}) and ({2}, {3}) overlap on a set of positive measure")]
    OverlappingIntervals(Rational, Rational, Rational, Rational),

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("region is not spectral: the gap is non-integral and it is not a half-half region")]
    NotSpectral,

    #[error("region does not admit the requested case")]
    CaseUnavailable,

    #[error("spectrum offset numerator must be odd, got {0}")]
    EvenP(i64),

    #[error("region does not tile: the gap is non-integral and it is not a half-half region")]
    NotATile,

    #[error("value {0} is outside the domain (0, 1)")]
    DomainError(f64),

    #[error("tiling does not cover the window exactly")]
    NotVerified,

    #[error("invalid rational literal {0:?} (expected `p` or `p/q` with q > 0)")]
    InvalidRational(String),

    #[error("invalid tiling spec: {0}")]
    InvalidTiling(String),
}

pub type Result<T> = std::result::Result<T, Error>;
