//! Spectral sets and translational tilings for unions of two intervals on
//! the real line.
//!
//! A measure-one region `(0, r) ∪ (a, a+1−r)` admits an orthonormal basis of
//! exponentials exactly when it tiles the line by translations, and both
//! properties are decided by two exact arithmetic conditions: the gap `a − r`
//! is an integer, or `r = 1/2` and `2a` is an integer. This crate decides the
//! dichotomy in exact rational arithmetic, constructs the witnesses (the
//! integer lattice or `2ℤ ∪ (p/n + 2ℤ)` as a spectrum; a periodic translation
//! set as a tiling), and verifies them through independent routes:
//!
//! * exact congruence classification of the zeros of the indicator transform;
//! * Gram matrices of truncated exponential families;
//! * Parseval partial sums with analytic tail bounds;
//! * exact rational sweep-line coverage of proposed tilings;
//! * grid scans of the transform modulus reconciled against the classifier.
//!
//! ```
//! use biinterval_core::{canonicalize, classify_region, rat, RawIntervalPair};
//!
//! let raw = RawIntervalPair::new(rat(0, 1), rat(1, 3), rat(4, 3), rat(2, 1)).unwrap();
//! let (region, map) = canonicalize(&raw).unwrap();
//! assert!(map.is_identity());
//! assert!(classify_region(&region).is_spectral());
//! ```

pub mod error;
pub mod fourier;
pub mod rational;
pub mod region;
pub mod spectra;
pub mod tiling;
pub mod verify;

pub use error::{Error, Result};
pub use fourier::{
    classify_frequency, difference_set_in_zeros, ft_indicator, OrthogonalityReport, ZeroClass,
    SMALL_LAMBDA_THRESHOLD,
};
pub use rational::{
    format_rational, parse_rational, rat, rationalize, to_f64, RatInterval, Rational,
};
pub use region::{
    canonicalize, classify_region, AffineMap, BiIntervalRegion, CaseSelector, Classification,
    RawIntervalPair,
};
pub use spectra::{
    alpha_partition, build_spectrum, enumerate_frequencies, gram_matrix, inner_product,
    parseval_sum, parseval_sum_real, parseval_tail_bound, s_tilde_partial, AlphaClass,
    AlphaPartition, GramMatrix, ParsevalReport, STildeReport, SpectrumSpec,
};
pub use tiling::{
    alternation_check, build_tiling, classify_tiles, verify_tiling, AlternationReport,
    AlternationViolation, CoverageReport, TilingSpec,
};
pub use verify::{
    predicted_zeros, random_region_driver, reconcile, sample_region, scan_zeros, DriverSummary,
    MatchedZero, RealWindow, ZeroCandidate, ZeroScanReport,
};
