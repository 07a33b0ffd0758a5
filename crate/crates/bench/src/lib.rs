//! Shared fixtures for the benchmark targets.

use biinterval_core::{rat, BiIntervalRegion, RawIntervalPair};

/// Integer-gap region `r = 1/3`, `a = 4/3`.
pub fn integer_gap_region() -> BiIntervalRegion {
    BiIntervalRegion::new(rat(1, 3), rat(4, 3)).unwrap()
}

/// Half-half region `r = 1/2`, `a = 3/2`.
pub fn half_half_region() -> BiIntervalRegion {
    BiIntervalRegion::new(rat(1, 2), rat(3, 2)).unwrap()
}

/// A raw pair that needs scaling, shifting, and reflection.
pub fn awkward_raw_pair() -> RawIntervalPair {
    RawIntervalPair {
        i1_lo: rat(-7, 3),
        i1_hi: rat(5, 6),
        i2_lo: rat(3, 2),
        i2_hi: rat(9, 4),
    }
}
