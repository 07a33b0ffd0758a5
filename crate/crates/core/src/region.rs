//! Two-interval regions: input validation, reduction to the unit-measure
//! normal form `(0, r) ∪ (a, a+1−r)` with `0 < r ≤ 1/2` and `a ≥ r`, and the
//! case classification that decides both the spectral and the tiling property.
//!
//! Any disjoint pair of non-degenerate intervals can be carried onto the
//! normal form by scaling, translation, and (when the first interval is the
//! longer one) a reflection. The classification then reads off two exact
//! arithmetic conditions:
//!
//! * case (i): the gap `a − r` between the intervals is an integer;
//! * case (ii): `r = 1/2` and `2a` is an integer `n`.
//!
//! A region is spectral — equivalently, tiles the line — exactly when at
//! least one case holds. Both may hold at once (`r = 1/2` with an odd `n`).

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{rat, serde_rational, Rational};

/// A pair of disjoint intervals on the line, in raw (unnormalized)
/// coordinates. The two intervals may appear in either spatial order and may
/// share an endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawIntervalPair {
    #[serde(with = "serde_rational")]
    pub i1_lo: Rational,
    #[serde(with = "serde_rational")]
    pub i1_hi: Rational,
    #[serde(with = "serde_rational")]
    pub i2_lo: Rational,
    #[serde(with = "serde_rational")]
    pub i2_hi: Rational,
}

impl RawIntervalPair {
    pub fn new(i1_lo: Rational, i1_hi: Rational, i2_lo: Rational, i2_hi: Rational) -> Result<Self> {
        let pair = RawIntervalPair {
            i1_lo,
            i1_hi,
            i2_lo,
            i2_hi,
        };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        if self.i1_hi <= self.i1_lo {
            return Err(Error::EmptyInterval {
                lo: self.i1_lo,
                hi: self.i1_hi,
            });
        }
        if self.i2_hi <= self.i2_lo {
            return Err(Error::EmptyInterval {
                lo: self.i2_lo,
                hi: self.i2_hi,
            });
        }
        if self.i1_hi <= self.i2_lo || self.i2_hi <= self.i1_lo {
            Ok(())
        } else {
            Err(Error::OverlappingIntervals(
                self.i1_lo, self.i1_hi, self.i2_lo, self.i2_hi,
            ))
        }
    }

    pub fn total_length(&self) -> Rational {
        (self.i1_hi - self.i1_lo) + (self.i2_hi - self.i2_lo)
    }

    /// The two intervals sorted by left endpoint.
    fn ordered(&self) -> ((Rational, Rational), (Rational, Rational)) {
        if self.i1_lo <= self.i2_lo {
            ((self.i1_lo, self.i1_hi), (self.i2_lo, self.i2_hi))
        } else {
            ((self.i2_lo, self.i2_hi), (self.i1_lo, self.i1_hi))
        }
    }

    /// Set equality of the two interval pairs, ignoring order.
    pub fn same_set(&self, other: &RawIntervalPair) -> bool {
        self.ordered() == other.ordered()
    }
}

/// A region `(0, r) ∪ (a, a+1−r)` in normal form: total measure one, first
/// interval no longer than the second (`0 < r ≤ 1/2`), second interval
/// starting at or after the end of the first (`a ≥ r`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiIntervalRegion {
    #[serde(with = "serde_rational")]
    r: Rational,
    #[serde(with = "serde_rational")]
    a: Rational,
}

impl BiIntervalRegion {
    pub fn new(r: Rational, a: Rational) -> Result<Self> {
        if r <= Rational::zero() || r > rat(1, 2) {
            return Err(Error::InvalidRegion(format!(
                "r = {r} must satisfy 0 < r <= 1/2"
            )));
        }
        if a < r {
            return Err(Error::InvalidRegion(format!(
                "a = {a} must satisfy a >= r = {r}"
            )));
        }
        Ok(BiIntervalRegion { r, a })
    }

    pub fn r(&self) -> Rational {
        self.r
    }

    pub fn a(&self) -> Rational {
        self.a
    }

    /// Gap `a − r` between the two intervals (zero when they touch).
    pub fn gap(&self) -> Rational {
        self.a - self.r
    }

    /// Right endpoint `a + 1 − r` of the second interval.
    pub fn extent(&self) -> Rational {
        self.a + Rational::from_integer(1) - self.r
    }

    /// The two intervals of the region, in position order.
    pub fn intervals(&self) -> [(Rational, Rational); 2] {
        let parts = [(Rational::zero(), self.r), (self.a, self.extent())];
        // total measure is one by construction
        debug_assert_eq!(
            (parts[0].1 - parts[0].0) + (parts[1].1 - parts[1].0),
            Rational::from_integer(1)
        );
        parts
    }
}

impl std::fmt::Display for BiIntervalRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(0, {}) u ({}, {})", self.r, self.a, self.extent())
    }
}

/// Orientation-aware affine map carrying the canonical region back onto the
/// raw input. The forward direction is `x ↦ scale·x + shift`, followed by a
/// reflection about the midpoint of the raw region's convex hull when
/// `reflected` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    #[serde(with = "serde_rational")]
    pub scale: Rational,
    #[serde(with = "serde_rational")]
    pub shift: Rational,
    pub reflected: bool,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            scale: Rational::from_integer(1),
            shift: Rational::zero(),
            reflected: false,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineMap::identity()
    }

    /// Image of the canonical region under this map, as a raw interval pair
    /// in position order.
    pub fn apply(&self, region: &BiIntervalRegion) -> RawIntervalPair {
        let fwd = |x: Rational| self.shift + self.scale * x;
        let [c1, c2] = region.intervals();
        let (first, second) = if self.reflected {
            // reflect about the hull midpoint: x ↦ hull_lo + hull_hi − x
            let sum = fwd(Rational::zero()) + fwd(region.extent());
            let refl = |x: Rational| sum - fwd(x);
            ((refl(c2.1), refl(c2.0)), (refl(c1.1), refl(c1.0)))
        } else {
            ((fwd(c1.0), fwd(c1.1)), (fwd(c2.0), fwd(c2.1)))
        };
        RawIntervalPair {
            i1_lo: first.0,
            i1_hi: first.1,
            i2_lo: second.0,
            i2_hi: second.1,
        }
    }
}

/// Which of the two admissible cases a region satisfies. Both flags are
/// computed independently; both may be set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// The gap `a − r` is an integer.
    pub case_i: bool,
    /// Present with value `n = 2a` when `r = 1/2` and `2a` is an integer.
    pub case_ii_n: Option<i64>,
}

impl Classification {
    /// A region is spectral, and tiles, exactly when some case holds.
    pub fn is_spectral(&self) -> bool {
        self.case_i || self.case_ii_n.is_some()
    }
}

/// Selects a case for the construction operations when a region admits both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseSelector {
    /// Prefer case (i) when admitted, otherwise case (ii).
    Auto,
    CaseI,
    CaseII,
}

/// Reduces a raw interval pair to normal form, returning the canonical region
/// together with the affine map that reproduces the input.
///
/// The total measure is scaled to one, the shorter interval is moved first
/// (reflecting about the hull midpoint when necessary), and equal-length
/// inputs keep their orientation.
pub fn canonicalize(raw: &RawIntervalPair) -> Result<(BiIntervalRegion, AffineMap)> {
    raw.validate()?;
    let (first, second) = raw.ordered();
    let len1 = first.1 - first.0;
    let len2 = second.1 - second.0;
    let total = len1 + len2;
    let reflected = len1 > len2;
    let (r, a) = if reflected {
        // reflection swaps the roles: the mirrored second interval leads
        (len2 / total, (second.1 - len1 - first.0) / total)
    } else {
        (len1 / total, (second.0 - first.0) / total)
    };
    let region = BiIntervalRegion::new(r, a)?;
    let map = AffineMap {
        scale: total,
        shift: first.0,
        reflected,
    };
    Ok((region, map))
}

/// Exact case classification of a canonical region.
pub fn classify_region(region: &BiIntervalRegion) -> Classification {
    let case_i = region.gap().is_integer();
    let two_a = region.a() * 2;
    let case_ii_n = (region.r() == rat(1, 2) && two_a.is_integer()).then(|| two_a.to_integer());
    Classification { case_i, case_ii_n }
}
